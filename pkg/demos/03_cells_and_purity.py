"""The covector cell decomposition: types of points, dimension, purity.

Every point gets a covector recording, for each coordinate, which
generators can reach it in a maximising combination.  Cells with no empty
component tile the polytope; the dimension of a cell is the number of
connected components of its coordinate graph.
"""

from tropcheck import Matrix, Polytope, cell_complex, column_space, covector, pure_dimension

triangle = column_space(Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]]))

print("covector of the corner (0,0,0):", covector((0, 0, 0), triangle))
print("covector of an interior point: ", covector((0, 1, 2), triangle))

report = cell_complex(triangle)
print()
print("triangle cell complex: tropical dimension", report.tropical_dim, "| pure:", report.pure)
for face in report.covering_faces():
    kind = {3: "area", 2: "edge", 1: "corner"}[face.dim]
    print(f"  dim {face.dim} {kind:6s} covector {tuple(sorted(c) for c in face.covector)}")

print()
spike = Polytope([(0, 0, 0), (5, -2, 0), (5, 5, 0)])
pure, dim = pure_dimension(spike)
print("triangle with a spike: tropical dimension", dim, "| pure:", pure)
print("  the spike is a one-dimensional piece hanging off the two-dimensional body,")
print("  so some points never see a top-dimensional cell")

tripod = Polytope([(-2, 0, 0), (3, 3, 0), (0, -3, 0)])
pure, dim = pure_dimension(tripod)
print("tripod (three points on a tropical line): tropical dimension", dim, "| pure:", pure)

"""Tropical polytopes: membership, extremal generators, and the dimension family.

A polytope is the set of max-plus combinations of finitely many points.
Its generator dimension counts the extremal generators; its dual dimension
is the generator dimension of the row space and equals the least k such
that the polytope embeds linearly into FT^k.
"""

from tropcheck import Matrix, Polytope, column_space

p = Polytope([(0, 0), (0, -3), (0, -1)])
print("generators (canonical):", p.generators)
print("extremal generators:   ", p.extremals().generators)
print("  (0,-1) is max((-1) + (0,0), 0 + (0,-3)) coordinatewise, so it is redundant")

print()
x = (0, -1)
print(f"membership of {x}: coefficients =", p.coefficients(x))
print(f"membership of (0,-4):", (0, -4) in p)

print()
triangle = column_space(Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]]))
print("triangle column space:")
print("  generator dimension:", triangle.generator_dimension())
print("  dual dimension:     ", triangle.dual_dimension())

wide = Polytope([(0, 0, 0), (0, 4, 0), (3, -2, 0), (6, -2, 0)])
print("four extremal points in FT^3:")
print("  generator dimension:", wide.generator_dimension())
print("  dual dimension:     ", wide.dual_dimension())
report = wide.embed_minimal()
print("  so it embeds into FT^%d keeping rows %s" % (report.target_dim, report.row_selection))
print("  the embedded copy keeps generator dimension", report.embedded.generator_dimension())

print()
print("min-plus convexity (closure under componentwise minimum):")
print("  triangle:", triangle.is_min_plus_convex())
spike = Polytope([(0, 0, 0), (5, -2, 0), (5, 5, 0)])
print("  triangle with a spike:", spike.is_min_plus_convex())

"""Render the gallery of example polytopes as deterministic SVG files.

Each polytope in FT^3 is drawn in projective coordinates
(x1 - x3, x2 - x3): two-dimensional cells shaded gray, one-dimensional
cells as segments, extremal generators as solid dots.
"""

import pathlib

from tropcheck import Matrix, Polytope, render_polytope_svg, row_space

out = pathlib.Path(__file__).resolve().parent / "plots"
out.mkdir(exist_ok=True)

gallery = {
    "triangle": row_space(Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]])),
    "segment": Polytope([(0, 0, 0), (2, 1, 0)]),
    "hexagon": Polytope([(1, 3, 0), (3, 1, 0), (0, 0, 0)]),
    "spike": Polytope([(0, 0, 0), (5, -2, 0), (5, 5, 0)]),
    "tripod": Polytope([(-2, 0, 0), (3, 3, 0), (0, -3, 0)]),
    "wide": Polytope([(0, 0, 0), (0, 4, 0), (3, -2, 0), (6, -2, 0)]),
}

for name, polytope in gallery.items():
    path = out / f"{name}.svg"
    path.write_text(render_polytope_svg(polytope), encoding="utf-8")
    print(f"wrote {path} ({polytope.generator_dimension()} extremal generators)")

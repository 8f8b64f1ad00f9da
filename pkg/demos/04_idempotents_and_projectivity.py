"""Idempotent matrices, von Neumann regularity, and projective polytopes.

A polytope is projective exactly when its generator and dual dimensions
agree and its minimal embedding is the column space of an idempotent
matrix; full-rank idempotent column spaces admit exactly one idempotent,
which the infimum construction recovers bit for bit.
"""

from tropcheck import (
    BOTTOM,
    Matrix,
    Polytope,
    canonical_projection,
    column_space,
    greens_r,
    is_idempotent,
    is_projective,
    recover_idempotent,
    regularity_witness,
)

e = Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]])
print("E =", e)
print("idempotent:", is_idempotent(e), "| regular:", regularity_witness(e).regular)

space = column_space(e)
verdict = is_projective(space)
print("column space projective:", verdict.projective, "| reason:", verdict.reason)
print("witness idempotent == E:", verdict.idempotent == e)
print("recovered from the span:", recover_idempotent(space) == e)

print()
print("the idempotent action projects any input onto the span:")
def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


basis1 = (0, BOTTOM, BOTTOM)
print("  E e_0 =", show(canonical_projection(e, basis1)), "= first column")
x = (0, 0, 1)
print(f"  E {x} =", show(canonical_projection(e, x)), "(least member above the input)")

print()
print("column spaces classify matrices up to the R-relation:")
permuted = Matrix.from_columns([e.col(2), e.col(0), e.col(1)])
print("  E vs its column permutation:", greens_r(e, permuted))

print()
tripod = Polytope([(-2, 0, 0), (3, 3, 0), (0, -3, 0)])
v = is_projective(tripod)
print("tripod projective:", v.projective, "| reason:", v.reason)
wide = Polytope([(0, 0, 0), (0, 4, 0), (3, -2, 0), (6, -2, 0)])
v = is_projective(wide)
print("wide polytope projective:", v.projective, "| reason:", v.reason,
      f"(gendim {v.gendim} vs dualdim {v.dualdim})")

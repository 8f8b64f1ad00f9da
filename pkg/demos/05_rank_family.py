"""The rank family: row rank, column rank, tropical rank.

For regular (in particular idempotent) matrices all three agree; in
general the tropical rank is a lower bound and the two generator ranks can
differ from each other once matrices are large enough.
"""

from tropcheck import Matrix, rank_report, regularity_witness
from tropcheck.oracles import tropical_rank_oracle

e = Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]])
r = rank_report(e)
print("idempotent triangle matrix:", r)
print("  permutation-uniqueness oracle agrees:", tropical_rank_oracle(e) == r.tropical_rank)

z = Matrix([[0, 0, 0]] * 3)
print("all-zero matrix:", rank_report(z))

# rows are four extremal generators, but the duplicated last column keeps
# the column space three-generated
gap = Matrix(
    [
        [0, 0, 0, 0],
        [0, 4, 0, 0],
        [3, -2, 0, 0],
        [6, -2, 0, 0],
    ]
)
r = rank_report(gap)
print("rank-gap matrix:", r)
print("  row rank and column rank disagree, so the matrix cannot be regular:",
      regularity_witness(gap).regular)
print("  factor rank is sandwiched in [%d, %d]" % (r.tropical_rank, min(r.row_gen_rank, r.col_gen_rank)))

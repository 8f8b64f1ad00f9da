"""Seeded random corpora, brute-force oracles, and cross-validation suites.

Every generator takes a seed (or a shared `random.Random`) and is fully
reproducible.  Entries default to small integers: integer data makes ties
common, which is exactly the hard case for the exact cell combinatorics.

The suites pit independently implemented routes against each other (the
algebraic projectivity pipeline vs the geometric cell computation, the
residuation rank vs the permanent-style submatrix oracle, and so on) and
report any disagreement; an empty failure list is the pass condition.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    is_projective,
    rank_report,
    recover_idempotent,
    regularity_witness,
    metric_closure,
)
from .cells import covector, covector_leq, cell_complex, descend_to_singletons, pure_dimension
from .errors import NonFiniteEntries, ScaleLimitExceeded
from .polytopes import Polytope, canonical_point, column_space, row_space
from .semiring import Matrix, vec_leq, vec_max, vec_min, vec_scale


# ---------------------------------------------------------------------------
# random generation


def _rng(seed, rng):
    if rng is not None:
        return rng
    return random.Random(seed)


def random_entry(rng, lo: int = -5, hi: int = 5, max_den: int = 1) -> Fraction:
    den = rng.randint(1, max_den) if max_den > 1 else 1
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_vector(n: int, *, seed=None, rng=None, lo=-5, hi=5, max_den=1):
    rng = _rng(seed, rng)
    return tuple(random_entry(rng, lo, hi, max_den) for _ in range(n))


def random_matrix(rows: int, cols: int, *, seed=None, rng=None, lo=-5, hi=5, max_den=1) -> Matrix:
    rng = _rng(seed, rng)
    return Matrix._raw(
        tuple(tuple(random_entry(rng, lo, hi, max_den) for _ in range(cols)) for _ in range(rows))
    )


def random_polytope(n: int, m: int, *, seed=None, rng=None, lo=-5, hi=5, max_den=1) -> Polytope:
    rng = _rng(seed, rng)
    return Polytope([random_vector(n, rng=rng, lo=lo, hi=hi, max_den=max_den) for _ in range(m)])


def random_idempotent(n: int, *, seed=None, rng=None, lo=-5, full_rank=False, spread=0) -> Matrix:
    """Metric closure of a random zero-diagonal matrix with non-positive
    off-diagonal entries; strictly negative entries force full rank.

    With spread > 0 the result is conjugated by a random diagonal
    (entry (i, j) shifted by d_i - d_j), which preserves idempotency, the
    zero diagonal and the rank while producing positive entries; every
    zero-diagonal idempotent arises this way from a non-positive one.
    """
    rng = _rng(seed, rng)
    hi = -1 if full_rank else 0
    rows = []
    for i in range(n):
        rows.append(
            tuple(
                Fraction(0) if i == j else random_entry(rng, lo, hi)
                for j in range(n)
            )
        )
    closed = metric_closure(Matrix._raw(tuple(rows)))
    if not spread:
        return closed
    d = [rng.randint(-spread, spread) for _ in range(n)]
    return Matrix._raw(
        tuple(
            tuple(closed.entries[i][j] + d[i] - d[j] for j in range(n))
            for i in range(n)
        )
    )


def random_point(polytope: Polytope, *, seed=None, rng=None, lo=-5, hi=5):
    """A random point of the polytope: a max-plus combination of generators."""
    rng = _rng(seed, rng)
    gens = polytope.generators
    point = vec_scale(random_entry(rng, lo, hi), gens[0])
    for g in gens[1:]:
        point = vec_max(point, vec_scale(random_entry(rng, lo, hi), g))
    return point


def exhaustive_matrices(n: int, entry_set):
    """Every n x n matrix with entries drawn from the finite entry_set."""
    values = [Fraction(v) for v in entry_set]
    for combo in itertools.product(values, repeat=n * n):
        yield Matrix._raw(tuple(combo[i * n : (i + 1) * n] for i in range(n)))


@dataclass(frozen=True)
class Corpus:
    """A reproducible bundle of instances: rebuilt identically from
    (seed, parameters)."""

    seed: int
    kind: str
    parameters: tuple
    instances: tuple


def polytope_corpus(seed: int, count: int, max_n=4, max_m=4, lo=-5, hi=5) -> Corpus:
    rng = random.Random(seed)
    instances = tuple(
        random_polytope(rng.randint(1, max_n), rng.randint(1, max_m), rng=rng, lo=lo, hi=hi)
        for _ in range(count)
    )
    params = (("count", count), ("max_n", max_n), ("max_m", max_m), ("lo", lo), ("hi", hi))
    return Corpus(seed=seed, kind="polytope", parameters=params, instances=instances)


def idempotent_corpus(seed: int, count: int, max_n=4, lo=-5, full_rank=False) -> Corpus:
    rng = random.Random(seed)
    instances = tuple(
        random_idempotent(rng.randint(1, max_n), rng=rng, lo=lo, full_rank=full_rank)
        for _ in range(count)
    )
    params = (("count", count), ("max_n", max_n), ("lo", lo), ("full_rank", full_rank))
    return Corpus(seed=seed, kind="idempotent", parameters=params, instances=instances)


def regular_corpus(seed: int, count: int, max_n=4, lo=-3, hi=3) -> Corpus:
    """Regular square matrices: metric closures plus instances found by
    random search, in alternation."""
    rng = random.Random(seed)
    instances = []
    while len(instances) < count:
        n = rng.randint(1, max_n)
        if len(instances) % 2 == 0:
            instances.append(random_idempotent(n, rng=rng, lo=lo))
            continue
        found = None
        for _ in range(200):
            candidate = random_matrix(n, n, rng=rng, lo=lo, hi=hi)
            if regularity_witness(candidate).regular:
                found = candidate
                break
        instances.append(found if found is not None else random_idempotent(n, rng=rng, lo=lo))
    params = (("count", count), ("max_n", max_n), ("lo", lo), ("hi", hi))
    return Corpus(seed=seed, kind="regular", parameters=params, instances=tuple(instances))


# ---------------------------------------------------------------------------
# brute-force oracles


def tropical_rank_oracle(a: Matrix, limit: int = 5) -> int:
    """Largest r with an r x r submatrix whose optimal permutation is unique.

    The optimum is the maximal tropical permutation sum; uniqueness is
    decided by enumerating all permutations, so this is independent of the
    cell-complex computation it cross-checks.
    """
    if not a.is_finite:
        raise NonFiniteEntries("the rank oracle works on finite matrices")
    top = min(a.rows, a.cols)
    if top > limit:
        raise ScaleLimitExceeded(f"rank oracle enumerates permutations only up to size {limit}")
    for r in range(top, 0, -1):
        for rows in itertools.combinations(range(a.rows), r):
            for cols in itertools.combinations(range(a.cols), r):
                best = None
                hits = 0
                for perm in itertools.permutations(range(r)):
                    total = sum(a.entries[rows[i]][cols[perm[i]]] for i in range(r))
                    if best is None or total > best:
                        best, hits = total, 1
                    elif total == best:
                        hits += 1
                if hits == 1:
                    return r
    return 0


def minplus_sampling_refuter(polytope: Polytope, samples: int = 1000, *, seed=None, rng=None):
    """Search for two points of the polytope whose minimum escapes it.

    One-sided: returns a counterexample pair or None.  Any returned pair is
    re-verified against membership before being reported.
    """
    rng = _rng(seed, rng)
    for _ in range(samples):
        x = random_point(polytope, rng=rng)
        y = random_point(polytope, rng=rng)
        low = vec_min(x, y)
        if low not in polytope:
            if x not in polytope or y not in polytope:
                raise AssertionError("sampled points must belong to the polytope")
            return x, y
    return None


# ---------------------------------------------------------------------------
# cross-validation suites


def _poly_doc(p: Polytope):
    return [[str(e) for e in g] for g in p.generators]


def _mat_doc(a: Matrix):
    return [[str(e) for e in row] for row in a.entries]


def suite_projectivity_geometry(seed=0, count=200, n=4, m=4) -> dict:
    """Algebraic projectivity vs pure dimension = generator = dual dimension."""
    corpus = polytope_corpus(seed, count, max_n=n, max_m=m)
    failures = []
    for p in corpus.instances:
        algebraic = is_projective(p).projective
        pure, dim = pure_dimension(p)
        geometric = pure and dim == p.generator_dimension() == p.dual_dimension()
        if algebraic != geometric:
            failures.append(
                {"generators": _poly_doc(p), "algebraic": algebraic, "geometric": geometric}
            )
    return {"suite": "projectivity-geometry", "instances": len(corpus.instances), "failures": failures}


def full_dimension_polytope(rng, n: int, lo=-5, hi=5, attempts=500) -> Polytope:
    """A polytope in FT^n with generator and dual dimension both n."""
    for _ in range(attempts):
        p = random_polytope(n, n, rng=rng, lo=lo, hi=hi)
        if p.generator_dimension() == n and p.dual_dimension() == n:
            return p
    raise AssertionError(f"no full-dimension polytope found in {attempts} draws")


def suite_projectivity_order(seed=0, count=200, n=4, m=None, refute_samples=200) -> dict:
    """Projectivity vs min-plus convexity on full-dimension polytopes,
    with the sampling refuter as a soundness check on the convex verdicts."""
    del m
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        k = rng.randint(1, n)
        p = full_dimension_polytope(rng, k)
        projective = is_projective(p).projective
        convex = p.is_min_plus_convex()
        if projective != convex:
            failures.append(
                {"generators": _poly_doc(p), "projective": projective, "min_plus_convex": convex}
            )
        elif convex and minplus_sampling_refuter(p, refute_samples, rng=rng) is not None:
            failures.append({"generators": _poly_doc(p), "problem": "refuted a convex verdict"})
    return {"suite": "projectivity-order", "instances": count, "failures": failures}


def suite_rank_equality(seed=0, count=200, n=4, m=None) -> dict:
    """On regular matrices all three ranks agree, and the tropical rank
    matches the permutation-uniqueness oracle."""
    del m
    corpus = regular_corpus(seed, count, max_n=n)
    failures = []
    for a in corpus.instances:
        report = rank_report(a)
        oracle = tropical_rank_oracle(a)
        if not report.all_equal or report.tropical_rank != oracle:
            failures.append({"matrix": _mat_doc(a), "report": vars(report), "oracle": oracle})
    return {"suite": "rank-equality", "instances": len(corpus.instances), "failures": failures}


def suite_idempotent_column_space(seed=0, count=200, n=4, m=None, dominate_samples=100) -> dict:
    """Structure of full-rank idempotent column spaces: zero-diagonal
    extremal columns, inflation, min-plus convexity of both spaces, least
    dominating point, exact recovery, and pure dimension equal to rank."""
    del m
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        k = rng.randint(1, n)
        e = random_idempotent(k, rng=rng, full_rank=True)
        space = column_space(e)
        problems = []

        cols = [e.col(j) for j in range(k)]
        for g in space.extremals().generators:
            if not any(
                canonical_point(cols[j]) == g and e.entries[j][j] == 0 for j in range(k)
            ):
                problems.append("extremal point without a zero-diagonal column")

        for _ in range(3):
            x = random_vector(k, rng=rng)
            if not vec_leq(x, e.apply(x)) or not vec_leq(x, e.left_apply(x)):
                problems.append("idempotent action failed to dominate the argument")

        if not space.is_min_plus_convex() or not row_space(e).is_min_plus_convex():
            problems.append("full-rank idempotent spaces must be min-plus convex")

        x = random_vector(k, rng=rng)
        projected = e.apply(x)
        if projected not in space or not vec_leq(x, projected):
            problems.append("projection must land in the span above the argument")
        for _ in range(dominate_samples):
            z = random_point(space, rng=rng)
            shift = max(xv - zv for xv, zv in zip(x, z))
            dominating = vec_scale(shift, z)
            if not vec_leq(projected, dominating):
                problems.append("found a dominating point below the projection")
                break

        if recover_idempotent(space) != e:
            problems.append("recovery did not reproduce the idempotent bit-exactly")

        if pure_dimension(space) != (True, k):
            problems.append("pure dimension must equal the rank")

        if problems:
            failures.append({"matrix": _mat_doc(e), "problems": problems})
    return {"suite": "idempotent-column-space", "instances": count, "failures": failures}


def suite_singleton_descent(seed=0, count=200, n=4, m=None) -> dict:
    """The descent returns a member with an all-singleton covector
    contained in the covector of the start point."""
    del m
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        k = rng.randint(1, n)
        e = random_idempotent(k, rng=rng, full_rank=bool(rng.getrandbits(1)))
        space = column_space(e)
        x = random_point(space, rng=rng)
        problems = []
        y = descend_to_singletons(e, x)
        cov_y = covector(y, space)
        if any(len(c) != 1 for c in cov_y):
            problems.append("covector of the result is not all singletons")
        if not covector_leq(cov_y, covector(x, space)):
            problems.append("covector of the result is not contained in the start covector")
        if y not in space:
            problems.append("result left the column space")
        if problems:
            failures.append({"matrix": _mat_doc(e), "point": [str(v) for v in x], "problems": problems})
    return {"suite": "singleton-descent", "instances": count, "failures": failures}


def suite_top_cell(seed=0, count=200, n=4, m=None) -> dict:
    """A polytope in FT^n with at most n generators has at most one cell of
    dimension n."""
    del m
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        k = rng.randint(1, n)
        p = random_polytope(k, rng.randint(1, k), rng=rng)
        tops = [f for f in cell_complex(p).faces if f.covering and f.dim == k]
        if len(tops) > 1:
            failures.append({"generators": _poly_doc(p), "top_cells": len(tops)})
    return {"suite": "top-cell", "instances": count, "failures": failures}


def suite_rank_oracle(seed=0, count=200, n=4, m=4) -> dict:
    """On arbitrary matrices the cell-complex tropical rank agrees with the
    permutation-uniqueness oracle."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        a = random_matrix(rng.randint(1, n), rng.randint(1, m), rng=rng)
        computed = rank_report(a).tropical_rank
        oracle = tropical_rank_oracle(a)
        if computed != oracle:
            failures.append({"matrix": _mat_doc(a), "computed": computed, "oracle": oracle})
    return {"suite": "rank-oracle", "instances": count, "failures": failures}


SUITES = {
    "projectivity-geometry": suite_projectivity_geometry,
    "projectivity-order": suite_projectivity_order,
    "rank-equality": suite_rank_equality,
    "rank-oracle": suite_rank_oracle,
    "idempotent-column-space": suite_idempotent_column_space,
    "singleton-descent": suite_singleton_descent,
    "top-cell": suite_top_cell,
}


def run_suite(name: str, *, seed=0, count=200, n=4, m=4) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](seed=seed, count=count, n=n, m=m)

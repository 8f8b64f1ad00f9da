"""Covector decomposition of a tropical polytope: cells, dimension, purity.

Relative to the canonical extremal generators g_0..g_{m-1} of a polytope,
each point x of FT^n has a covector: for every coordinate p the set

    S_p = { i : x_p - g_i[p] <= x_q - g_i[q] for all q }

of generators able to reach x_p in a maximising combination.  The regions
of constant covector tile FT^n into finitely many cells; the cells whose
covector has no empty component are exactly the ones lying inside the
polytope.  The affine dimension of a cell is the number of connected
components of the graph on coordinates that joins p and q whenever S_p and
S_q intersect.

Cells are enumerated through per-generator argmin profiles
A_i = argmin_q (x_q - g_i[q]) rather than covectors: fixing a profile
turns the cell into a pure difference-constraint system (equalities inside
each A_i, strict inequalities out of it), decided exactly by
negative-cycle detection with lexicographic (value, strict-count) weights.
A depth-first search over profiles prunes infeasible prefixes, which cuts
the nominal (2^n - 1)^m candidate grid down to the realizable cells while
visiting exactly the same feasible set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import (
    DimensionMismatch,
    NonFiniteEntries,
    NotIdempotent,
    NotMember,
    NotSquare,
    ScaleLimitExceeded,
)
from .polytopes import Polytope, canonical_point, column_space
from .semiring import Matrix, as_vector

DEFAULT_MAX_TUPLES = 10**7

# encoded weights: value * _UNIT - strict_count, compared as plain ints.
# Simple paths and cycles carry fewer than _UNIT strict edges, so the
# encoding is exactly the lexicographic (value, strict-count) order.
_UNIT = 1024
_INF = 1 << 62


# ---------------------------------------------------------------------------
# covectors


def _argmin_profile(x, gens):
    out = []
    for g in gens:
        diffs = [xq - gq for xq, gq in zip(x, g)]
        low = min(diffs)
        out.append(frozenset(q for q, d in enumerate(diffs) if d == low))
    return tuple(out)


def _profile_covector(profile, n: int):
    return tuple(frozenset(i for i, a in enumerate(profile) if p in a) for p in range(n))


def argmin_profile(x, polytope: Polytope):
    """Per-generator argmin sets of x - g_i, indexed like the canonical generators."""
    x = as_vector(x, finite=True, length=polytope.ambient)
    return _argmin_profile(x, polytope.extremals().generators)


def covector(x, polytope: Polytope):
    """The covector of x relative to the canonical extremal generators."""
    x = as_vector(x, finite=True, length=polytope.ambient)
    gens = polytope.extremals().generators
    return _profile_covector(_argmin_profile(x, gens), polytope.ambient)


def covector_leq(s, t) -> bool:
    """Componentwise set inclusion of covectors."""
    if len(s) != len(t):
        raise DimensionMismatch("covectors of different lengths")
    return all(a <= b for a, b in zip(s, t))


def covector_dimension(cov) -> int:
    """Affine dimension of the cell: components of the coordinate graph."""
    n = len(cov)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in range(n):
        for q in range(p + 1, n):
            if cov[p] & cov[q]:
                ra, rb = find(p), find(q)
                if ra != rb:
                    parent[ra] = rb
    return sum(1 for a in range(n) if find(a) == a)


# ---------------------------------------------------------------------------
# exact feasibility of an argmin profile


def _scaled(gens):
    denom = 1
    for g in gens:
        for e in g:
            denom = lcm(denom, e.denominator)
    scaled = [[e.numerator * (denom // e.denominator) for e in g] for g in gens]
    return scaled, denom


def _edges_for(vi, members, n):
    # constraint x_u - x_w <= c becomes edge (w, u, c); strict edges pay one
    # strictness unit.  Equalities inside the argmin set are chained through
    # the lowest member; one strict edge per outside coordinate suffices.
    ordered = sorted(members)
    rep = ordered[0]
    edges = []
    for b in ordered[1:]:
        c = (vi[rep] - vi[b]) * _UNIT
        edges.append((b, rep, c))
        edges.append((rep, b, -c))
    for q in range(n):
        if q not in members:
            edges.append((q, rep, (vi[rep] - vi[q]) * _UNIT - 1))
    return edges


def _fresh(n):
    dist = [_INF] * (n * n)
    for a in range(n):
        dist[a * n + a] = 0
    return dist


def _insert_edges(dist, n, edges):
    """Add difference constraints to a closed bound matrix.

    Returns the updated closure, the same list when nothing tightened, or
    None as soon as a negative cycle (strictly infeasible system) appears.
    """
    cur = dist
    owned = False
    for w, u, c in edges:
        if c >= cur[w * n + u]:
            continue
        if not owned:
            cur = cur[:]
            owned = True
        urow = u * n
        for s in range(n):
            dsw = cur[s * n + w]
            if dsw >= _INF:
                continue
            head = dsw + c
            base = s * n
            for t in range(n):
                dut = cur[urow + t]
                if dut >= _INF:
                    continue
                cand = head + dut
                if cand < cur[base + t]:
                    if s == t and cand < 0:
                        return None
                    cur[base + t] = cand
    return cur


def _decode_witness(dist, n, denom):
    # Potentials from the closure satisfy every non-strict bound; strict
    # bounds are realised by an epsilon small enough that one scaled unit
    # of slack always dominates the strictness correction.
    eps = Fraction(1, 4 * _UNIT * denom)
    out = []
    for a in range(n):
        best = 0
        for w in range(n):
            v = dist[w * n + a]
            if v < best:
                best = v
        c = -((-best) // _UNIT)
        s = c * _UNIT - best
        out.append(Fraction(c, denom) - s * eps)
    return tuple(out)


def realize_profile(profile, polytope: Polytope):
    """A point whose argmin profile is exactly `profile`, or None.

    The profile must assign a non-empty set of coordinates to each
    canonical extremal generator.
    """
    gens = polytope.extremals().generators
    n = polytope.ambient
    sets = tuple(frozenset(a) for a in profile)
    if len(sets) != len(gens):
        raise DimensionMismatch(f"profile has {len(sets)} components for {len(gens)} generators")
    for a in sets:
        if not a:
            raise ValueError("profile components must be non-empty")
        if any(not 0 <= q < n for q in a):
            raise ValueError("profile coordinate out of range")
    scaled, denom = _scaled(gens)
    dist = _fresh(n)
    for vi, a in zip(scaled, sets):
        dist = _insert_edges(dist, n, _edges_for(vi, a, n))
        if dist is None:
            return None
    witness = _decode_witness(dist, n, denom)
    if _argmin_profile(witness, gens) != sets:
        raise AssertionError("witness failed to realise its own profile")
    return witness


# ---------------------------------------------------------------------------
# the cell complex


@dataclass(frozen=True)
class Face:
    """One cell: its covector, a point realising it exactly, its dimension."""

    covector: tuple
    witness: tuple
    dim: int
    covering: bool


@dataclass(frozen=True)
class CellComplex:
    """All cells of the covector decomposition, with dimension and purity."""

    faces: tuple
    tropical_dim: int
    pure: bool

    def covering_faces(self):
        return [f for f in self.faces if f.covering]


def _face_key(face: Face):
    return tuple(tuple(sorted(c)) for c in face.covector)


def cell_complex(polytope: Polytope, max_tuples: int = DEFAULT_MAX_TUPLES) -> CellComplex:
    """Enumerate every realizable cell of the covector decomposition.

    Covering cells (no empty covector component) are exactly the cells
    meeting the polytope; the tropical dimension is their maximal
    dimension, and the complex is pure when every covering cell sits
    inside a covering cell of maximal dimension.
    """
    if max_tuples == DEFAULT_MAX_TUPLES:
        return _cached_complex(polytope)
    return _compute_complex(polytope, max_tuples)


@lru_cache(maxsize=256)
def _cached_complex(polytope: Polytope) -> CellComplex:
    return _compute_complex(polytope, DEFAULT_MAX_TUPLES)


def _compute_complex(polytope: Polytope, max_tuples: int) -> CellComplex:
    gens = polytope.extremals().generators
    n = polytope.ambient
    m = len(gens)
    nominal = (2**n - 1) ** m
    if nominal > max_tuples:
        raise ScaleLimitExceeded(f"{nominal} candidate profiles exceed the bound of {max_tuples}")
    scaled, denom = _scaled(gens)
    masks = [frozenset(q for q in range(n) if mask >> q & 1) for mask in range(1 << n)]
    table = [[_edges_for(scaled[i], masks[mask], n) for mask in range(1, 1 << n)] for i in range(m)]
    found = []

    def walk(i, dist, acc):
        if i == m:
            found.append((acc, dist))
            return
        for k, edges in enumerate(table[i]):
            nxt = _insert_edges(dist, n, edges)
            if nxt is not None:
                walk(i + 1, nxt, acc + (k + 1,))

    walk(0, _fresh(n), ())

    faces = []
    for acc, dist in found:
        profile = tuple(masks[mask] for mask in acc)
        cov = _profile_covector(profile, n)
        witness = _decode_witness(dist, n, denom)
        if _argmin_profile(witness, gens) != profile:
            raise AssertionError("cell witness failed to realise its own profile")
        faces.append(
            Face(
                covector=cov,
                witness=witness,
                dim=covector_dimension(cov),
                covering=all(cov),
            )
        )
    faces.sort(key=_face_key)
    covering = [f for f in faces if f.covering]
    if not covering:
        raise AssertionError("a non-empty polytope always has covering cells")
    top = max(f.dim for f in covering)
    top_cells = [f.covector for f in covering if f.dim == top]
    pure = all(any(covector_leq(t, f.covector) for t in top_cells) for f in covering)
    return CellComplex(faces=tuple(faces), tropical_dim=top, pure=pure)


def tropical_dimension(polytope: Polytope, max_tuples: int = DEFAULT_MAX_TUPLES) -> int:
    """Topological (affine) dimension of the polytope."""
    return cell_complex(polytope, max_tuples).tropical_dim


def pure_dimension(polytope: Polytope, max_tuples: int = DEFAULT_MAX_TUPLES):
    """(pure, dim): dim is the tropical dimension, pure whether every
    covering cell lies inside a covering cell of that dimension."""
    report = cell_complex(polytope, max_tuples)
    return report.pure, report.tropical_dim


# ---------------------------------------------------------------------------
# descent to an all-singleton cell inside an idempotent column space


def descend_to_singletons(e: Matrix, x):
    """From x in the column space of a finite idempotent, walk down to a
    point whose covector is a vector of singletons contained in that of x.

    Generators are the columns indexed by a set of unique extremal
    representatives with zero diagonal entries; every idempotent has such a
    set.  Each step picks a coordinate shared by two generators, bumps the
    coefficient of one of them by half the minimum positive slack, and
    strictly shrinks the set of shared triples, so at most |J|^2 * n steps
    are ever needed.
    """
    if not e.is_square:
        raise NotSquare("descent needs a square matrix")
    if not e.is_finite:
        raise NonFiniteEntries("descent needs a finite matrix")
    if e.mul(e) != e:
        raise NotIdempotent("descent needs an idempotent matrix")
    n = e.rows
    x = as_vector(x, finite=True, length=n)

    cols = [e.col(j) for j in range(n)]
    targets = column_space(e).extremals().generators
    picked = []
    for target in targets:
        j = next(
            (j for j in range(n) if e.entries[j][j] == 0 and canonical_point(cols[j]) == target),
            None,
        )
        if j is None:
            raise AssertionError("idempotents carry a zero-diagonal column for every extremal point")
        picked.append(j)
    picked.sort()
    gens = [cols[j] for j in picked]
    r = len(picked)

    def principal(z):
        return [min(zq - gq for zq, gq in zip(z, g)) for g in gens]

    def recombine(lams):
        return tuple(max(lams[i] + gens[i][p] for i in range(r)) for p in range(n))

    lams = principal(x)
    if recombine(lams) != x:
        raise NotMember("the point is not in the column space")

    z = x
    for _ in range(r * r * n + 1):
        lams = principal(z)
        cov = _profile_covector(_argmin_profile(z, gens), n)
        triple = None
        for p in range(n):
            members = sorted(cov[p])
            if len(members) >= 2:
                triple = (members[0], members[1], p)
                break
        if triple is None:
            return z
        i, j, _p = triple
        # orient the pair so that generator i undershoots z at j's own coordinate
        if not lams[i] + gens[i][picked[j]] < z[picked[j]]:
            i, j = j, i
            if not lams[i] + gens[i][picked[j]] < z[picked[j]]:
                raise AssertionError("one orientation always undershoots at the diagonal coordinate")
        slacks = [
            z[q] - (lams[k] + gens[k][q])
            for k in range(r)
            for q in range(n)
            if z[q] != lams[k] + gens[k][q]
        ]
        if not slacks:
            raise AssertionError("distinct extremal generators leave positive slack somewhere")
        eps = min(slacks) / 2
        bump = lams[i] + eps
        z = tuple(max(zp, bump + gp) for zp, gp in zip(z, gens[i]))
    raise AssertionError("descent exceeded its iteration bound")

"""Exact arithmetic over the max-plus (tropical) semiring.

Scalars are arbitrary-precision rationals (`fractions.Fraction`); the
additive identity -inf is the separate singleton `BOTTOM`.  Tropical
addition is maximum and tropical multiplication is ordinary +, so 0 is the
multiplicative identity.  Everything here is exact: floats are rejected on
input, because the decisions taken downstream (idempotency, covector
cells, convexity) hinge on exact ties.

Vectors are plain tuples of entries; matrices are immutable `Matrix`
instances.  A vector or matrix is *finite* when it contains no BOTTOM;
operations whose contract needs finite input raise `NonFiniteEntries`
instead of silently propagating -inf.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DimensionMismatch, NonFiniteEntries, NotSquare


class _Bottom:
    """The -inf element: absorbing for +, neutral and smallest for max."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not BOTTOM

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is BOTTOM

    def __eq__(self, other):
        return other is BOTTOM

    def __hash__(self):
        return hash("-inf")

    def __neg__(self):
        raise NonFiniteEntries("-inf has no additive inverse")

    def __repr__(self):
        return "-inf"


BOTTOM = _Bottom()

_SCALAR_RE = re.compile(r"[+-]?\d+(/[1-9]\d*)?\Z")


def parse_entry(text: str):
    """Parse the text scalar format: an optional sign, integer or p/q, or -inf."""
    if text == "-inf":
        return BOTTOM
    if not _SCALAR_RE.match(text):
        raise ValueError(f"not a scalar: {text!r} (expected integer, p/q or -inf)")
    return Fraction(text)


def format_entry(value) -> str:
    """Inverse of parse_entry; round-trips every entry bit-exactly."""
    if value is BOTTOM:
        return "-inf"
    return str(value)


def as_entry(value):
    """Coerce to an exact entry.  Floats are rejected: no rounding, ever."""
    if value is BOTTOM:
        return BOTTOM
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_entry(value)
    raise TypeError(f"exact entries only (int, Fraction, 'p/q', BOTTOM); got {type(value).__name__}")


def tadd(a, b):
    """Tropical sum: max(a, b), with BOTTOM the neutral element."""
    a, b = as_entry(a), as_entry(b)
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def tmul(a, b):
    """Tropical product: a + b, with BOTTOM absorbing."""
    a, b = as_entry(a), as_entry(b)
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


# ---------------------------------------------------------------------------
# vectors: plain tuples of entries


def as_vector(values, *, finite: bool = False, length: int | None = None):
    entries = tuple(as_entry(v) for v in values)
    if not entries:
        raise DimensionMismatch("vectors must have positive length")
    if length is not None and len(entries) != length:
        raise DimensionMismatch(f"expected a vector of length {length}, got {len(entries)}")
    if finite and any(e is BOTTOM for e in entries):
        raise NonFiniteEntries("a finite vector is required here")
    return entries


def _check_pair(x, y):
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")


def vec_max(x, y):
    """Componentwise tropical sum (join)."""
    x, y = as_vector(x), as_vector(y)
    _check_pair(x, y)
    return tuple(b if a is BOTTOM else (a if b is BOTTOM or a >= b else b) for a, b in zip(x, y))


def vec_min(x, y):
    """Componentwise minimum (the lattice meet; not a semiring operation)."""
    x, y = as_vector(x), as_vector(y)
    _check_pair(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


def vec_leq(x, y) -> bool:
    """Componentwise partial order."""
    x, y = as_vector(x), as_vector(y)
    _check_pair(x, y)
    return all(a <= b for a, b in zip(x, y))


def vec_scale(lam, x):
    """Tropical scaling: add the finite scalar lam to every entry."""
    lam = as_entry(lam)
    if lam is BOTTOM:
        raise NonFiniteEntries("scaling requires a finite scalar")
    return tuple(BOTTOM if e is BOTTOM else lam + e for e in as_vector(x))


def vec_is_finite(x) -> bool:
    return all(e is not BOTTOM for e in x)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix over the tropical semiring.

    The product is (A@B)[i][j] = max_k (A[i][k] + B[k][j]); BOTTOM entries
    drop out of the maximum and an all-BOTTOM term row yields BOTTOM.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows):
        data = tuple(tuple(as_entry(e) for e in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionMismatch("all rows must have the same length")
        self.rows = len(data)
        self.cols = width
        self.entries = data

    @classmethod
    def _raw(cls, data: tuple) -> "Matrix":
        # internal: entries are already validated tuples of entries
        m = object.__new__(cls)
        m.rows = len(data)
        m.cols = len(data[0])
        m.entries = data
        return m

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        cols = [as_vector(c) for c in columns]
        if not cols:
            raise DimensionMismatch("a matrix needs at least one column")
        if len({len(c) for c in cols}) != 1:
            raise DimensionMismatch("all columns must have the same length")
        return cls._raw(tuple(zip(*cols)))

    # -- basic structure

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_finite(self) -> bool:
        return all(e is not BOTTOM for row in self.entries for e in row)

    def row(self, i: int):
        return self.entries[i]

    def col(self, j: int):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.entries)))

    # -- algebra

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for arow in self.entries:
            orow = []
            for j in range(other.cols):
                best = BOTTOM
                for k in range(self.cols):
                    a = arow[k]
                    b = other.entries[k][j]
                    if a is BOTTOM or b is BOTTOM:
                        continue
                    s = a + b
                    if best is BOTTOM or s > best:
                        best = s
                orow.append(best)
            out.append(tuple(orow))
        return Matrix._raw(tuple(out))

    __matmul__ = mul

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise NotSquare("powers need a square matrix")
        if k < 1:
            raise ValueError("only positive powers are defined")
        acc = self
        for _ in range(k - 1):
            acc = acc.mul(self)
        return acc

    def apply(self, x):
        """Act on a column vector: (A x)[i] = max_k (A[i][k] + x[k])."""
        x = as_vector(x, length=self.cols)
        out = []
        for arow in self.entries:
            best = BOTTOM
            for a, e in zip(arow, x):
                if a is BOTTOM or e is BOTTOM:
                    continue
                s = a + e
                if best is BOTTOM or s > best:
                    best = s
            out.append(best)
        return tuple(out)

    def left_apply(self, x):
        """Act on a row vector: (x A)[j] = max_k (x[k] + A[k][j])."""
        x = as_vector(x, length=self.rows)
        out = []
        for j in range(self.cols):
            best = BOTTOM
            for k in range(self.rows):
                a = x[k]
                b = self.entries[k][j]
                if a is BOTTOM or b is BOTTOM:
                    continue
                s = a + b
                if best is BOTTOM or s > best:
                    best = s
            out.append(best)
        return tuple(out)

    def leq(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("order comparison needs equal shapes")
        return all(a <= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    # -- value semantics

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(format_entry(e) for e in row) for row in self.entries)
        return f"Matrix[{body}]"


# ---------------------------------------------------------------------------
# residuation: greatest solutions of one-sided inequalities


def left_residual(a: Matrix, b: Matrix) -> Matrix:
    """Greatest X with a @ X <= b, entrywise (a\\b)[i][j] = min_k (b[k][j] - a[k][i]).

    The left factor must be finite; b may contain BOTTOM, which then
    propagates into the corresponding minima.
    """
    if a.rows != b.rows:
        raise DimensionMismatch("left residual needs matching row counts")
    if not a.is_finite:
        raise NonFiniteEntries("the left factor of a residual must be finite")
    out = []
    for i in range(a.cols):
        row = []
        for j in range(b.cols):
            best = None
            for k in range(a.rows):
                bkj = b.entries[k][j]
                if bkj is BOTTOM:
                    best = BOTTOM
                    break
                d = bkj - a.entries[k][i]
                if best is None or d < best:
                    best = d
            row.append(best)
        out.append(tuple(row))
    return Matrix._raw(tuple(out))


def right_residual(b: Matrix, a: Matrix) -> Matrix:
    """Greatest X with X @ a <= b, entrywise (b/a)[i][j] = min_l (b[i][l] - a[j][l])."""
    if a.cols != b.cols:
        raise DimensionMismatch("right residual needs matching column counts")
    if not a.is_finite:
        raise NonFiniteEntries("the divisor of a residual must be finite")
    out = []
    for i in range(b.rows):
        row = []
        for j in range(a.rows):
            best = None
            for l in range(a.cols):
                bil = b.entries[i][l]
                if bil is BOTTOM:
                    best = BOTTOM
                    break
                d = bil - a.entries[j][l]
                if best is None or d < best:
                    best = d
            row.append(best)
        out.append(tuple(row))
    return Matrix._raw(tuple(out))


def double_residual(a: Matrix) -> Matrix:
    """Greatest X with a @ X @ a <= a: B[i][j] = min_{k,l} (a[k][l] - a[k][i] - a[j][l]).

    For finite square a the result is finite, which makes it the canonical
    regularity witness candidate.
    """
    if not a.is_square:
        raise NotSquare("the double residual needs a square matrix")
    if not a.is_finite:
        raise NonFiniteEntries("the double residual needs a finite matrix")
    n = a.rows
    e = a.entries
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            best = None
            for k in range(n):
                eki = e[k][i]
                for l in range(n):
                    d = e[k][l] - eki - e[j][l]
                    if best is None or d < best:
                        best = d
            row.append(best)
        out.append(tuple(row))
    return Matrix._raw(tuple(out))

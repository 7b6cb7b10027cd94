"""Exact linear algebra over the rationals.

Matrices are sparse: each row is a ``dict`` mapping column index to a nonzero
``Fraction``.  Elimination runs fraction-free on primitive integer rows and
only converts back to ``Fraction`` when the reduced echelon form is emitted,
which keeps the inner loop on Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Sequence

Row = Mapping[int, Fraction]


class RatMatrix:
    """Immutable sparse rational matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, ncols: int, rows: Iterable[Mapping[int, object]] = ()):
        self.ncols = ncols
        cleaned = []
        for row in rows:
            r = {}
            for c, v in row.items():
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} out of range for {ncols} columns")
                v = Fraction(v)
                if v:
                    r[c] = v
            cleaned.append(dict(sorted(r.items())))
        self.rows = tuple(cleaned)
        self.nrows = len(self.rows)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]], ncols: int | None = None) -> RatMatrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        out = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged dense matrix")
            out.append({c: v for c, v in enumerate(row) if v})
        return cls(ncols, out)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> RatMatrix:
        return cls(ncols, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, [{i: 1} for i in range(n)])

    def entries(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        for i, row in enumerate(self.rows):
            for c, v in row.items():
                yield (i, c), v

    def to_dense(self) -> list[list[Fraction]]:
        return [[row.get(c, Fraction(0)) for c in range(self.ncols)] for row in self.rows]

    def transpose(self) -> RatMatrix:
        cols: list[dict[int, Fraction]] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for c, v in row.items():
                cols[c][i] = v
        return RatMatrix(self.nrows, cols)

    def apply(self, v: Sequence[object]) -> list[Fraction]:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum((x * v[c] for c, x in row.items()), Fraction(0)) for row in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, tuple(tuple(r.items()) for r in self.rows)))

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows)})"


def _int_row(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row (same span)."""
    fr = {c: Fraction(v) for c, v in row.items() if v}
    if not fr:
        return {}
    den = lcm(*(v.denominator for v in fr.values()))
    return _primitive({c: v.numerator * (den // v.denominator) for c, v in fr.items()})


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are stored as primitive integer dicts with positive pivot.  Every
    stored row is zero in every other row's pivot column, so reducing a vector
    takes one pass over its pivot-column entries.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> dict[int, int]:
        if _is_int_row(row):
            r = _primitive({c: v for c, v in row.items() if v})
        else:
            r = _int_row(row)
        hits = [c for c in r if c in self.pivots]
        if not hits:
            return r
        r = dict(r)
        for c in hits:
            a = r[c]
            p = self.pivots[c]
            pc = p[c]
            g = gcd(a, pc)
            ma, mb = pc // g, a // g
            if ma != 1:
                for k in r:
                    r[k] *= ma
            for k, v in p.items():
                nv = r.get(k, 0) - v * mb
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return _primitive(r)

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert ``row``; return True iff it was independent."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        if r[c] < 0:
            r = {k: -v for k, v in r.items()}
        pv = r[c]
        for pc, p in list(self.pivots.items()):
            a = p.get(c)
            if not a:
                continue
            g = gcd(a, pv)
            ma, mb = pv // g, a // g
            q = {k: v * ma for k, v in p.items()} if ma != 1 else dict(p)
            for k, v in r.items():
                nv = q.get(k, 0) - v * mb
                if nv:
                    q[k] = nv
                else:
                    q.pop(k, None)
            self.pivots[pc] = _primitive(q)
        self.pivots[c] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    def matrix(self) -> tuple[RatMatrix, list[int]]:
        cols = sorted(self.pivots)
        rows = []
        for c in cols:
            p = self.pivots[c]
            pv = p[c]
            rows.append({k: Fraction(v, pv) for k, v in sorted(p.items())})
        return RatMatrix(self.ncols, rows), cols


def _is_int_row(row: Mapping[int, object]) -> bool:
    return all(type(v) is int for v in row.values())


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    e = Echelon(m.ncols)
    for row in m.rows:
        e.add(row)
    return e.matrix()


def rank(m: RatMatrix) -> int:
    e = Echelon(m.ncols)
    for row in m.rows:
        e.add(row)
    return e.rank


def kernel_basis(m: RatMatrix) -> RatMatrix:
    """Basis (in rref) of the right kernel ``{v : m v = 0}``."""
    r, pivots = rref(m)
    pivot_set = set(pivots)
    vecs = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = {f: Fraction(1)}
        for row, c in zip(r.rows, pivots):
            x = row.get(f)
            if x:
                v[c] = -x
        vecs.append(v)
    return rref(RatMatrix(m.ncols, vecs))[0]


@lru_cache(maxsize=256)
def _echelon_of(space: RatMatrix) -> Echelon:
    e = Echelon(space.ncols)
    for row in space.rows:
        e.add(row)
    return e


def subspace_contains(space: RatMatrix, v: Sequence[object] | Row) -> bool:
    """Membership of ``v`` in the row space of ``space``."""
    if isinstance(v, Mapping):
        vec = {c: Fraction(x) for c, x in v.items() if x}
        if any(not 0 <= c < space.ncols for c in vec):
            raise ValueError("dimension mismatch")
    else:
        if len(v) != space.ncols:
            raise ValueError(f"vector of length {len(v)} vs space in {space.ncols} coordinates")
        vec = {c: Fraction(x) for c, x in enumerate(v) if x}
    if not vec:
        return True
    return _echelon_of(space).contains(vec)


def span(*mats: RatMatrix) -> RatMatrix:
    """rref basis of the sum of row spaces."""
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].ncols
    e = Echelon(n)
    for m in mats:
        if m.ncols != n:
            raise ValueError("dimension mismatch")
        for row in m.rows:
            e.add(row)
    return e.matrix()[0]


def sum_dim(a: RatMatrix, b: RatMatrix) -> int:
    return span(a, b).nrows


def intersection_dim(a: RatMatrix, b: RatMatrix) -> int:
    return rank(a) + rank(b) - sum_dim(a, b)


def same_subspace(a: RatMatrix, b: RatMatrix) -> bool:
    return a.ncols == b.ncols and rref(a)[0] == rref(b)[0]


def is_subspace(a: RatMatrix, b: RatMatrix) -> bool:
    """Row space of ``a`` contained in row space of ``b``."""
    return sum_dim(a, b) == rank(b)

"""Veronese ideals, joins and secant ideals as bigraded subspaces of ``Sym(B_d)``.

Every piece is a subspace of ``Sym^n(B_d)`` in the multiset-word basis returned
by :func:`sym_basis_indexed`, stored as an rref ``RatMatrix``.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, groupby, product
from math import comb
from typing import Callable

from .exactlin import Echelon, RatMatrix, kernel_basis, subspace_contains
from .hopf import SymElement, dot_coinv, normal_word, star_coinv
from .polyring import GradedRing


def sym_basis_indexed(ring: GradedRing, d: int, n: int) -> tuple[list[tuple], dict[tuple, int]]:
    """Multiset-word basis of ``Sym^n(B_d)`` and its index."""
    key = ("symbasis", d, n)
    got = ring.cache.get(key)
    if got is None:
        words = [tuple(w) for w in combinations_with_replacement(ring.graded_basis(d), n)]
        got = (words, {w: i for i, w in enumerate(words)})
        ring.cache[key] = got
    return got


def sym_dim(ring: GradedRing, d: int, n: int) -> int:
    return comb(ring.dim(d) + n - 1, n)


def to_coords(ring: GradedRing, s: SymElement) -> dict[int, Fraction]:
    _, index = sym_basis_indexed(ring, s.d, s.n)
    return {index[w]: c for w, c in s.coeffs.items()}


def from_coords(ring: GradedRing, d: int, n: int, row) -> SymElement:
    words, _ = sym_basis_indexed(ring, d, n)
    return SymElement._raw(d, n, {words[j]: Fraction(c) for j, c in row.items() if c})


class BigradedSubspace:
    """Lazily computed family of subspaces ``I_{d,n}`` of ``Sym^n(B_d)``."""

    def __init__(self, ring: GradedRing, compute: Callable[[int, int], RatMatrix], name: str = ""):
        self.ring = ring
        self.name = name
        self._compute = compute
        self._pieces: dict[tuple[int, int], RatMatrix] = {}
        self._quot: dict[tuple[int, int], tuple[list[dict], int]] = {}
        self._lock = threading.RLock()

    def piece(self, d: int, n: int) -> RatMatrix:
        with self._lock:
            got = self._pieces.get((d, n))
            if got is None:
                got = self._compute(d, n)
                self._pieces[(d, n)] = got
            return got

    def dim(self, d: int, n: int) -> int:
        return self.piece(d, n).nrows

    def contains(self, s: SymElement) -> bool:
        return subspace_contains(self.piece(s.d, s.n), to_coords(self.ring, s))

    def elements(self, d: int, n: int) -> list[SymElement]:
        return [from_coords(self.ring, d, n, row) for row in self.piece(d, n).rows]

    def quotient_map(self, d: int, n: int) -> tuple[list[dict], int]:
        """Projection onto the complement spanned by the non-pivot coordinates.

        Returns, for each basis word of ``Sym^n(B_d)``, its image as a sparse
        vector in complement coordinates, plus the complement dimension.
        """
        with self._lock:
            got = self._quot.get((d, n))
            if got is not None:
                return got
            p = self.piece(d, n)
            total = sym_dim(self.ring, d, n)
            pivot_rows = {next(iter(row)): row for row in p.rows}
            free = [j for j in range(total) if j not in pivot_rows]
            pos = {j: k for k, j in enumerate(free)}
            images = []
            for j in range(total):
                row = pivot_rows.get(j)
                if row is None:
                    images.append({pos[j]: Fraction(1)})
                else:
                    images.append({pos[k]: -v for k, v in row.items() if k != j})
            got = (images, len(free))
            self._quot[(d, n)] = got
            return got

    def __repr__(self) -> str:
        return f"BigradedSubspace({self.name or '?'} over {self.ring!r})"


def zero_ideal(ring: GradedRing) -> BigradedSubspace:
    return BigradedSubspace(ring, lambda d, n: RatMatrix(sym_dim(ring, d, n)), "zero")


def augmentation_ideal(ring: GradedRing) -> BigradedSubspace:
    """Everything in positive outer degree: the ideal of the origin."""
    def compute(d, n):
        dim = sym_dim(ring, d, n)
        return RatMatrix.identity(dim) if n > 0 else RatMatrix(dim)
    return BigradedSubspace(ring, compute, "augmentation")


def subspace_from_generators(ring: GradedRing, gens: Callable[[int, int], list[SymElement]], name="") -> BigradedSubspace:
    def compute(d, n):
        e = Echelon(sym_dim(ring, d, n))
        for s in gens(d, n):
            e.add(to_coords(ring, s))
        return e.matrix()[0]
    return BigradedSubspace(ring, compute, name)


# --- Veronese ------------------------------------------------------------

def _product_in_ring(ring: GradedRing, word: tuple) -> dict:
    acc = ring.one()
    for letter in word:
        acc = ring.multiply(acc, {letter: Fraction(1)})
    return acc


def mult_map(ring: GradedRing, d: int, n: int) -> RatMatrix:
    """Rows: multiset words of ``Sym^n(B_d)``; row j is the product in ``B_{dn}``."""
    words, _ = sym_basis_indexed(ring, d, n)
    target = ring.basis_index(d * n)
    rows = []
    for w in words:
        prod = _product_in_ring(ring, w)
        rows.append({target[m]: c for m, c in prod.items()})
    return RatMatrix(len(target), rows)


def veronese_ideal_piece(ring: GradedRing, d: int, n: int) -> RatMatrix:
    """Kernel of ``Sym^n(B_d) -> B_{dn}``."""
    return kernel_basis(mult_map(ring, d, n).transpose())


def veronese_ideal(ring: GradedRing) -> BigradedSubspace:
    got = ring.cache.get(("secant", 1))
    if got is None:
        got = BigradedSubspace(ring, lambda d, n: veronese_ideal_piece(ring, d, n), "veronese")
        ring.cache[("secant", 1)] = got
    return got


# --- joins ---------------------------------------------------------------

def _submultisets(word: tuple):
    """Yield (left, right, multiplicity) over all position subsets, grouped."""
    groups = [(letter, len(list(g))) for letter, g in groupby(word)]
    for take in product(*(range(k + 1) for _, k in groups)):
        mult = 1
        left: list = []
        right: list = []
        for (letter, k), t in zip(groups, take):
            mult *= comb(k, t)
            left.extend([letter] * t)
            right.extend([letter] * (k - t))
        yield tuple(left), tuple(right), mult


def join_matrix(I: BigradedSubspace, J: BigradedSubspace, d: int, n: int) -> RatMatrix:
    """Coproduct followed by the two quotient projections, one row per domain word.

    Block columns are ordered by (i, left complement index, right complement index).
    """
    ring = I.ring
    words, _ = sym_basis_indexed(ring, d, n)
    blocks = []
    offset = 0
    for i in range(n + 1):
        qi, ci = I.quotient_map(d, i)
        qj, cj = J.quotient_map(d, n - i)
        blocks.append((offset, qi, qj, cj, sym_basis_indexed(ring, d, i)[1], sym_basis_indexed(ring, d, n - i)[1]))
        offset += ci * cj
    rows = []
    for w in words:
        row: dict[int, Fraction] = {}
        for left, right, mult in _submultisets(w):
            off, qi, qj, cj, li, ri = blocks[len(left)]
            if not cj:
                continue
            a_img = qi[li[left]]
            b_img = qj[ri[right]]
            for a, x in a_img.items():
                base = off + a * cj
                xm = x * mult
                for b, y in b_img.items():
                    k = base + b
                    nv = row.get(k, 0) + xm * y
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        rows.append(row)
    return RatMatrix(offset, rows)


def join_piece(I: BigradedSubspace, J: BigradedSubspace, d: int, n: int) -> RatMatrix:
    if I.ring is not J.ring:
        raise ValueError("join of subspaces over different rings")
    return kernel_basis(join_matrix(I, J, d, n).transpose())


def join(I: BigradedSubspace, J: BigradedSubspace) -> BigradedSubspace:
    return BigradedSubspace(I.ring, lambda d, n: join_piece(I, J, d, n), f"({I.name} * {J.name})")


def secant_ideal(ring: GradedRing, r: int) -> BigradedSubspace:
    """r-fold join of the Veronese ideal, nested as I(1) join I(r-1); memoized on the ring."""
    if r < 1:
        raise ValueError("secant order must be >= 1")
    if r == 1:
        return veronese_ideal(ring)
    with ring._lock:
        got = ring.cache.get(("secant", r))
        if got is None:
            got = join(veronese_ideal(ring), secant_ideal(ring, r - 1))
            got.name = f"secant{r}"
            ring.cache[("secant", r)] = got
    return got


def secant_ideal_piece(ring: GradedRing, r: int, d: int, n: int) -> RatMatrix:
    return secant_ideal(ring, r).piece(d, n)


# --- generator profiles --------------------------------------------------

@dataclass
class GeneratorProfile:
    mode: str
    rows: list[dict] = field(default_factory=list)

    def add(self, d: int, n: int, dim: int, generated: int):
        if generated > dim:
            raise AssertionError(f"generated subspace larger than the piece at ({d},{n})")
        self.rows.append({"d": d, "n": n, "dim": dim, "generated": generated, "new": dim - generated})

    def new(self, d: int, n: int) -> int:
        for row in self.rows:
            if row["d"] == d and row["n"] == n:
                return row["new"]
        raise KeyError((d, n))

    def max_generator_degree(self) -> int:
        """Largest n with a new generator (0 when there are none)."""
        return max((row["n"] for row in self.rows if row["new"] > 0), default=0)

    def generator_degrees(self) -> list[int]:
        return sorted({row["n"] for row in self.rows if row["new"] > 0})


def _dot_rows_by_monomials(ring, d, n_small, rows, n_big, ech: Echelon):
    """Add every (basis monomial of degree n_big - n_small) . row to ``ech``."""
    small_words, _ = sym_basis_indexed(ring, d, n_small)
    big_index = sym_basis_indexed(ring, d, n_big)[1]
    for h in sym_basis_indexed(ring, d, n_big - n_small)[0]:
        for row in rows:
            vec: dict[int, Fraction] = {}
            for j, c in row.items():
                k = big_index[normal_word(small_words[j] + h)]
                vec[k] = vec.get(k, 0) + c
            ech.add(vec)


def ordinary_generator_profile(ring: GradedRing, r: int, d: int, n_max: int,
                               ideal: BigradedSubspace | None = None) -> GeneratorProfile:
    """Per n: dimension of the secant piece vs the part generated from lower n."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    I = ideal if ideal is not None else secant_ideal(ring, r)
    prof = GeneratorProfile("ordinary")
    for n in range(1, n_max + 1):
        piece = I.piece(d, n)
        ech = Echelon(sym_dim(ring, d, n))
        for n2 in range(0, n):
            lower = I.piece(d, n2).rows
            if lower:
                _dot_rows_by_monomials(ring, d, n2, lower, n, ech)
        prof.add(d, n, piece.nrows, ech.rank)
    return prof


def _star_span(ring: GradedRing, I: BigradedSubspace, d2: int, n2: int, d: int) -> list[dict]:
    """rref rows spanning {g * f : f in I_{d2,n2}, g a basis word of Sym^{n2}(B_{d-d2})}."""
    ech = Echelon(sym_dim(ring, d, n2))
    gs = sym_basis_indexed(ring, d - d2, n2)[0]
    for f in I.elements(d2, n2):
        for g in gs:
            g_el = SymElement._raw(d - d2, n2, {g: Fraction(1)})
            ech.add(to_coords(ring, star_coinv(g_el, f, ring)))
    return list(ech.matrix()[0].rows)


def di_ideal_generator_profile(ring: GradedRing, r: int, d_max: int, n_max: int,
                               ideal: BigradedSubspace | None = None) -> GeneratorProfile:
    """Per (d, n): piece dimension vs the span of h . (g * f) over strictly smaller pieces."""
    I = ideal if ideal is not None else secant_ideal(ring, r)
    prof = GeneratorProfile("di")
    star_cache: dict[tuple, list[dict]] = {}
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            piece = I.piece(d, n)
            ech = Echelon(sym_dim(ring, d, n))
            for d2 in range(1, d + 1):
                for n2 in range(0, n + 1):
                    if (d2, n2) == (d, n) or not I.dim(d2, n2):
                        continue
                    key = (d2, n2, d)
                    if key not in star_cache:
                        star_cache[key] = _star_span(ring, I, d2, n2, d)
                    _dot_rows_by_monomials(ring, d, n2, star_cache[key], n, ech)
            prof.add(d, n, piece.nrows, ech.rank)
    return prof


# --- closure probes ------------------------------------------------------

def random_element_of(I: BigradedSubspace, d: int, n: int, rng: random.Random) -> SymElement:
    acc: dict[int, Fraction] = {}
    for row in I.piece(d, n).rows:
        c = rng.randint(-3, 3)
        if c:
            for j, v in row.items():
                acc[j] = acc.get(j, 0) + c * v
    return from_coords(I.ring, d, n, acc)


def random_sym(ring: GradedRing, d: int, n: int, rng: random.Random, terms: int = 2) -> SymElement:
    words = sym_basis_indexed(ring, d, n)[0]
    coeffs: dict = {}
    for _ in range(terms):
        w = rng.choice(words)
        coeffs[w] = coeffs.get(w, 0) + rng.choice([-2, -1, 1, 2, 3])
    return SymElement(d, n, coeffs)


@dataclass
class ClosureReport:
    trials: int = 0
    passed: int = 0
    failed: int = 0
    trivial: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def di_ideal_closure_check(I: BigradedSubspace, trials: int, seed: int,
                           d_max: int = 3, e_max: int = 3, n_max: int = 3,
                           dot_extra: int = 2) -> ClosureReport:
    """Random membership probes for star- and dot-stability of ``I``.

    Each probe picks a random f in a piece ``I_{d,n}`` and checks either
    ``g * f in I_{d+e,n}`` for random g in ``Sym^n(B_e)`` or
    ``h . f in I_{d,n+k}`` for random h in ``Sym^k(B_d)``.  Probes prefer
    nonzero pieces; when every piece in range is zero the probes are trivial.
    """
    ring = I.ring
    rng = random.Random(seed)
    cells = [(d, n) for d in range(1, d_max + 1) for n in range(1, n_max + 1)]
    live = [c for c in cells if I.dim(*c)] or cells
    rep = ClosureReport()
    for t in range(trials):
        d, n = rng.choice(live)
        f = random_element_of(I, d, n, rng)
        if t % 2 == 0:
            e = rng.randint(1, e_max)
            g = random_sym(ring, e, n, rng)
            out = star_coinv(g, f, ring)
            what = ("star", d, n, e)
        else:
            k = rng.randint(1, dot_extra)
            h = random_sym(ring, d, k, rng)
            out = dot_coinv(h, f)
            what = ("dot", d, n, k)
        rep.trials += 1
        if not f:
            rep.trivial += 1
        if I.contains(out):
            rep.passed += 1
        else:
            rep.failed += 1
            rep.failures.append(what)
    return rep

"""Invariant and coinvariant layers of the shuffle algebra.

``SymElement`` lives in ``Sym^n(B_d)``: words are multisets, stored as letter
tuples sorted in basis order (descending lex).  ``InvariantElement`` is a
permutation-invariant tensor, kept fully expanded so every symmetrization
identity can be checked term by term.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial
from typing import Mapping

from .polyring import GradedRing
from .shuffle import TensorElement, _accumulate, shuffle_product, splits, star_product, star_words


def normal_word(w) -> tuple:
    return tuple(sorted((tuple(x) for x in w), reverse=True))


class SymElement:
    """Rational combination of multiset words of one bidegree."""

    __slots__ = ("d", "n", "coeffs")

    def __init__(self, d: int, n: int, coeffs: Mapping = ()):
        self.d = d
        self.n = n
        out: dict = {}
        for w, c in dict(coeffs).items():
            w = normal_word(w)
            if len(w) != n or any(sum(x) != d for x in w):
                raise ValueError(f"word {w} is not of bidegree ({d}, {n})")
            c = Fraction(c)
            if c:
                out[w] = out.get(w, 0) + c
        self.coeffs = {w: c for w, c in out.items() if c}

    @classmethod
    def monomial(cls, letters, coeff=1) -> SymElement:
        letters = tuple(tuple(x) for x in letters)
        if not letters:
            raise ValueError("use SymElement.unit(d) for the empty word")
        return cls(sum(letters[0]), len(letters), {letters: coeff})

    @classmethod
    def unit(cls, d: int = 0) -> SymElement:
        return cls(d, 0, {(): 1})

    @classmethod
    def _raw(cls, d, n, coeffs) -> SymElement:
        obj = cls.__new__(cls)
        obj.d, obj.n, obj.coeffs = d, n, coeffs
        return obj

    def __add__(self, other: SymElement) -> SymElement:
        if (self.d, self.n) != (other.d, other.n) and self.coeffs and other.coeffs:
            raise ValueError("bidegree mismatch")
        out = dict(self.coeffs)
        _accumulate(out, other.coeffs)
        return SymElement._raw(self.d, self.n, out)

    def __sub__(self, other: SymElement) -> SymElement:
        return self + other.scale(-1)

    def scale(self, c) -> SymElement:
        c = Fraction(c)
        return SymElement._raw(self.d, self.n, {w: v * c for w, v in self.coeffs.items()} if c else {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return self.n == other.n
        return (self.d, self.n, self.coeffs) == (other.d, other.n, other.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{w}" for w, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymElement(d={self.d}, n={self.n}: {terms or '0'})"


class InvariantElement:
    """A tensor fixed by every permutation of its positions."""

    __slots__ = ("underlying",)

    def __init__(self, underlying: TensorElement, check: bool = True):
        if check and not is_invariant(underlying):
            raise ValueError("tensor is not permutation invariant")
        self.underlying = underlying

    @property
    def d(self) -> int:
        return self.underlying.d

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def coeffs(self) -> dict:
        return self.underlying.coeffs

    @classmethod
    def unit(cls, d: int = 0) -> InvariantElement:
        return cls(TensorElement.unit(d), check=False)

    def __add__(self, other: InvariantElement) -> InvariantElement:
        return InvariantElement(self.underlying + other.underlying, check=False)

    def __sub__(self, other: InvariantElement) -> InvariantElement:
        return InvariantElement(self.underlying - other.underlying, check=False)

    def scale(self, c) -> InvariantElement:
        return InvariantElement(self.underlying.scale(c), check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InvariantElement):
            return NotImplemented
        return self.underlying == other.underlying

    def __bool__(self) -> bool:
        return bool(self.underlying)

    def __repr__(self) -> str:
        return f"Invariant{self.underlying!r}"


def is_invariant(f: TensorElement) -> bool:
    for w, c in f.coeffs.items():
        for p in set(permutations(w)):
            if f.coeffs.get(p) != c:
                return False
    return True


class PairTensor:
    """Element of a tensor square, as a combination of (left word, right word).

    Words are ordinary tuples for invariant factors and sorted tuples for
    coinvariant factors; ``components`` groups terms by ``(i, n - i)``.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Mapping = ()):
        self.d = d
        self.coeffs = {k: Fraction(c) for k, c in dict(coeffs).items() if c}

    def components(self) -> dict[tuple[int, int], dict]:
        out: dict = defaultdict(dict)
        for (u, v), c in self.coeffs.items():
            out[(len(u), len(v))][(u, v)] = c
        return dict(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairTensor):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: PairTensor) -> PairTensor:
        out = dict(self.coeffs)
        _accumulate(out, other.coeffs)
        return PairTensor(self.d, out)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{u}(x){v}" for (u, v), c in sorted(self.coeffs.items()))
        return f"PairTensor({terms or '0'})"


# --- symmetrization ---------------------------------------------------------

def pi(f: TensorElement) -> InvariantElement:
    """Average over all permutations of positions."""
    scale = Fraction(1, factorial(f.n))
    out: dict = {}
    for w, c in f.coeffs.items():
        for p in permutations(w):
            out[p] = out.get(p, 0) + c * scale
    return InvariantElement(TensorElement._raw(f.d, f.n, {w: c for w, c in out.items() if c}), check=False)


def frakS(s: SymElement) -> InvariantElement:
    """Sum over all n! orderings of each multiset word (repeats add up)."""
    out: dict = {}
    for w, c in s.coeffs.items():
        for p in permutations(w):
            out[p] = out.get(p, 0) + c
    return InvariantElement(TensorElement._raw(s.d, s.n, {w: c for w, c in out.items() if c}), check=False)


def frakS_inv(x: InvariantElement) -> SymElement:
    """Inverse of ``frakS``: sort letters and divide by n!."""
    scale = Fraction(1, factorial(x.n))
    out: dict = {}
    for w, c in x.coeffs.items():
        k = normal_word(w)
        out[k] = out.get(k, 0) + c * scale
    return SymElement._raw(x.d, x.n, {w: c for w, c in out.items() if c})


def to_sym(f: TensorElement) -> SymElement:
    """Image in coinvariants (no scaling)."""
    out: dict = {}
    for w, c in f.coeffs.items():
        k = normal_word(w)
        out[k] = out.get(k, 0) + c
    return SymElement._raw(f.d, f.n, {w: c for w, c in out.items() if c})


# --- products ---------------------------------------------------------------

def dot_invariant(f: InvariantElement, g: InvariantElement) -> InvariantElement:
    """Sum of the shuffle products over all splits."""
    if f.n and g.n and f.d != g.d:
        raise ValueError(f"inner degree mismatch: {f.d} vs {g.d}")
    total: dict = {}
    for sigma in splits(f.n, g.n):
        _accumulate(total, shuffle_product(f.underlying, g.underlying, sigma).coeffs)
    d = f.d if f.n else g.d
    return InvariantElement(TensorElement._raw(d, f.n + g.n, total), check=False)


def dot_coinv(f: SymElement, g: SymElement) -> SymElement:
    """Multiset union: ordinary multiplication in ``Sym(B_d)``."""
    if f.n and g.n and f.d != g.d:
        raise ValueError(f"inner degree mismatch: {f.d} vs {g.d}")
    out: dict = {}
    for u, a in f.coeffs.items():
        for v, b in g.coeffs.items():
            w = normal_word(u + v)
            nv = out.get(w, 0) + a * b
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return SymElement._raw(f.d if f.n else g.d, f.n + g.n, out)


def star_invariant(f: InvariantElement, g: InvariantElement, ring: GradedRing | None = None) -> InvariantElement:
    if f.n != g.n:
        raise ValueError(f"outer degree mismatch: {f.n} vs {g.n}")
    return InvariantElement(star_product(f.underlying, g.underlying, ring), check=False)


def star_coinv(f: SymElement, g: SymElement, ring: GradedRing | None = None) -> SymElement:
    """Star product transported through ``frakS``.

    Expanding ``frakS^-1(frakS(f) * frakS(g))`` for multisets (a_i), (b_i)
    gives the sum over permutations t of the multiset {a_i b_t(i)}, which is
    what is computed here.
    """
    if f.n != g.n:
        raise ValueError(f"outer degree mismatch: {f.n} vs {g.n}")
    n = f.n
    out: dict = {}
    perms = list(permutations(range(n)))
    for u, a in f.coeffs.items():
        for v, b in g.coeffs.items():
            for t in perms:
                vt = tuple(v[i] for i in t)
                for w, c in star_words(u, vt, ring).items():
                    k = normal_word(w)
                    nv = out.get(k, 0) + a * b * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
    return SymElement._raw(f.d + g.d, n, out)


# --- coproducts -------------------------------------------------------------

def delta_coinv(s: SymElement) -> PairTensor:
    """Sum over subsets S of positions of w_S (x) w_(complement)."""
    out: dict = {}
    for w, c in s.coeffs.items():
        n = len(w)
        for k in range(n + 1):
            for S in combinations(range(n), k):
                Sset = set(S)
                left = tuple(w[i] for i in S)
                right = tuple(w[i] for i in range(n) if i not in Sset)
                key = (left, right)
                out[key] = out.get(key, 0) + c
    return PairTensor(s.d, out)


def delta_invariant(x: InvariantElement) -> PairTensor:
    """Coproduct on invariants: ``(frakS (x) frakS) . delta_coinv . frakS^-1``."""
    pt = delta_coinv(frakS_inv(x))
    out: dict = {}
    for (u, v), c in pt.coeffs.items():
        left = frakS(SymElement._raw(x.d, len(u), {u: Fraction(1)})).coeffs
        right = frakS(SymElement._raw(x.d, len(v), {v: Fraction(1)})).coeffs
        for a, p in left.items():
            for b, q in right.items():
                key = (a, b)
                out[key] = out.get(key, 0) + c * p * q
    return PairTensor(x.d, out)


def pair_from(left, right, d: int | None = None) -> PairTensor:
    """Simple tensor of two elements (Sym or Invariant)."""
    out = {}
    for u, a in left.coeffs.items():
        for v, b in right.coeffs.items():
            out[(u, v)] = a * b
    return PairTensor(left.d if d is None else d, out)


def pair_dot(p: PairTensor, q: PairTensor, invariant: bool = True) -> PairTensor:
    """Componentwise dot product of two pair tensors."""
    out: dict = {}
    for (u1, v1), a in p.coeffs.items():
        for (u2, v2), b in q.coeffs.items():
            lefts = _dot_words(u1, u2, p.d, invariant)
            rights = _dot_words(v1, v2, p.d, invariant)
            for l, x in lefts.items():
                for r, y in rights.items():
                    key = (l, r)
                    nv = out.get(key, 0) + a * b * x * y
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
    return PairTensor(p.d, out)


def pair_star(p: PairTensor, q: PairTensor, ring: GradedRing | None = None, invariant: bool = True) -> PairTensor:
    """Componentwise star product; mismatched outer degrees contribute zero."""
    out: dict = {}
    for (u1, v1), a in p.coeffs.items():
        for (u2, v2), b in q.coeffs.items():
            if len(u1) != len(u2) or len(v1) != len(v2):
                continue
            lefts = _star_words(u1, u2, ring, invariant)
            rights = _star_words(v1, v2, ring, invariant)
            for l, x in lefts.items():
                for r, y in rights.items():
                    key = (l, r)
                    nv = out.get(key, 0) + a * b * x * y
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
    return PairTensor(p.d + q.d, out)


def _dot_words(u, v, d, invariant):
    if invariant:
        return dot_invariant(_inv_word(u, d), _inv_word(v, d)).coeffs
    return {normal_word(u + v): Fraction(1)}


def _star_words(u, v, ring, invariant):
    if invariant:
        return star_words(u, v, ring)
    du = sum(u[0]) if u else 0
    dv = sum(v[0]) if v else 0
    return star_coinv(SymElement._raw(du, len(u), {u: Fraction(1)}),
                      SymElement._raw(dv, len(v), {v: Fraction(1)}), ring).coeffs


def _inv_word(u, d):
    return InvariantElement(TensorElement._raw(sum(u[0]) if u else d, len(u), {u: Fraction(1)}), check=False)


def multiply_pair(p: PairTensor, invariant: bool = True) -> dict:
    """Collapse a pair tensor with the dot product: sum of a . b."""
    out: dict = {}
    for (u, v), c in p.coeffs.items():
        _accumulate(out, _dot_words(u, v, p.d, invariant), c)
    return out


def sym_basis(letters, n: int) -> list[tuple]:
    """Multiset words of length n over ``letters`` (given in basis order)."""
    return [tuple(w) for w in combinations_with_replacement(letters, n)]


def random_sym_element(rng, letters, n: int, terms: int = 3, coeff_range: int = 3) -> SymElement:
    letters = list(letters)
    d = sum(letters[0])
    coeffs = {}
    for _ in range(terms):
        w = normal_word(rng.choice(letters) for _ in range(n))
        c = rng.randint(-coeff_range, coeff_range)
        coeffs[w] = coeffs.get(w, 0) + c
    return SymElement(d, n, coeffs)


def random_tensor(rng, letters, n: int, terms: int = 3, coeff_range: int = 3) -> TensorElement:
    letters = list(letters)
    d = sum(letters[0])
    coeffs: dict = {}
    for _ in range(terms):
        w = tuple(rng.choice(letters) for _ in range(n))
        coeffs[w] = coeffs.get(w, 0) + rng.randint(-coeff_range, coeff_range)
    return TensorElement(d, n, coeffs)


__all__ = [
    "SymElement", "InvariantElement", "PairTensor", "pi", "frakS", "frakS_inv", "to_sym",
    "dot_invariant", "dot_coinv", "star_invariant", "star_coinv", "delta_coinv",
    "delta_invariant", "pair_from", "pair_dot", "pair_star", "multiply_pair",
    "sym_basis", "random_sym_element", "random_tensor", "is_invariant", "normal_word",
]

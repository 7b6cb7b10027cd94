"""Shuffle algebra ``S(B) = sum_{d,n} B_d^{(x)n}``.

A word is a tuple of letters; a letter is an exponent vector (a standard
monomial of ``B_d``), so every letter of a word has the same total degree d.
Positions in splits are 0-based.

Passing ``ring=None`` to a product means the free polynomial ring, where
letters multiply by adding exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Mapping

from .polyring import GradedRing, add_exponents

Word = tuple  # tuple[ExponentVector, ...]


def word_degree(w: Word) -> int | None:
    return sum(w[0]) if w else None


class TensorElement:
    """Rational combination of words of one bidegree ``(d, n)``."""

    __slots__ = ("d", "n", "coeffs")

    def __init__(self, d: int, n: int, coeffs: Mapping[Word, object] = ()):
        self.d = d
        self.n = n
        clean = {}
        for w, c in dict(coeffs).items():
            w = tuple(tuple(x) for x in w)
            if len(w) != n or any(sum(x) != d for x in w):
                raise ValueError(f"word {w} is not of bidegree ({d}, {n})")
            c = Fraction(c)
            if c:
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def word(cls, w, coeff=1) -> TensorElement:
        w = tuple(tuple(x) for x in w)
        if not w:
            raise ValueError("use TensorElement.unit(d) for the empty word")
        return cls(sum(w[0]), len(w), {w: coeff})

    @classmethod
    def unit(cls, d: int = 0) -> TensorElement:
        return cls(d, 0, {(): 1})

    @classmethod
    def _raw(cls, d: int, n: int, coeffs: dict) -> TensorElement:
        # trusted constructor: coeffs already clean
        obj = cls.__new__(cls)
        obj.d, obj.n, obj.coeffs = d, n, coeffs
        return obj

    def __add__(self, other: TensorElement) -> TensorElement:
        _same_bidegree(self, other)
        out = dict(self.coeffs)
        _accumulate(out, other.coeffs)
        return TensorElement._raw(self.d, self.n, out)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + other.scale(-1)

    def scale(self, c) -> TensorElement:
        c = Fraction(c)
        if not c:
            return TensorElement._raw(self.d, self.n, {})
        return TensorElement._raw(self.d, self.n, {w: v * c for w, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return self.n == other.n
        return (self.d, self.n, self.coeffs) == (other.d, other.n, other.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{w}" for w, c in sorted(self.coeffs.items(), reverse=True))
        return f"TensorElement(d={self.d}, n={self.n}: {terms or '0'})"


def _same_bidegree(f: TensorElement, g: TensorElement):
    if (f.d, f.n) != (g.d, g.n) and f.coeffs and g.coeffs:
        raise ValueError(f"bidegree mismatch: ({f.d},{f.n}) vs ({g.d},{g.n})")


def _accumulate(out: dict, terms: Mapping, scale=1):
    for w, c in terms.items():
        nv = out.get(w, 0) + c * scale
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)


@dataclass(frozen=True)
class Split:
    """Complementary increasing position sets of ``range(n + m)``.

    In ``shuffle_product(f, g, split)`` the letters of f go to ``left`` and
    the letters of g to ``right``.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        total = len(self.left) + len(self.right)
        if sorted(self.left + self.right) != list(range(total)):
            raise ValueError(f"not a split of range({total}): {self.left} | {self.right}")
        if list(self.left) != sorted(self.left) or list(self.right) != sorted(self.right):
            raise ValueError("split parts must be increasing")

    @property
    def format(self) -> tuple[int, int]:
        return len(self.left), len(self.right)

    def swap(self) -> Split:
        return Split(self.right, self.left)

    @classmethod
    def from_left(cls, left, total: int) -> Split:
        left = tuple(sorted(left))
        s = set(left)
        return cls(left, tuple(i for i in range(total) if i not in s))


def splits(n: int, m: int) -> list[Split]:
    """All splits of format (n, m), in colex order of the left part."""
    lefts = sorted(combinations(range(n + m), n), key=lambda c: c[::-1])
    return [Split.from_left(c, n + m) for c in lefts]


def reassociate(sigma: Split, tau: Split) -> tuple[Split, Split]:
    """Splits (alpha, beta) with f._sigma (g._tau h) == (f._alpha g)._beta h."""
    s1 = sigma.left
    s2 = tuple(sigma.right[i] for i in tau.left)
    s3 = tuple(sigma.right[i] for i in tau.right)
    s12 = tuple(sorted(s1 + s2))
    pos = {p: i for i, p in enumerate(s12)}
    alpha = Split(tuple(pos[p] for p in s1), tuple(pos[p] for p in s2))
    return alpha, Split(s12, s3)


def shuffle_words(u: Word, v: Word, sigma: Split) -> Word:
    out = [None] * (len(u) + len(v))
    for p, x in zip(sigma.left, u):
        out[p] = x
    for p, x in zip(sigma.right, v):
        out[p] = x
    return tuple(out)


def shuffle_product(f: TensorElement, g: TensorElement, sigma: Split) -> TensorElement:
    """Interleave f's letters at ``sigma.left`` with g's at ``sigma.right``."""
    if sigma.format != (f.n, g.n):
        raise ValueError(f"split of format {sigma.format} used on ({f.n}, {g.n})")
    if f.n and g.n and f.d != g.d:
        raise ValueError(f"inner degree mismatch: {f.d} vs {g.d}")
    d = f.d if f.n else g.d
    out: dict = {}
    for u, a in f.coeffs.items():
        for v, b in g.coeffs.items():
            w = shuffle_words(u, v, sigma)
            nv = out.get(w, 0) + a * b
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return TensorElement._raw(d, f.n + g.n, out)


def star_words(u: Word, v: Word, ring: GradedRing | None = None) -> dict:
    """Letterwise product of two words, expanded into normal-form words."""
    if ring is None or ring.is_free:
        return {tuple(add_exponents(a, b) for a, b in zip(u, v)): Fraction(1)}
    factors = [ring.mul_letters(a, b).items() for a, b in zip(u, v)]
    out: dict = {}
    for combo in product(*factors):
        c = Fraction(1)
        for _, x in combo:
            c *= x
        w = tuple(s for s, _ in combo)
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def star_product(f: TensorElement, g: TensorElement, ring: GradedRing | None = None) -> TensorElement:
    """Positionwise ring product; bidegrees (d, n) x (e, n) -> (d + e, n)."""
    if f.n != g.n:
        raise ValueError(f"outer degree mismatch: {f.n} vs {g.n}")
    out: dict = {}
    for u, a in f.coeffs.items():
        for v, b in g.coeffs.items():
            _accumulate(out, star_words(u, v, ring), a * b)
    return TensorElement._raw(f.d + g.d, f.n, out)


def rewrite_star_shuffle(a: Word, b: Word, f: TensorElement, sigma: Split,
                         ring: GradedRing | None = None) -> tuple[TensorElement, Word]:
    """Move a star multiplier past a shuffle.

    For a word ``a`` of length n+m, a word ``b`` of length m and f of length n,
    with ``sigma`` placing b at ``sigma.left`` and f at ``sigma.right``, return
    ``(h, g)`` such that ``a * (b ._sigma f) == h ._sigma (g * f)``.  ``h`` is a
    tensor rather than a word because letter products reduce in a quotient
    ring.
    """
    a, b = tuple(a), tuple(b)
    if sigma.format != (len(b), f.n) or len(a) != len(b) + f.n:
        raise ValueError("format mismatch between a, b, f and the split")
    g = tuple(a[j] for j in sigma.right)
    a_left = tuple(a[i] for i in sigma.left)
    if not b:
        h = TensorElement.unit(f.d + (sum(a[0]) if a else 0))
    else:
        e = sum(b[0]) + sum(a_left[0])
        h = TensorElement(e, len(b), star_words(a_left, b, ring))
    return h, g


def word_leq_order(w: Word, w2: Word) -> bool:
    """The total order: letters by lex on exponents, words lexicographically."""
    if len(w) != len(w2) or (w and w2 and sum(w[0]) != sum(w2[0])):
        raise ValueError("words of different bidegree are not compared")
    return tuple(w) <= tuple(w2)


def initial_term(f: TensorElement) -> tuple[Word, Fraction]:
    if not f.coeffs:
        raise ValueError("the zero element has no initial term")
    w = max(f.coeffs)
    return w, f.coeffs[w]


def _letter_leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def higman_leq(w: Word, w2: Word) -> bool:
    """Subsequence embedding with pointwise domination of letters (greedy)."""
    j = 0
    for a in w:
        while j < len(w2) and not _letter_leq(a, w2[j]):
            j += 1
        if j == len(w2):
            return False
        j += 1
    return True


ORACLE_MAX_LENGTH = 6


def monomial_membership_oracle(m: Word, m2: Word) -> bool:
    """Is ``m2`` in the shuffle/star ideal generated by ``m`` (free ring)?

    Exhaustive: for every split placing ``m`` among the positions of ``m2``,
    divide letterwise to get the star cofactor, take the remaining letters as
    the shuffle cofactor, and rebuild ``m2`` with the algebra operations.
    Exponential in the word length; restricted to short words.
    """
    m, m2 = tuple(m), tuple(m2)
    if len(m2) > ORACLE_MAX_LENGTH:
        raise ValueError(f"oracle limited to words of length <= {ORACLE_MAX_LENGTH}")
    k, k2 = len(m), len(m2)
    if k > k2:
        return False
    if k == 0:
        return True
    target = TensorElement.word(m2)
    for sigma in splits(k2 - k, k):
        picked = [m2[p] for p in sigma.right]
        n0 = []
        for big, small in zip(picked, m):
            quotient = tuple(x - y for x, y in zip(big, small))
            if any(q < 0 for q in quotient):
                break
            n0.append(quotient)
        else:
            n1 = tuple(m2[p] for p in sigma.left)
            inner = star_product(TensorElement.word(n0), TensorElement.word(m))
            left = TensorElement.word(n1) if n1 else TensorElement.unit(inner.d)
            if shuffle_product(left, inner, sigma) == target:
                return True
    return False


def iter_words(letters, n: int) -> Iterator[Word]:
    return product(letters, repeat=n)

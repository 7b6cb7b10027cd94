"""Truncated graded rings ``k[x0..x(r-1)] / I`` with homogeneous relations.

Each graded piece ``B_d`` is computed on demand as ``Sym^d`` modulo the degree-d
part of the ideal.  The basis of ``B_d`` is the set of standard monomials, i.e.
the monomials that are not pivots of the reduced ideal piece under descending
lexicographic order, so letters of a word over ``B`` are still exponent
vectors.
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .exactlin import Echelon, RatMatrix

ExponentVector = tuple  # tuple[int, ...]


@lru_cache(maxsize=None)
def sym_monomials(r: int, d: int) -> tuple[ExponentVector, ...]:
    """All exponent vectors of length ``r`` and total degree ``d``, descending lex."""
    if r < 1 or d < 0:
        raise ValueError(f"need r >= 1 and d >= 0, got r={r}, d={d}")
    if r == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in sym_monomials(r - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


def add_exponents(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Sparse polynomial with rational coefficients keyed by exponent vector."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[ExponentVector, object] = ()):
        self.nvars = nvars
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"


def format_poly(p: Polynomial) -> str:
    """Render in the ring-file grammar; terms in descending lex order."""
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(f"x{i}")
            elif k > 1:
                factors.append(f"x{i}^{k}")
        mag = abs(c)
        if mag.denominator != 1:
            coeff = f"{mag.numerator}/{mag.denominator}"
        else:
            coeff = str(mag.numerator)
        if not factors:
            body = coeff
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = coeff + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


class _PolyParser:
    # poly   := ['-'] term (('+'|'-') term)*
    # term   := [integer '*'] factor ('*' factor)*
    # factor := 'x' index ['^' positive-integer]

    def __init__(self, text: str, nvars: int):
        self.s = text
        self.i = 0
        self.nvars = nvars

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.s, self.i)

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def integer(self) -> int:
        self.skip()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected integer")
        if self.i < len(self.s) and self.s[self.i] in "./eE":
            self.error("non-integer coefficient")
        return int(self.s[j:self.i])

    def factor(self) -> ExponentVector:
        if self.peek() != "x":
            self.error("expected variable")
        self.i += 1
        if self.i >= len(self.s) or not self.s[self.i].isdigit():
            self.error("expected variable index")
        start = self.i
        idx = self.integer()
        if idx >= self.nvars:
            self.i = start
            self.error(f"variable x{idx} out of range for {self.nvars} variables")
        k = 1
        if self.peek() == "^":
            self.i += 1
            k = self.integer()
            if k < 1:
                self.error("exponent must be positive")
        e = [0] * self.nvars
        e[idx] = k
        return tuple(e)

    def term(self) -> tuple[int, ExponentVector]:
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer()
            if self.peek() != "*":
                self.error("expected '*' after coefficient")
            self.i += 1
        e = self.factor()
        while self.peek() == "*":
            self.i += 1
            e = add_exponents(e, self.factor())
        return coeff, e

    def parse(self) -> Polynomial:
        terms: dict[ExponentVector, Fraction] = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.i += 1
        while True:
            c, e = self.term()
            terms[e] = terms.get(e, Fraction(0)) + sign * c
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = 1 if ch == "+" else -1
            self.i += 1
        return Polynomial(self.nvars, terms)


def parse_poly(text: str, r: int) -> Polynomial:
    """Parse e.g. ``"x0^2 - 3*x1*x2"`` into a polynomial in ``r`` variables."""
    return _PolyParser(text, r).parse()


class GradedRing:
    """``k[x0..x(r-1)]`` modulo homogeneous relations, computed degree by degree.

    Per-degree data (ideal piece, standard monomial basis, reduction table) is
    cached lazily and never evicted; a lock makes the cache safe to share.
    """

    def __init__(self, nvars: int, relations=()):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        rels = []
        for g in relations:
            if isinstance(g, str):
                g = parse_poly(g, nvars)
            if g.nvars != nvars:
                raise ValueError("relation in the wrong number of variables")
            if not g:
                continue
            if not g.is_homogeneous():
                raise ValueError(f"relation {g} is not homogeneous")
            if g.degree < 1:
                raise ValueError("relations must have positive degree")
            rels.append(g)
        self.relations = tuple(rels)
        self._lock = threading.RLock()
        self._pieces: dict[int, tuple] = {}
        self._mul_cache: dict[tuple, dict] = {}
        self.cache: dict = {}  # scratch space for consumers (secant ideals)

    @classmethod
    def from_spec(cls, spec: Mapping) -> GradedRing:
        if not isinstance(spec, Mapping) or "vars" not in spec:
            raise ValueError('ring spec must be an object with a "vars" field')
        nvars = spec["vars"]
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 1:
            raise ValueError('"vars" must be an integer >= 1')
        rels = spec.get("relations", [])
        if not isinstance(rels, list) or not all(isinstance(x, str) for x in rels):
            raise ValueError('"relations" must be a list of strings')
        return cls(nvars, rels)

    @classmethod
    def from_file(cls, path) -> GradedRing:
        with open(path, encoding="utf-8") as fh:
            return cls.from_spec(json.load(fh))

    def to_spec(self) -> dict:
        return {"vars": self.nvars, "relations": [format_poly(g) for g in self.relations]}

    @property
    def is_free(self) -> bool:
        return not self.relations

    def __repr__(self) -> str:
        rels = ", ".join(format_poly(g) for g in self.relations)
        return f"GradedRing({self.nvars}, [{rels}])"

    def _piece(self, d: int):
        with self._lock:
            got = self._pieces.get(d)
            if got is not None:
                return got
            monos = sym_monomials(self.nvars, d)
            index = {m: i for i, m in enumerate(monos)}
            ech = Echelon(len(monos))
            for g in self.relations:
                e = g.degree
                if e > d:
                    continue
                for m in sym_monomials(self.nvars, d - e):
                    ech.add({index[add_exponents(m, t)]: c for t, c in g.terms.items()})
            ideal, pivots = ech.matrix()
            pivot_set = set(pivots)
            basis = tuple(m for i, m in enumerate(monos) if i not in pivot_set)
            # pivot monomial -> its normal form in the standard monomials
            normal = {}
            for row, c in zip(ideal.rows, pivots):
                normal[monos[c]] = {monos[k]: -v for k, v in row.items() if k != c}
            got = (monos, ideal, basis, {m: i for i, m in enumerate(basis)}, normal)
            self._pieces[d] = got
            return got

    def ideal_piece(self, d: int) -> RatMatrix:
        """rref basis of ``I_d`` in ``sym_monomials(r, d)`` coordinates."""
        return self._piece(d)[1]

    def graded_basis(self, d: int) -> tuple[ExponentVector, ...]:
        """Standard monomials spanning ``B_d``, descending lex."""
        return self._piece(d)[2]

    def basis_index(self, d: int) -> dict[ExponentVector, int]:
        return self._piece(d)[3]

    def dim(self, d: int) -> int:
        return len(self._piece(d)[2])

    def hilbert_function(self, d_max: int) -> list[int]:
        return [self.dim(d) for d in range(d_max + 1)]

    def reduce_monomial(self, m: ExponentVector) -> dict[ExponentVector, Fraction]:
        if not self.relations:
            return {m: Fraction(1)}
        normal = self._piece(sum(m))[4]
        got = normal.get(m)
        return dict(got) if got is not None else {m: Fraction(1)}

    def reduce(self, p) -> dict[ExponentVector, Fraction]:
        """Normal form of a homogeneous polynomial (``Polynomial`` or dict)."""
        terms = p.terms if isinstance(p, Polynomial) else p
        out: dict[ExponentVector, Fraction] = {}
        for m, c in terms.items():
            for s, v in self.reduce_monomial(tuple(m)).items():
                nv = out.get(s, 0) + c * v
                if nv:
                    out[s] = nv
                else:
                    out.pop(s, None)
        return out

    def mul_letters(self, a: ExponentVector, b: ExponentVector) -> dict[ExponentVector, Fraction]:
        """Product of two standard monomials, as a normal form."""
        if not self.relations:
            return {add_exponents(a, b): Fraction(1)}
        key = (a, b) if a <= b else (b, a)
        got = self._mul_cache.get(key)
        if got is None:
            got = self.reduce_monomial(add_exponents(a, b))
            self._mul_cache[key] = got
        return got

    def multiply(self, a: Mapping, b: Mapping) -> dict[ExponentVector, Fraction]:
        """Product of elements of ``B_d`` and ``B_e`` given in standard-monomial coordinates."""
        out: dict[ExponentVector, Fraction] = {}
        for m, x in a.items():
            for n, y in b.items():
                for s, v in self.mul_letters(m, n).items():
                    nv = out.get(s, 0) + x * y * v
                    if nv:
                        out[s] = nv
                    else:
                        out.pop(s, None)
        return out

    def one(self) -> dict[ExponentVector, Fraction]:
        return {(0,) * self.nvars: Fraction(1)}


def free_dim(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1)


@lru_cache(maxsize=None)
def polynomial_ring(nvars: int) -> GradedRing:
    """Shared free polynomial ring, so secant caches are reused across calls."""
    return GradedRing(nvars)

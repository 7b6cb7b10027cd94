"""Randomized identity suites for the shuffle and Hopf-ring structure.

Every suite draws from one ``random.Random(seed)`` stream (Python's Mersenne
Twister), so a run is reproducible from ``(seed, trials, config)``.  Each
suite returns a :class:`SuiteResult`; a failure means an implementation bug,
since every checked identity is a theorem.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from . import hopf, secant, shuffle
from .exactlin import same_subspace
from .hopf import (
    InvariantElement, PairTensor, SymElement, delta_coinv, dot_coinv, dot_invariant, frakS,
    frakS_inv, multiply_pair, pair_dot, pair_from, pair_star, pi,
)
from .polyring import GradedRing, polynomial_ring
from .shuffle import (
    Split, TensorElement, higman_leq, initial_term, monomial_membership_oracle, reassociate,
    rewrite_star_shuffle, shuffle_product, splits, star_product,
)


@dataclass
class VerifyConfig:
    ring: GradedRing
    d_max: int = 3
    n_max: int = 3


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, good: bool, example=None):
        self.trials += 1
        if not good:
            self.failures += 1
            if len(self.examples) < 3:
                self.examples.append(example)


# --- random inputs ----------------------------------------------------------

def _letters(cfg: VerifyConfig, d: int):
    return cfg.ring.graded_basis(d)


def _rand_word(rng, cfg, d, n):
    letters = _letters(cfg, d)
    return tuple(rng.choice(letters) for _ in range(n))


def _rand_tensor(rng, cfg, d, n, terms=3) -> TensorElement:
    if n == 0:
        return TensorElement.unit(d).scale(rng.choice([1, 2, -1]))
    return hopf.random_tensor(rng, _letters(cfg, d), n, terms)


def _rand_sym(rng, cfg, d, n, terms=3) -> SymElement:
    if n == 0:
        return SymElement.unit(d).scale(rng.choice([1, 2, -1]))
    return hopf.random_sym_element(rng, _letters(cfg, d), n, terms)


def _rand_inv(rng, cfg, d, n, terms=2) -> InvariantElement:
    return frakS(_rand_sym(rng, cfg, d, n, terms))


def _rand_split(rng, n, m) -> Split:
    return rng.choice(splits(n, m))


def _rand_d(rng, cfg):
    return rng.randint(1, cfg.d_max)


# --- shuffle algebra ----------------------------------------------------------

def suite_shuffle_commutativity(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("shuffle commutativity")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        f, g = _rand_tensor(rng, cfg, d, n), _rand_tensor(rng, cfg, d, m)
        sigma = _rand_split(rng, n, m)
        res.record(shuffle_product(f, g, sigma) == shuffle_product(g, f, sigma.swap()), (f, g, sigma))
    return res


def suite_shuffle_associativity(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("shuffle associativity")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        a = rng.randint(0, cfg.n_max)
        b = rng.randint(0, cfg.n_max - a)
        c = rng.randint(0, cfg.n_max - a - b)
        f, g, h = (_rand_tensor(rng, cfg, d, k, terms=2) for k in (a, b, c))
        tau = _rand_split(rng, b, c)
        sigma = _rand_split(rng, a, b + c)
        alpha, beta = reassociate(sigma, tau)
        lhs = shuffle_product(f, shuffle_product(g, h, tau), sigma)
        rhs = shuffle_product(shuffle_product(f, g, alpha), h, beta)
        res.record(lhs == rhs, (f, g, h, sigma, tau))
    return res


def suite_star_shuffle_rewrite(rng, trials, cfg) -> SuiteResult:
    """a * (b ._s f) == h ._s (g * f) for the constructed (h, g)."""
    res = SuiteResult("star/shuffle rewriting")
    ring = cfg.ring
    for _ in range(trials):
        d, e = _rand_d(rng, cfg), _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        if n + m == 0:
            n = 1
        a = _rand_word(rng, cfg, e, n + m)
        b = _rand_word(rng, cfg, d, m)
        f = _rand_tensor(rng, cfg, d, n)
        sigma = _rand_split(rng, m, n)
        h, g = rewrite_star_shuffle(a, b, f, sigma, ring)
        b_el = TensorElement.word(b) if b else TensorElement.unit(d)
        g_el = TensorElement.word(g) if g else TensorElement.unit(e)
        lhs = star_product(TensorElement.word(a), shuffle_product(b_el, f, sigma), ring)
        rhs = shuffle_product(h, star_product(g_el, f, ring), sigma)
        res.record(lhs == rhs, (a, b, f, sigma))
    return res


def suite_order_compatibility(rng, trials, cfg) -> SuiteResult:
    """m <= m' implies n*m <= n*m' and n ._s m <= n ._s m' (free ring)."""
    res = SuiteResult("order compatibility")
    free = polynomial_ring(cfg.ring.nvars)
    fc = VerifyConfig(free, cfg.d_max, cfg.n_max)
    for _ in range(trials):
        d, e = _rand_d(rng, fc), _rand_d(rng, fc)
        n = rng.randint(1, fc.n_max)
        m1, m2 = sorted([_rand_word(rng, fc, d, n), _rand_word(rng, fc, d, n)])
        mult = _rand_word(rng, fc, e, n)
        s1 = initial_term(star_product(TensorElement.word(mult), TensorElement.word(m1)))[0]
        s2 = initial_term(star_product(TensorElement.word(mult), TensorElement.word(m2)))[0]
        k = rng.randint(0, max(0, fc.n_max - n))
        left = TensorElement.word(_rand_word(rng, fc, d, k)) if k else TensorElement.unit(d)
        sigma = _rand_split(rng, k, n)
        w1 = initial_term(shuffle_product(left, TensorElement.word(m1), sigma))[0]
        w2 = initial_term(shuffle_product(left, TensorElement.word(m2), sigma))[0]
        res.record(shuffle.word_leq_order(s1, s2) and shuffle.word_leq_order(w1, w2), (m1, m2, mult))
    return res


def suite_initial_term_actions(rng, trials, cfg) -> SuiteResult:
    """init(u * f) = u * init(f) and init(u ._s f) = u ._s init(f) for monomials u."""
    res = SuiteResult("initial term under monomial actions")
    free = polynomial_ring(cfg.ring.nvars)
    fc = VerifyConfig(free, cfg.d_max, cfg.n_max)
    for _ in range(trials):
        d, e = _rand_d(rng, fc), _rand_d(rng, fc)
        n = rng.randint(1, fc.n_max)
        f = _rand_tensor(rng, fc, d, n, terms=4)
        if not f:
            f = TensorElement.word(_rand_word(rng, fc, d, n))
        w, c = initial_term(f)
        u = TensorElement.word(_rand_word(rng, fc, e, n))
        ok_star = initial_term(star_product(u, f)) == initial_term(star_product(u, TensorElement.word(w, c)))
        k = rng.randint(0, max(0, fc.n_max - n))
        left = TensorElement.word(_rand_word(rng, fc, d, k)) if k else TensorElement.unit(d)
        sigma = _rand_split(rng, k, n)
        ok_shuf = (initial_term(shuffle_product(left, f, sigma))
                   == initial_term(shuffle_product(left, TensorElement.word(w, c), sigma)))
        res.record(ok_star and ok_shuf, (f, u))
    return res


def higman_domain(nvars: int = 2, max_entry: int = 2, max_len: int = 3) -> list[tuple]:
    """All words of uniform letter degree with entries <= max_entry."""
    letters_by_degree: dict[int, list] = {}
    for v in product(range(max_entry + 1), repeat=nvars):
        letters_by_degree.setdefault(sum(v), []).append(v)
    words = [()]
    for n in range(1, max_len + 1):
        for deg in sorted(letters_by_degree):
            words.extend(product(sorted(letters_by_degree[deg], reverse=True), repeat=n))
    return words


def suite_higman_vs_oracle(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("embedding order vs ideal membership")
    domain = higman_domain(cfg.ring.nvars)
    for _ in range(trials):
        w1, w2 = rng.choice(domain), rng.choice(domain)
        res.record(higman_leq(w1, w2) == monomial_membership_oracle(w1, w2), (w1, w2))
    return res


# --- symmetrization -----------------------------------------------------------

def suite_symmetrize_star(rng, trials, cfg) -> SuiteResult:
    """pi(g * f) == pi(g) * f for invariant f."""
    res = SuiteResult("symmetrization vs star")
    ring = cfg.ring
    for _ in range(trials):
        d, e = _rand_d(rng, cfg), _rand_d(rng, cfg)
        n = rng.randint(1, cfg.n_max)
        f = _rand_inv(rng, cfg, d, n)
        g = _rand_tensor(rng, cfg, e, n)
        lhs = pi(star_product(g, f.underlying, ring))
        rhs = hopf.star_invariant(pi(g), f, ring)
        res.record(lhs == rhs, (f, g))
    return res


def suite_symmetrize_shuffle(rng, trials, cfg) -> SuiteResult:
    """C(n+m, n) pi(f ._s g) == pi(f) . pi(g) for every split."""
    res = SuiteResult("symmetrization vs shuffle")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        f, g = _rand_tensor(rng, cfg, d, n), _rand_tensor(rng, cfg, d, m)
        sigma = _rand_split(rng, n, m)
        lhs = pi(shuffle_product(f, g, sigma)).scale(comb(n + m, n))
        rhs = dot_invariant(pi(f), pi(g))
        res.record(lhs == rhs, (f, g, sigma))
    return res


def suite_symmetrization_inverse(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("symmetrization inverse")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        s = _rand_sym(rng, cfg, d, n)
        x = pi(_rand_tensor(rng, cfg, d, n))
        res.record(frakS_inv(frakS(s)) == s and frakS(frakS_inv(x)) == x, (s, x))
    return res


def primitive_route_coproduct(s: SymElement) -> PairTensor:
    """Coproduct of frakS(s) computed as a dot product of primitive elements.

    frakS(w_1...w_n) = w_1 . ... . w_n with each degree-one w_i primitive, so
    its coproduct is the product of (1 (x) w_i + w_i (x) 1) in the invariant
    tensor square.  Independent of the transport used by ``delta_invariant``.
    """
    total = PairTensor(s.d)
    one = ((), ())
    for w, c in s.coeffs.items():
        acc = PairTensor(s.d, {one: 1})
        for letter in w:
            acc = pair_dot(acc, PairTensor(s.d, {((), (letter,)): 1, ((letter,), ()): 1}))
        total = total + PairTensor(s.d, {k: v * c for k, v in acc.coeffs.items()})
    return total


def suite_symmetrization_bialgebra(rng, trials, cfg) -> SuiteResult:
    """frakS(f . g) == frakS(f) . frakS(g), and frakS intertwines the coproducts."""
    res = SuiteResult("symmetrization is a bialgebra map")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        f, g = _rand_sym(rng, cfg, d, n), _rand_sym(rng, cfg, d, m)
        ok_dot = frakS(dot_coinv(f, g)) == dot_invariant(frakS(f), frakS(g))
        s = _rand_sym(rng, cfg, d, n)
        transported = _frakS_pair(delta_coinv(s))
        ok_delta = (hopf.delta_invariant(frakS(s)) == transported == primitive_route_coproduct(s))
        res.record(ok_dot and ok_delta, (f, g, s))
    return res


def _frakS_pair(p: PairTensor) -> PairTensor:
    out: dict = {}
    for (u, v), c in p.coeffs.items():
        du = sum(u[0]) if u else p.d
        dv = sum(v[0]) if v else p.d
        left = frakS(SymElement._raw(du, len(u), {u: Fraction(1)})).coeffs
        right = frakS(SymElement._raw(dv, len(v), {v: Fraction(1)})).coeffs
        for a, x in left.items():
            for b, y in right.items():
                out[(a, b)] = out.get((a, b), 0) + c * x * y
    return PairTensor(p.d, out)


def suite_coproduct_dot(rng, trials, cfg) -> SuiteResult:
    """Delta(y . v) == Delta(y) . Delta(v)."""
    res = SuiteResult("coproduct respects dot")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        y, v = _rand_inv(rng, cfg, d, m), _rand_inv(rng, cfg, d, n)
        lhs = hopf.delta_invariant(dot_invariant(y, v))
        rhs = pair_dot(hopf.delta_invariant(y), hopf.delta_invariant(v))
        res.record(lhs == rhs, (y, v))
    return res


def suite_coproduct_star(rng, trials, cfg) -> SuiteResult:
    """Delta(x * v) == Delta(x) * Delta(v)."""
    res = SuiteResult("coproduct respects star")
    ring = cfg.ring
    for _ in range(trials):
        d, e = _rand_d(rng, cfg), _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        x, v = _rand_inv(rng, cfg, e, n), _rand_inv(rng, cfg, d, n)
        lhs = hopf.delta_invariant(hopf.star_invariant(x, v, ring))
        rhs = pair_star(hopf.delta_invariant(x), hopf.delta_invariant(v), ring)
        res.record(lhs == rhs, (x, v))
    return res


def suite_star_distributes(rng, trials, cfg) -> SuiteResult:
    """a * (b . f) == sum (a1 * b) . (a2 * f) over Delta(a)."""
    res = SuiteResult("star distributes over dot")
    ring = cfg.ring
    for _ in range(trials):
        d, e = _rand_d(rng, cfg), _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        m = rng.randint(0, cfg.n_max - n)
        a = _rand_inv(rng, cfg, e, n + m)
        b, f = _rand_inv(rng, cfg, d, m), _rand_inv(rng, cfg, d, n)
        lhs = hopf.star_invariant(a, dot_invariant(b, f), ring)
        rhs = multiply_pair(pair_star(hopf.delta_invariant(a), pair_from(b, f), ring))
        res.record(lhs.coeffs == rhs, (a, b, f))
    return res


def suite_coassociativity(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("coproduct coassociativity")
    for _ in range(trials):
        d = _rand_d(rng, cfg)
        n = rng.randint(0, cfg.n_max)
        s = _rand_sym(rng, cfg, d, n)
        left: dict = {}
        right: dict = {}
        for (u, v), c in delta_coinv(s).coeffs.items():
            for (u1, u2), c2 in delta_coinv(SymElement._raw(d, len(u), {u: Fraction(1)})).coeffs.items():
                key = (u1, u2, v)
                left[key] = left.get(key, 0) + c * c2
            for (v1, v2), c2 in delta_coinv(SymElement._raw(d, len(v), {v: Fraction(1)})).coeffs.items():
                key = (u, v1, v2)
                right[key] = right.get(key, 0) + c * c2
        clean = lambda t: {k: x for k, x in t.items() if x}
        res.record(clean(left) == clean(right), s)
    return res


# --- ideals -------------------------------------------------------------------

def hyperplane_ideal(ring: GradedRing) -> secant.BigradedSubspace:
    """Multiset words containing the first basis letter: ideal of a coordinate hyperplane."""
    def gens(d, n):
        first = ring.graded_basis(d)[0]
        words = secant.sym_basis_indexed(ring, d, n)[0]
        return [SymElement._raw(d, n, {w: Fraction(1)}) for w in words if first in w]
    return secant.subspace_from_generators(ring, gens, "hyperplane")


def suite_join_laws(rng, trials, cfg) -> SuiteResult:
    """I join 0 = 0, I join (augmentation) = I, and commutativity, at every bidegree."""
    res = SuiteResult("join laws")
    if trials <= 0:
        return res
    ring = cfg.ring
    V = secant.veronese_ideal(ring)
    zero, aug = secant.zero_ideal(ring), secant.augmentation_ideal(ring)
    H = hyperplane_ideal(ring)
    S2 = secant.secant_ideal(ring, 2)
    for d in range(1, cfg.d_max + 1):
        for n in range(1, cfg.n_max + 1):
            res.record(secant.join_piece(V, zero, d, n).nrows == 0, ("zero", d, n))
            res.record(same_subspace(secant.join_piece(V, aug, d, n), V.piece(d, n)), ("aug", d, n))
            res.record(same_subspace(secant.join_piece(V, H, d, n), secant.join_piece(H, V, d, n)), ("comm", d, n))
            res.record(same_subspace(secant.join_piece(V, S2, d, n), secant.join_piece(S2, V, d, n)), ("comm2", d, n))
    return res


def suite_di_ideal_closure(rng, trials, cfg) -> SuiteResult:
    res = SuiteResult("di-ideal closure")
    for r in (1, 2):
        rep = secant.di_ideal_closure_check(secant.secant_ideal(cfg.ring, r), trials, rng.randrange(2**32),
                                            d_max=cfg.d_max, e_max=cfg.d_max, n_max=cfg.n_max)
        for _ in range(rep.passed):
            res.record(True)
        for fail in rep.failures:
            res.record(False, (r,) + fail)
    return res


SUITES = [
    suite_shuffle_commutativity,
    suite_shuffle_associativity,
    suite_star_shuffle_rewrite,
    suite_order_compatibility,
    suite_initial_term_actions,
    suite_higman_vs_oracle,
    suite_symmetrize_star,
    suite_symmetrize_shuffle,
    suite_symmetrization_inverse,
    suite_symmetrization_bialgebra,
    suite_coproduct_dot,
    suite_coproduct_star,
    suite_star_distributes,
    suite_coassociativity,
    suite_join_laws,
    suite_di_ideal_closure,
]


def run_all(seed: int, trials: int, cfg: VerifyConfig, suites=None) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [suite(rng, trials, cfg) for suite in (suites or SUITES)]

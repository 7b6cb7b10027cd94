from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsecant.hopf import (
    InvariantElement, PairTensor, SymElement, delta_coinv, delta_invariant, dot_coinv, dot_invariant,
    frakS, frakS_inv, is_invariant, pi, star_coinv, star_invariant,
)
from hopfsecant.polyring import polynomial_ring
from hopfsecant.shuffle import TensorElement
from hopfsecant.verify import primitive_route_coproduct

u, v = (2, 0), (1, 1)
X, Y = (1, 0), (0, 1)
EMPTY = ()


def W(*letters, c=1):
    return TensorElement.word(letters, c)


def S(*letters, c=1):
    return SymElement.monomial(letters, c)


def inv(t: TensorElement) -> InvariantElement:
    return InvariantElement(t)


def test_pi_examples():
    half = Fraction(1, 2)
    assert pi(W(u, v)).underlying == W(u, v, c=half) + W(v, u, c=half)
    sym = W(u, v) + W(v, u)
    assert pi(sym).underlying == sym
    assert pi(W(u, u)).underlying == W(u, u)


def test_invariant_element_rejects_non_invariant():
    with pytest.raises(ValueError):
        InvariantElement(W(u, v))
    assert is_invariant(W(u, v) + W(v, u))


def test_frakS_examples():
    assert frakS(S(u)).underlying == W(u)
    assert frakS(S(u, v)).underlying == W(u, v) + W(v, u)
    assert frakS(S(u, u)).underlying == W(u, u, c=2)


def test_frakS_inv_examples():
    assert frakS_inv(inv(W(u, v) + W(v, u))) == S(u, v)
    assert frakS_inv(inv(W(u, u, c=2))) == S(u, u)
    assert frakS_inv(inv(W(u, c=3))) == S(u, c=3)


def test_dot_invariant_examples():
    one = InvariantElement.unit(2)
    x = inv(W(u))
    assert dot_invariant(one, x) == x == dot_invariant(x, one)
    assert dot_invariant(inv(W(u)), inv(W(v))).underlying == W(u, v) + W(v, u)
    assert dot_invariant(inv(W(u)), inv(W(u))).underlying == W(u, u, c=2)


def test_dot_coinv_examples():
    assert dot_coinv(S(u), S(v)) == S(u, v)
    assert dot_coinv(S(u, v), S(u)) == S(u, u, v)


def test_star_invariant_examples():
    ring = polynomial_ring(2)
    assert star_invariant(inv(W(X)), inv(W(Y)), ring).underlying == W((1, 1))
    a, b, c, d = (1, 0), (0, 1), (1, 0), (0, 1)
    f = inv(W(a, b) + W(b, a))
    g = inv(W((2, 0), (0, 2)) + W((0, 2), (2, 0)))
    got = star_invariant(f, g, ring).underlying
    expected = (W((3, 0), (0, 3)) + W((0, 3), (3, 0)) + W((1, 2), (2, 1)) + W((2, 1), (1, 2)))
    assert got == expected
    assert star_invariant(inv(W(c)), inv(W(d)), ring) == inv(W((1, 1)))


def test_star_coinv_single_variable_remark():
    # B = k[x]: [x^d]^n * [x^e]^n = n! [x^(d+e)]^n
    ring = polynomial_ring(1)
    for d, e, n in [(1, 1, 2), (2, 1, 3), (1, 3, 4)]:
        got = star_coinv(S(*[(d,)] * n), S(*[(e,)] * n), ring)
        assert got == S(*[(d + e,)] * n, c=factorial(n))


def test_star_coinv_examples():
    ring = polynomial_ring(2)
    assert star_coinv(S(X), S(Y), ring) == S((1, 1))
    assert star_coinv(S(X, Y), S(X, X), ring) == S((2, 0), (1, 1), c=2)


def test_star_coinv_matches_transport():
    ring = polynomial_ring(2)
    rng = random.Random(3)
    letters1, letters2 = ring.graded_basis(1), ring.graded_basis(2)
    for _ in range(30):
        n = rng.randint(1, 3)
        f = SymElement.monomial([rng.choice(letters1) for _ in range(n)])
        g = SymElement.monomial([rng.choice(letters2) for _ in range(n)])
        transported = frakS_inv(star_invariant(frakS(f), frakS(g), ring))
        assert star_coinv(f, g, ring) == transported


def test_delta_coinv_examples():
    w = (1, 1)
    assert delta_coinv(S(w)) == PairTensor(2, {((w,), EMPTY): 1, (EMPTY, (w,)): 1})
    assert delta_coinv(S(w, w)) == PairTensor(2, {((w, w), EMPTY): 1, ((w,), (w,)): 2, (EMPTY, (w, w)): 1})
    assert delta_coinv(SymElement.unit(2)) == PairTensor(2, {(EMPTY, EMPTY): 1})


def test_delta_invariant_examples():
    w = (1, 1)
    assert delta_invariant(inv(W(w))) == PairTensor(2, {((w,), EMPTY): 1, (EMPTY, (w,)): 1})
    assert delta_invariant(InvariantElement.unit(2)) == PairTensor(2, {(EMPTY, EMPTY): 1})
    x = frakS(S(u, v))
    expected = PairTensor(2, {
        ((u, v), EMPTY): 1, ((v, u), EMPTY): 1, (EMPTY, (u, v)): 1, (EMPTY, (v, u)): 1,
        ((u,), (v,)): 1, ((v,), (u,)): 1,
    })
    assert delta_invariant(x) == expected


def unshuffle_coproduct(x: InvariantElement) -> PairTensor:
    """Independent formula: sum over position subsets S of C(n,|S|)^-1 w_S (x) w_rest."""
    out: dict = {}
    for w, c in x.coeffs.items():
        n = len(w)
        for k in range(n + 1):
            for sub in combinations(range(n), k):
                rest = tuple(i for i in range(n) if i not in sub)
                key = (tuple(w[i] for i in sub), tuple(w[i] for i in rest))
                out[key] = out.get(key, 0) + c * Fraction(1, comb(n, k))
    return PairTensor(x.d, out)


letters2 = st.sampled_from([(2, 0), (1, 1), (0, 2)])


@st.composite
def sym_elements(draw, max_n=3):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return SymElement.unit(2).scale(draw(st.integers(-3, 3)))
    words = draw(st.lists(st.tuples(*[letters2] * n), min_size=1, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(words), max_size=len(words)))
    out = SymElement(2, n)
    for w, c in zip(words, coeffs):
        out = out + SymElement.monomial(w, c)
    return out


@settings(max_examples=100, deadline=None)
@given(sym_elements())
def test_delta_invariant_matches_unshuffle_and_primitive_routes(s):
    x = frakS(s)
    assert delta_invariant(x) == unshuffle_coproduct(x)
    assert delta_invariant(x) == primitive_route_coproduct(s)


@settings(max_examples=100, deadline=None)
@given(sym_elements())
def test_frakS_roundtrip(s):
    assert frakS_inv(frakS(s)) == s


@settings(max_examples=100, deadline=None)
@given(sym_elements(max_n=2), sym_elements(max_n=2))
def test_frakS_multiplicative_for_dot(f, g):
    assert frakS(dot_coinv(f, g)) == dot_invariant(frakS(f), frakS(g))


@settings(max_examples=60, deadline=None)
@given(sym_elements(max_n=2), sym_elements(max_n=2))
def test_dot_coinv_commutative(f, g):
    assert dot_coinv(f, g) == dot_coinv(g, f)


def test_counit_property():
    s = S(u, v, v, c=3)
    parts = delta_coinv(s).components()
    assert parts[(0, 3)] == {(EMPTY, s_word): c for s_word, c in s.coeffs.items()}

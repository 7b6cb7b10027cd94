from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsecant.polyring import GradedRing
from hopfsecant.shuffle import (
    ORACLE_MAX_LENGTH, Split, TensorElement, higman_leq, initial_term, monomial_membership_oracle,
    reassociate, rewrite_star_shuffle, shuffle_product, splits, star_product, word_leq_order,
)
from hopfsecant.verify import higman_domain

X, Y = (1, 0), (0, 1)
CONE = GradedRing(3, ["x0*x2 - x1^2"])
x3, y3, z3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def W(*letters, c=1):
    return TensorElement.word(letters, c)


def test_shuffle_with_unit():
    f = W(X)
    assert shuffle_product(f, TensorElement.unit(1), Split((0,), ())) == f
    assert shuffle_product(TensorElement.unit(1), f, Split((), (0,))) == f


def test_shuffle_examples():
    u, v = (2, 0), (0, 2)
    assert shuffle_product(W(u), W(v), Split((1,), (0,))) == W(v, u)
    u1, u2 = (2, 0), (1, 1)
    assert shuffle_product(W(u1, u2), W(v), Split((0, 2), (1,))) == W(u1, v, u2)


def test_splits_enumeration():
    ss = splits(2, 2)
    assert len(ss) == 6
    assert ss[0] == Split((0, 1), (2, 3))
    assert len(set(ss)) == 6
    assert splits(0, 3) == [Split((), (0, 1, 2))]


def test_split_validation():
    with pytest.raises(ValueError):
        Split((0,), (0,))
    with pytest.raises(ValueError):
        Split((1, 0), (2,))


def test_shuffle_format_checked():
    with pytest.raises(ValueError):
        shuffle_product(W(X), W(Y), Split((0, 1), ()))
    with pytest.raises(ValueError):
        shuffle_product(W(X), W((2, 0)), Split((0,), (1,)))


def test_star_examples():
    assert star_product(W(X), W(Y)) == W((1, 1))
    assert star_product(W(X, X), W(Y, Y)) == W((1, 1), (1, 1))
    assert star_product(W(x3, z3), W(z3, x3), CONE) == W((0, 2, 0), (0, 2, 0))


def test_star_length_mismatch():
    with pytest.raises(ValueError):
        star_product(W(X), W(X, Y))


def test_rewrite_example():
    p, q, s, t = (1, 0), (0, 1), (2, 0), (1, 1)
    sigma = Split((0,), (1,))
    h, g = rewrite_star_shuffle((p, q), (s,), W(t), sigma)
    assert h == W((3, 0)) and g == (q,)
    lhs = star_product(W(p, q), shuffle_product(W(s), W(t), sigma))
    assert lhs == W((3, 0), (1, 2))
    assert lhs == shuffle_product(h, star_product(W(*g), W(t)), sigma)


def test_rewrite_degenerate_formats():
    a, b = ((1, 0),), ((0, 2),)
    h, g = rewrite_star_shuffle(a, b, TensorElement.unit(2), Split((0,), ()))
    assert h == W((1, 2)) and g == ()
    f = W((2, 0))
    h, g = rewrite_star_shuffle(a, (), f, Split((), (0,)))
    assert g == a and h.n == 0


def test_rewrite_in_quotient_ring():
    a, b, f = (x3, y3), (z3,), W(y3)
    sigma = Split((0,), (1,))
    h, g = rewrite_star_shuffle(a, b, f, sigma, CONE)
    assert h == W((0, 2, 0))
    lhs = star_product(W(*a), shuffle_product(W(*b), f, sigma), CONE)
    assert lhs == shuffle_product(h, star_product(W(*g), f, CONE), sigma)


def test_order_examples():
    w = (X, Y)
    assert word_leq_order(w, w)
    assert word_leq_order((Y,), (X,))
    assert word_leq_order((Y, X), (X, Y))
    with pytest.raises(ValueError):
        word_leq_order((X,), (X, X))


def test_initial_term_examples():
    assert initial_term(W(X, Y, c=5)) == ((X, Y), 5)
    assert initial_term(W(X, Y) + W(Y, X)) == ((X, Y), 1)
    f = W(Y, Y, c=2) - W(X, X, c=3)
    assert initial_term(f) == ((X, X), -3)
    with pytest.raises(ValueError):
        initial_term(TensorElement(1, 2))


def test_higman_examples():
    assert higman_leq((), ((1, 0), (0, 1)))
    assert higman_leq(((1, 0),), ((2, 0),))
    assert not higman_leq(((1, 0), (0, 1)), ((0, 1), (1, 0)))
    assert higman_leq(((1, 0), (0, 1)), ((2, 0), (0, 0), (1, 1)))


def test_oracle_examples():
    m = ((1, 0), (0, 1))
    assert monomial_membership_oracle(m, m)
    assert not monomial_membership_oracle(((1, 0),), ((0, 2),))
    with pytest.raises(ValueError):
        monomial_membership_oracle((), ((1, 0),) * (ORACLE_MAX_LENGTH + 1))


def test_higman_matches_oracle_small_exhaustive():
    words = [w for w in higman_domain(2, 1, 2)]
    for w in words:
        for w2 in words:
            assert higman_leq(w, w2) == monomial_membership_oracle(w, w2)


def test_tensor_validation_and_zero():
    with pytest.raises(ValueError):
        TensorElement(1, 1, {((2, 0),): 1})
    assert TensorElement(1, 2) == TensorElement(3, 2)
    assert W(X) - W(X) == TensorElement(1, 1)


# --- property tests ---------------------------------------------------------

letters1 = st.sampled_from([(2, 0), (1, 1), (0, 2)])


@st.composite
def tensors(draw, n):
    if n == 0:
        return TensorElement.unit(2).scale(draw(st.integers(-3, 3)))
    terms = draw(st.dictionaries(st.tuples(*[letters1] * n), st.integers(-3, 3), max_size=3))
    return TensorElement(2, n, terms)


@st.composite
def shuffle_inputs(draw):
    n, m = draw(st.integers(0, 3)), draw(st.integers(0, 3))
    f, g = draw(tensors(n)), draw(tensors(m))
    sigma = draw(st.sampled_from(splits(n, m)))
    return f, g, sigma


@settings(max_examples=150, deadline=None)
@given(shuffle_inputs())
def test_shuffle_commutative(args):
    f, g, sigma = args
    assert shuffle_product(f, g, sigma) == shuffle_product(g, f, sigma.swap())


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.data())
def test_shuffle_associative(a, b, c, data):
    f, g, h = data.draw(tensors(a)), data.draw(tensors(b)), data.draw(tensors(c))
    tau = data.draw(st.sampled_from(splits(b, c)))
    sigma = data.draw(st.sampled_from(splits(a, b + c)))
    alpha, beta = reassociate(sigma, tau)
    assert (shuffle_product(f, shuffle_product(g, h, tau), sigma)
            == shuffle_product(shuffle_product(f, g, alpha), h, beta))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.data())
def test_star_bilinear_and_commutative(n, data):
    f, g, h = data.draw(tensors(n)), data.draw(tensors(n)), data.draw(tensors(n))
    assert star_product(f, g + h) == star_product(f, g) + star_product(f, h)
    assert star_product(f, g) == star_product(g, f)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]), max_size=3),
       st.lists(st.sampled_from([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]), max_size=4))
def test_higman_is_reflexive_and_monotone(w, w2):
    w, w2 = tuple(w), tuple(w2)
    assert higman_leq(w, w)
    if higman_leq(w, w2):
        assert higman_leq(w, w2 + ((2, 2),))
        assert higman_leq(w[1:], w2)

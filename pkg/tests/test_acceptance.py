"""Acceptance gate: one test per criterion, each at its stated tolerance and time limit.

Every test prints (and records for the terminal summary) a single line
``ACCEPTANCE <k> PASS|FAIL <title> (<seconds>s) <detail>``.  Run on its own
with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from math import comb

from hopfsecant import secant, verify
from hopfsecant.exactlin import rank
from hopfsecant.polyring import GradedRing, polynomial_ring
from hopfsecant.shuffle import higman_leq, monomial_membership_oracle

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def _gate(k: int, title: str, limit: float, check):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.2f}s of {limit:g}s"
    line = f"ACCEPTANCE {k} {status} {title} ({timing}) {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, detail
    assert within, f"time limit exceeded: {timing}"


# 1 -------------------------------------------------------------------------

def check_quadric_generation():
    details, ok = [], True
    for v in (2, 3):
        ring = polynomial_ring(v)
        for d in (2, 3):
            prof = secant.ordinary_generator_profile(ring, 1, d, 4)
            degs = prof.generator_degrees()
            N = comb(d + v - 1, v - 1)
            expected = comb(N + 1, 2) - comb(2 * d + v - 1, v - 1)
            got = secant.secant_ideal(ring, 1).dim(d, 2)
            good = degs == [2] and got == expected
            ok &= good
            details.append(f"v={v},d={d}:new@{degs},dim2={got}/{expected}")
    return ok, " ".join(details)


def test_criterion_1_veronese_quadric_generation():
    _gate(1, "Veronese ideals generated by quadrics", 60, check_quadric_generation)


# 2 -------------------------------------------------------------------------

def check_secant2_cubics():
    details, ok = [], True
    ring = polynomial_ring(2)
    for d in (4, 5):
        prof = secant.ordinary_generator_profile(ring, 2, d, 4)
        degs = prof.generator_degrees()
        ok &= degs == [3]
        details.append(f"d={d}:new@{degs}")
    S = secant.secant_ideal(ring, 2)
    dims = (S.dim(4, 2), S.dim(4, 3))
    ok &= dims == (0, 1)
    details.append(f"d=4 dims n=2,3:{dims}")
    det = secant.secant_ideal_piece(polynomial_ring(3), 2, 2, 3).nrows
    ok &= det == 1
    details.append(f"v=3 (2,3):{det}")
    return ok, " ".join(details)


def test_criterion_2_secant2_cubic_generators():
    _gate(2, "second secant ideals start in degree 3", 600, check_secant2_cubics)


# 3 -------------------------------------------------------------------------

IDENTITY_SUITES = [
    verify.suite_star_shuffle_rewrite,
    verify.suite_symmetrize_star,
    verify.suite_symmetrize_shuffle,
    verify.suite_coproduct_dot,
    verify.suite_coproduct_star,
    verify.suite_star_distributes,
    verify.suite_symmetrization_bialgebra,
    verify.suite_shuffle_commutativity,
    verify.suite_shuffle_associativity,
    verify.suite_coassociativity,
]


def check_identity_suites():
    cfg = verify.VerifyConfig(polynomial_ring(2), d_max=3, n_max=3)
    results = verify.run_all(42, 200, cfg, IDENTITY_SUITES)
    ok = all(r.ok and r.trials == 200 for r in results)
    total = sum(r.failures for r in results)
    return ok, f"{len(results)} suites x 200 trials, {total} failures"


def test_criterion_3_identity_suites():
    _gate(3, "Hopf-ring identity suites", 120, check_identity_suites)


# 4 -------------------------------------------------------------------------

def check_higman_oracle():
    words = verify.higman_domain(2, 2, 3)
    pairs = mismatches = 0
    for w in words:
        for w2 in words:
            pairs += 1
            if higman_leq(w, w2) != monomial_membership_oracle(w, w2):
                mismatches += 1
    return mismatches == 0 and pairs >= 4096, f"{pairs} pairs, {mismatches} mismatches"


def test_criterion_4_higman_equals_membership():
    _gate(4, "embedding order equals monomial ideal membership", 60, check_higman_oracle)


# 5 -------------------------------------------------------------------------

def check_join_laws():
    cfg = verify.VerifyConfig(polynomial_ring(2), d_max=3, n_max=3)
    res = verify.suite_join_laws(random.Random(0), 1, cfg)
    return res.ok, f"{res.trials} bidegree checks, {res.failures} failures"


def test_criterion_5_join_laws():
    _gate(5, "join with zero, augmentation, commutativity", 60, check_join_laws)


# 6 -------------------------------------------------------------------------

def check_closure():
    ring = polynomial_ring(2)
    details, ok = [], True
    for r in (1, 2):
        rep = secant.di_ideal_closure_check(secant.secant_ideal(ring, r), 100, seed=42,
                                            d_max=3, e_max=3, n_max=3)
        ok &= rep.ok and rep.trials == 100
        details.append(f"r={r}:{rep.passed}/{rep.trials} passed ({rep.trivial} on zero pieces)")
    return ok, " ".join(details)


def test_criterion_6_di_ideal_closure():
    _gate(6, "secant ideals closed under dot and star", 120, check_closure)


# 7 -------------------------------------------------------------------------

def check_initial_terms():
    cfg = verify.VerifyConfig(polynomial_ring(2), d_max=3, n_max=3)
    rng = random.Random(42)
    a = verify.suite_order_compatibility(rng, 200, cfg)
    b = verify.suite_initial_term_actions(rng, 200, cfg)
    return a.ok and b.ok, f"order {a.trials - a.failures}/{a.trials}, init {b.trials - b.failures}/{b.trials}"


def test_criterion_7_initial_term_machinery():
    _gate(7, "monomial actions preserve order and initial terms", 60, check_initial_terms)


# 8 -------------------------------------------------------------------------

CONE_RELATIONS = ["x0*x2 - x1^2"]


def check_cone_hilbert_function():
    ring = GradedRing(3, CONE_RELATIONS)
    got = ring.hilbert_function(6)
    claimed = [3 * d + 1 for d in range(7)]
    return got == claimed, f"computed {got}, claimed 3d+1 = {claimed}"


def check_cone_rank_formula():
    ring = GradedRing(3, CONE_RELATIONS)
    bad = []
    for d in range(1, 4):
        for n in range(1, 4):
            expected = secant.sym_dim(ring, d, n) - ring.dim(d * n)
            got = secant.veronese_ideal_piece(ring, d, n).nrows
            if got != expected or rank(secant.mult_map(ring, d, n)) != ring.dim(d * n):
                bad.append((d, n, got, expected))
    return not bad, f"d,n<=3 checked, mismatches {bad}"


def test_criterion_8_cone_hilbert_function():
    _gate(8, "quotient ring Hilbert function 3d+1", 60, check_cone_hilbert_function)


def test_criterion_8_cone_rank_formula():
    _gate(8, "quotient ring Veronese rank formula", 60, check_cone_rank_formula)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

import random

import mpmath
import pytest

from classone.bounds import (
    FEASIBLE,
    RULED_OUT_WEIL,
    genus_bounds_for_h,
    is_prime_power,
    rr_upper,
    rr_weil_feasible,
    verdict,
    weil_factor,
    weil_lower_bound_exceeds,
)

H1_FEASIBLE = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1)]


def test_weil_examples():
    assert weil_lower_bound_exceeds(5, 1, 1)
    assert not weil_lower_bound_exceeds(4, 1, 1)
    assert weil_lower_bound_exceeds(9, 2, 3)


def test_weil_factor_exact():
    w = weil_factor(9, 2)
    assert (w.A, w.B) == (136, 40)  # (10 - 2 sqrt 9)^2
    assert w.A - w.B * 3 == 16


def test_rr_examples():
    assert rr_upper(4, 2, 1) == 15
    assert not rr_weil_feasible(4, 2, 1)
    assert rr_upper(2, 4, 1) == 105
    assert rr_weil_feasible(2, 4, 1)
    assert rr_upper(2, 5, 1) == 279
    assert not rr_weil_feasible(2, 5, 1)
    assert rr_weil_feasible(2, 3, 1)
    assert rr_weil_feasible(2, 1, 3)


@pytest.mark.parametrize("args", [(1, 1, 1), (2, 0, 1), (2, 1, 0), (2.0, 1, 1)])
def test_invalid(args):
    with pytest.raises(ValueError):
        weil_lower_bound_exceeds(*args)
    with pytest.raises(ValueError):
        rr_weil_feasible(*args)


def test_prime_powers():
    got = [n for n in range(1, 33) if is_prime_power(n)]
    assert got == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_h1_report():
    rep = genus_bounds_for_h(1)
    assert rep.feasible == H1_FEASIBLE
    assert rep.g_max == {2: 4, 3: 2, 4: 1}
    assert rep.q_max == 4
    assert not rep.gaps
    for (q, g), v in rep.verdicts.items():
        if q >= 5:
            assert v == RULED_OUT_WEIL
    d = rep.to_dict()
    assert d["g_max"] == {"2": 4, "3": 2, "4": 1}
    assert "nothing is claimed outside" in d["scope"]


def test_literal_exponent_differs():
    rep = genus_bounds_for_h(1, literal_exponent=True)
    assert rep.feasible != H1_FEASIBLE


def test_weil_implies_ruled_out():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for g in range(1, 12):
            for h in (1, 2, 5, 50):
                if weil_lower_bound_exceeds(q, g, h):
                    assert verdict(q, g, h) != FEASIBLE
                if verdict(q, g, h) == FEASIBLE:
                    assert rr_weil_feasible(q, g, h)


def test_exact_agrees_with_high_precision():
    rng = random.Random(0)
    mpmath.mp.dps = 200
    checked = 0
    for _ in range(3000):
        q, g, h = rng.randint(2, 64), rng.randint(1, 40), rng.randint(1, 10**4)
        lhs = (mpmath.sqrt(q) - 1) ** (2 * g)
        if abs(lhs - h) > mpmath.mpf("1e-6") * max(abs(lhs), h):
            assert weil_lower_bound_exceeds(q, g, h) == (lhs > h)
            checked += 1
        A = mpmath.mpf(rr_upper(q, g, h))
        rhs = mpmath.mpf(q) ** (2 * g - 1) + 1 - 2 * g * mpmath.mpf(q) ** (mpmath.mpf(2 * g - 1) / 2)
        if abs(A - rhs) > mpmath.mpf("1e-6") * max(abs(A), abs(rhs)):
            assert rr_weil_feasible(q, g, h) == (A >= rhs)
            checked += 1
    assert checked > 5000

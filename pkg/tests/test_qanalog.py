from fractions import Fraction as F

import pytest

from eulerlab.mpoly import MPoly
from eulerlab.qanalog import (binom_poly, fubini_number, gen_binomial,
                              stirling2, subfactorial, t_analog)


def test_gen_binomial_extends_comb():
    from math import comb
    for a in range(8):
        for j in range(8):
            assert gen_binomial(a, j) == comb(a, j)
    assert gen_binomial(-1, 0) == 1
    assert gen_binomial(-1, 3) == -1
    assert gen_binomial(-2, 2) == 3
    with pytest.raises(ValueError):
        gen_binomial(3, -1)


def test_binom_poly_matches_integer_values():
    for j in range(6):
        for shift in (-1, 0, 2):
            poly = binom_poly(j, shift)
            for r in range(8):
                assert poly.evaluate({"r": r}) == gen_binomial(r + shift, j)


def test_binom_poly_shapes():
    r = MPoly.variable("r")
    assert binom_poly(0) == 1
    assert binom_poly(1) == r
    assert binom_poly(2) == (r ** 2 - r) * F(1, 2)
    # the shifted polynomial vanishes at 1 <= r <= j but not at r = 0
    shifted = binom_poly(3, -1)
    assert shifted.evaluate({"r": 1}) == 0
    assert shifted.evaluate({"r": 2}) == 0
    assert shifted.evaluate({"r": 3}) == 0
    assert shifted.evaluate({"r": 0}) == -1


def test_t_analog():
    t = MPoly.variable("t")
    assert t_analog(0).is_zero()
    assert t_analog(1) == 1
    assert t_analog(4) == 1 + t + t ** 2 + t ** 3
    with pytest.raises(ValueError):
        t_analog(-1)


def test_stirling2_table():
    rows = {
        (0, 0): 1, (1, 1): 1, (4, 2): 7, (5, 3): 25, (6, 3): 90,
        (5, 0): 0, (3, 4): 0,
    }
    for (m, k), want in rows.items():
        assert stirling2(m, k) == want
    # row sums are Bell numbers
    assert sum(stirling2(5, k) for k in range(6)) == 52


def test_subfactorial_and_fubini():
    assert [subfactorial(n) for n in range(7)] == [1, 0, 1, 2, 9, 44, 265]
    assert [fubini_number(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]

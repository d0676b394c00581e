from fractions import Fraction as F

import pytest

from eulerlab.series import USeries
from eulerlab.univariate import RatFunc, UPoly, poly_gcd


def test_upoly_basics():
    f = UPoly((1, 2, 1))
    g = UPoly((1, 1))
    assert g * g == f
    assert f - f == UPoly()
    assert f.degree == 2 and UPoly().degree == -1
    assert f.evaluate(2) == 9
    assert UPoly((0, 0, 0)).is_zero()
    assert f.coeff(1) == 2 and f.coeff(9) == 0


def test_upoly_divmod():
    f = UPoly((1, 0, -1))        # 1 - x^2
    g = UPoly((1, -1))           # 1 - x
    q, r = divmod(f, g)
    assert q == UPoly((1, 1)) and r.is_zero()
    q, r = divmod(UPoly((1, 1, 1)), UPoly((0, 1)))
    assert q == UPoly((1, 1)) and r == UPoly((1,))
    with pytest.raises(ZeroDivisionError):
        divmod(f, UPoly())
    assert f.exquo(g) == UPoly((1, 1))
    with pytest.raises(ArithmeticError):
        UPoly((1, 1, 1)).exquo(g)


def test_poly_gcd_is_monic():
    f = UPoly((1, 0, -1))
    g = UPoly((1, -1))
    assert poly_gcd(f, g) == UPoly((-1, 1))
    assert poly_gcd(UPoly(), UPoly()).is_zero()
    assert poly_gcd(f, UPoly()) == f.monic()


def test_ratfunc_normalization():
    # (1 - x^2) / (1 - x) reduces to the polynomial 1 + x
    rf = RatFunc(UPoly((1, 0, -1)), UPoly((1, -1)))
    assert rf.is_polynomial()
    assert rf.as_upoly() == UPoly((1, 1))
    # denominator is kept monic
    rf = RatFunc(UPoly((1,)), UPoly((2, 2)))
    assert rf.den == UPoly((1, 1))
    assert rf.num == UPoly((F(1, 2),))
    with pytest.raises(ZeroDivisionError):
        RatFunc(UPoly((1,)), UPoly())


def test_ratfunc_arithmetic():
    one_minus = RatFunc(UPoly((1, -1)))
    inv = one_minus.inverse()
    assert one_minus * inv == RatFunc(1)
    a = RatFunc(UPoly((0, 1)), UPoly((1, -1)))   # x / (1 - x)
    b = RatFunc(UPoly((1,)), UPoly((1, -1)))     # 1 / (1 - x)
    assert b - a == RatFunc(1)
    assert a / b == RatFunc(UPoly((0, 1)))
    with pytest.raises(ZeroDivisionError):
        a / RatFunc(0)
    assert not RatFunc(0)
    with pytest.raises(ValueError):
        b.as_upoly()


def test_useries_geometric():
    order = 6
    one_minus_u = USeries(order, (1, -1))
    geo = one_minus_u.inverse()
    assert geo.coeffs == tuple(RatFunc(1) for _ in range(order + 1))
    assert one_minus_u * geo == USeries.constant(1, order)


def test_useries_inverse_with_poly_coeffs():
    # inverse of the constant-in-u series (1 - t)
    order = 4
    c = RatFunc(UPoly((1, -1)))
    series = USeries.constant(c, order)
    inv = series.inverse()
    assert inv == USeries.constant(c.inverse(), order)
    # (1 - u*t) inverse has coefficient t^k at u^k
    s = USeries(order, (1, RatFunc(UPoly((0, -1)))))
    inv = s.inverse()
    for k in range(order + 1):
        assert inv.coeff(k) == RatFunc(UPoly.term(k, 1))


def test_useries_errors():
    with pytest.raises(ZeroDivisionError):
        USeries(3, (0, 1)).inverse()
    with pytest.raises(ValueError):
        USeries(3, (1,)) + USeries(4, (1,))
    with pytest.raises(ValueError):
        USeries(1, (1, 2, 3))
    with pytest.raises(ValueError):
        USeries(2, (1,)).coeff(3)


def test_useries_random_inverse_round_trip():
    import random
    rng = random.Random(7)
    for _ in range(50):
        order = rng.randrange(0, 5)
        coeffs = [RatFunc(UPoly([rng.randrange(-3, 4)
                                 for _ in range(rng.randrange(1, 3))]))
                  for _ in range(order + 1)]
        if coeffs[0].is_zero():
            coeffs[0] = RatFunc(1)
        s = USeries(order, coeffs)
        assert s * s.inverse() == USeries.constant(1, order)

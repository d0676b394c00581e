import json
from fractions import Fraction as F

import pytest

from eulerlab.mpoly import (DivisibilityError, MPoly, canonical_vars,
                            exact_divide, reciprocal_in, variables)


def test_canonical_vars_ordering():
    assert canonical_vars(("t", "s")) == ("s", "t")
    assert canonical_vars(("r", "q", "p")) == ("p", "q", "r")
    with pytest.raises(ValueError):
        canonical_vars(("s", "s"))


def test_constructor_reorders_exponents():
    # same polynomial built with swapped variable order
    a = MPoly(("s", "t"), {(2, 1): 5})
    b = MPoly(("t", "s"), {(1, 2): 5})
    assert a == b
    assert a.vars == ("s", "t")


def test_zero_terms_dropped():
    f = MPoly(("s", "t"), {(0, 0): 1, (1, 1): 0})
    assert len(f.terms) == 1
    assert f == 1


def test_basic_arithmetic():
    s, t = variables(("s", "t"))
    assert (1 + s * t) + (s - t) == 1 + s + s * t - t
    assert (1 - t) * (1 + t + t ** 2) == 1 - t ** 3
    assert (s + t) ** 2 == s ** 2 + 2 * s * t + t ** 2
    assert (s + 1) - (s + 1) == 0
    assert -(s - t) == t - s
    assert 2 * s == s + s
    assert s * F(1, 2) * 2 == s


def test_pow_validation():
    s, t = variables(("s", "t"))
    assert (1 + t) ** 0 == 1
    with pytest.raises(ValueError):
        (1 + t) ** -1


def test_variable_mismatch_is_usage_error():
    (s,) = variables(("s",))
    (t,) = variables(("t",))
    with pytest.raises(ValueError):
        s + t
    with pytest.raises(ValueError):
        s * t


def test_degree_and_coeff():
    s, t = variables(("s", "t"))
    f = 1 + (3 * s + s ** 2) * t + s * t ** 2
    assert f.degree("t") == 2
    assert f.degree("s") == 2
    assert f.coeff_of("t", 1) == MPoly(("s",), {(1,): 3, (2,): 1})
    assert f.coeff_of("t", 5).is_zero()
    assert MPoly.zero(("s", "t")).degree("t") == -1


def test_subs_and_evaluate():
    s, t = variables(("s", "t"))
    f = 1 + (3 * s + s ** 2) * t + s * t ** 2
    g = f.subs({"s": 2})
    assert g == MPoly(("t",), {(0,): 1, (1,): 10, (2,): 2})
    assert f.evaluate({"s": 1, "t": 1}) == 6
    assert f.evaluate({"s": 2, "t": 1}) == 13
    with pytest.raises(ValueError):
        f.evaluate({"s": 1})
    with pytest.raises(ValueError):
        f.subs({"u": 1})


def test_rename_and_with_vars():
    (x,) = variables(("x",))
    f = 1 + 4 * x + x ** 2
    g = f.rename({"x": "t"})
    assert g.vars == ("t",)
    assert g == MPoly(("t",), {(0,): 1, (1,): 4, (2,): 1})
    h = g.with_vars(("s", "t"))
    assert h.vars == ("s", "t")
    assert h.coeff_of("s", 0) == g
    with pytest.raises(ValueError):
        h2 = (variables(("s", "t"))[0]).with_vars(("t",))  # drops live var
        del h2


def test_to_dense():
    (t,) = variables(("t",))
    assert (1 + 2 * t + t ** 3).to_dense("t") == [F(1), F(2), F(0), F(1)]
    s, t2 = variables(("s", "t"))
    f = (1 + t2).with_vars(("s", "t"))
    assert f.to_dense("t") == [F(1), F(1)]
    with pytest.raises(ValueError):
        (s * t2).to_dense("t")


def test_exact_divide():
    s, t = variables(("s", "t"))
    assert exact_divide(1 - t ** 2, 1 - t) == 1 + t
    assert exact_divide(1 + s * t - t ** 2 - s * t ** 3, 1 + s * t) == 1 - t ** 2
    f = (1 + s + t) * (s ** 2 - t + 2)
    assert exact_divide(f, s ** 2 - t + 2) == 1 + s + t
    with pytest.raises(DivisibilityError):
        exact_divide(1 + s * t, 1 - t)
    with pytest.raises(ZeroDivisionError):
        exact_divide(s, MPoly.zero(("s", "t")))
    assert exact_divide(MPoly.zero(("s", "t")), 1 - t).is_zero()


def test_reciprocal_in():
    s, t = variables(("s", "t"))
    f = 1 + (3 * s + s ** 2) * t + s * t ** 2
    rev = reciprocal_in(f, "t", 3)
    assert rev == t ** 3 + (3 * s + s ** 2) * t ** 2 + s * t
    assert reciprocal_in(rev, "t", 3) == f
    palin = 1 + 5 * t + t ** 2
    assert reciprocal_in(palin, "t", 2) == palin
    with pytest.raises(ValueError):
        reciprocal_in(f, "t", 1)


def test_json_round_trip_and_canonical_bytes():
    s, t = variables(("s", "t"))
    f = 1 + (3 * s + s ** 2) * t + s * t ** 2
    text = f.dumps()
    assert MPoly.loads(text) == f
    # canonical bytes: term order is sorted by exponent vector, keys fixed
    expected = ('{"vars":["s","t"],"terms":['
                '{"e":[0,0],"n":"1","d":"1"},'
                '{"e":[1,1],"n":"3","d":"1"},'
                '{"e":[1,2],"n":"1","d":"1"},'
                '{"e":[2,1],"n":"1","d":"1"}]}')
    assert text == expected
    # identical regardless of construction order
    g = s * t ** 2 + (3 * s) * t + s ** 2 * t + 1
    assert g.dumps() == text


def test_json_zero_and_fractions():
    z = MPoly.zero(("t", "r"))
    assert z.dumps() == '{"vars":["t","r"],"terms":[]}'
    assert MPoly.loads(z.dumps()) == z
    f = MPoly(("t",), {(1,): F(-3, 2)})
    blob = json.loads(f.dumps())
    assert blob["terms"][0] == {"e": [1], "n": "-3", "d": "2"}
    assert MPoly.loads(f.dumps()) == f


def test_json_malformed():
    with pytest.raises(ValueError):
        MPoly.loads("not json")
    with pytest.raises(ValueError):
        MPoly.loads('{"vars":["t"]}')
    with pytest.raises(ValueError):
        MPoly.loads('{"vars":["t"],"terms":[{"e":[1,2],"n":"1","d":"1"}]}')


def test_rendering():
    s, t = variables(("s", "t"))
    f = 1 + (3 * s + s ** 2) * t + s * t ** 2
    assert f.text() == "1 + 3*s*t + s*t^2 + s^2*t"
    assert f.latex() == "1 + 3st + st^{2} + s^{2}t"
    assert (s - t).text() == "-t + s"
    assert (t - s).text() == "t - s"
    assert MPoly.zero(("s",)).text() == "0"
    half = MPoly(("t",), {(2,): F(1, 2)})
    assert half.latex() == r"\frac{1}{2}t^{2}"
    assert half.text() == "1/2*t^2"


def test_constant_extraction():
    f = MPoly.const(("s", "t"), F(7, 3))
    assert f.constant() == F(7, 3)
    s, _ = variables(("s", "t"))
    with pytest.raises(ValueError):
        (1 + s).constant()

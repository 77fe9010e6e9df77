from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neville_weights.algebra import (Poly, RatFunc, evaluate, exact_scalar, format_scalar,
                                     poly_arith, poly_derivative, poly_gcd, ratfunc_arith, scalar)
from neville_weights.errors import ModeError, PoleError

X = Poly.x()

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_scalars():
    assert exact_scalar("-3/4") == Fraction(-3, 4)
    assert exact_scalar("0.25") == Fraction(1, 4)
    assert scalar("1/2", exact=False) == 0.5
    with pytest.raises(ModeError):
        exact_scalar(0.5)
    with pytest.raises(TypeError):
        exact_scalar(True)
    assert format_scalar(Fraction(6, -4)) == "-3/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(0.1) == "0.1"


def test_zero_polynomial():
    z = Poly.zero()
    assert z.degree == -1 and z.is_zero() and z.coeffs == ()
    assert Poly([0, 0, 0]) == z
    assert Poly([1, 2, 0, 0]).degree == 1


def test_arith_examples():
    assert (1 + X) + (1 - X) == Poly.const(2)
    assert (X - 1) * (X - 2) == Poly([2, -3, 1])
    assert poly_arith(X - 1, X - 2, "mul") == Poly([2, -3, 1])
    assert poly_arith(X, X, "sub").is_zero()
    with pytest.raises(ValueError):
        poly_arith(X, X, "pow")


@given(st.lists(st.lists(fractions, max_size=5), min_size=50, max_size=50))
@settings(max_examples=5)
def test_add_zero_identity(coeff_lists):
    for cs in coeff_lists:
        p = Poly(cs)
        assert p + Poly.zero() == p


def test_derivative_examples():
    assert (X**2 - 3 * X + 2).derivative() == 2 * X - 3
    assert poly_derivative(X * (X - 1) / 2, 2) == Poly.const(1)
    assert (X**2 + X + 1).derivative(3).is_zero()


def test_gcd_examples():
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_gcd(X**2 + 1, X + 3) == Poly.const(1)
    p = 3 * X**2 - 6
    assert poly_gcd(p, Poly.zero()) == p / 3
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(), Poly.zero())


def test_ratfunc_examples():
    r = RatFunc(Poly.const(1), X - 1) + RatFunc(X - 2, X - 1)
    assert r == RatFunc(Poly.const(1)) and r.is_polynomial()
    r = RatFunc((X - 1) / 2) * RatFunc(Poly.const(2), X - 1)
    assert r.as_poly() == Poly.const(1)
    a = RatFunc(X + 1, X - 3)
    assert a + 0 == a
    assert ratfunc_arith(a, a, "div") == RatFunc(Poly.const(1))


def test_evaluation_examples():
    assert evaluate(X**2 - 3 * X + 2, 1) == 0
    assert evaluate((2 * X - 1) / 2, Fraction(1, 2)) == 0
    with pytest.raises(PoleError):
        evaluate(RatFunc(Poly.const(1), X - 1), 1)
    with pytest.raises(ZeroDivisionError):
        evaluate(RatFunc(Poly.const(1), X - 1), 1)


def test_float_pole_threshold():
    r = RatFunc(Poly.const(1.0, False), Poly([-1.0, 1.0], False))
    with pytest.raises(PoleError):
        r(1.0 + 1e-14)
    assert r(2.0) == 1.0


def test_mode_mixing_rejected():
    with pytest.raises(ModeError):
        X + Poly.x(exact=False)
    with pytest.raises(ModeError):
        X * 0.5
    with pytest.raises(ModeError):
        RatFunc(X) + RatFunc(Poly.x(False))


def test_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = (1,)


def test_divmod():
    q, r = divmod(X**3 + 2 * X + 5, X - 1)
    assert q * (X - 1) + r == X**3 + 2 * X + 5
    assert r.degree < 1


def test_scaled_values_matches_exact_horner():
    p = Poly(["1/3", "-2", "5/7", "1/2"])
    xs = [Fraction(j, 9) for j in range(-10, 11)]
    vals, scale = p.scaled_values([int(x * 9) for x in xs], 9)
    assert [Fraction(v, scale) for v in vals] == [p(x) for x in xs]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero()


@given(nonzero_polys, nonzero_polys)
def test_division_algorithm(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=50)
def test_gcd_divides_and_is_monic(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.lead == 1
    assert ((a * c) % g).is_zero() and ((b * c) % g).is_zero()
    assert (g % c.monic()).is_zero()


@given(polys, nonzero_polys, nonzero_polys)
@settings(max_examples=50)
def test_reduce_is_idempotent_and_preserves_value(num, den, common):
    r = RatFunc(num * common, den * common)
    assert r.reduce() == r
    assert r == RatFunc(num, den)
    if r.num.is_zero():
        assert r.den == Poly.const(1)
    else:
        assert poly_gcd(r.num, r.den).degree == 0


@given(polys, fractions)
def test_product_rule_and_eval(p, x):
    q = p * p
    assert q.derivative() == 2 * p * p.derivative()
    assert q(x) == p(x) ** 2


@given(st.lists(st.floats(-3, 3), min_size=1, max_size=5), st.floats(-2, 2))
def test_derivative_matches_central_difference(cs, x):
    p = Poly(cs, exact=False)
    h = 1e-5
    fd = (p(x + h) - p(x - h)) / (2 * h)
    assert abs(p.derivative()(x) - fd) <= 1e-6 * (1 + p.norm_inf() * 10)


@given(polys, nonzero_polys, fractions)
def test_ratfunc_quotient_rule(num, den, x):
    r = RatFunc(num, den)
    d = r.derivative()
    if den(x) != 0:
        assert d(x) == (num.derivative()(x) * den(x) - num(x) * den.derivative()(x)) / den(x) ** 2


def test_str():
    assert str(Poly.zero()) == "0"
    assert str(X**2 - X + Fraction(1, 4)) == "x^2 - x + 1/4"
    assert str(-2 * X**3 + 5) == "-2*x^3 + 5"

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_stencils
from neville_weights.algebra import Poly
from neville_weights.errors import RangeError
from neville_weights.lagrange import interpolate
from neville_weights.oracle import positivity_violation
from neville_weights.stencil import make_stencil, substencils
from neville_weights.weights import (one_level_weights, positivity_interval, positivity_offsets,
                                     varsigma, weights_by_recurrence, weights_explicit)

X = Poly.x()
S3 = make_stencil(1, 1, [-1, 0, 1])
S4 = make_stencil(1, 2, [-1, 0, 1, 2])


def test_one_level_examples():
    fam = one_level_weights(S3)
    assert fam.sigmas == ((1 - X) / 2, (X + 1) / 2)
    assert fam.varsigma == (Fraction(1, 2), Fraction(1, 2))
    assert one_level_weights(make_stencil(0, 2, [0, 1, 3])).varsigma == (Fraction(1, 3),) * 2
    with pytest.raises(RangeError):
        one_level_weights(make_stencil(0, 1, [0, 1]))


def test_two_level_example():
    expected = ((X - 1) * (X - 2) / 6, -(X + 1) * (X - 2) / 3, (X + 1) * X / 6)
    assert weights_by_recurrence(S4, 2).sigmas == expected
    assert weights_explicit(S4, 2).sigmas == expected
    assert weights_explicit(S4, 2).varsigma == (Fraction(1, 6), Fraction(1, 3), Fraction(1, 6))
    assert weights_explicit(S4, 2).gammas == (Fraction(1, 6), Fraction(-1, 3), Fraction(1, 6))
    assert weights_explicit(S4, 2)(0) == [Fraction(1, 3), Fraction(2, 3), 0]


def test_base_case_and_symmetric():
    assert weights_by_recurrence(S4, 1).sigmas == one_level_weights(S4).sigmas
    s5 = make_stencil(2, 2, [-2, -1, 0, 1, 2])
    assert sum(weights_by_recurrence(s5, 2).sigmas, Poly.zero()) == Poly.const(1)


def test_level_out_of_range():
    for K in (0, 3):
        with pytest.raises(RangeError):
            weights_explicit(S4, K)
        with pytest.raises(RangeError):
            weights_by_recurrence(S4, K)


def test_positivity_examples():
    assert positivity_interval(S3, 1) == (-1, 1)
    assert positivity_interval(S4, 1) == (-1, 2)
    assert positivity_offsets(S4, 2) == (0, 1)
    s4 = make_stencil(2, 2, [-2, -1, 0, 1, 2])
    with pytest.raises(RangeError):
        positivity_interval(s4, 3)


def test_json_layout():
    out = weights_explicit(S4, 2).to_json()
    assert out["sigmas"] == [["1/3", "-1/2", "1/6"], ["2/3", "1/3", "-1/3"], ["0", "1/6", "1/6"]]
    assert out["varsigma"] == ["1/6", "1/3", "1/6"]
    assert out["positivity_interval"] == ["0", "1"]
    s5 = make_stencil(2, 2, [-2, -1, 0, 1, 2])
    assert weights_explicit(s5, 3).to_json()["positivity_interval"] is None


@given(rational_stencils(max_m=7), st.data())
def test_families(s, data):
    K = data.draw(st.integers(1, s.M - 1))
    rec, exp = weights_by_recurrence(s, K), weights_explicit(s, K)
    assert rec.sigmas == exp.sigmas
    assert exp.varsigma == varsigma(s, K)
    assert all(v > 0 for v in exp.varsigma)
    assert sum(exp.sigmas, Poly.zero()) == Poly.const(1)
    for k, sig in enumerate(exp.sigmas):
        assert sig.degree == K
        # roots are exactly the nodes outside window k
        inside = s.nodes[k:k + s.M - K + 1]
        for x in s.nodes:
            assert (sig(x) == 0) == (x not in inside)


@given(rational_stencils(max_m=5), st.data())
@settings(max_examples=40)
def test_representation_random_samples(s, data):
    K = data.draw(st.integers(1, s.M - 1))
    vals = data.draw(st.lists(st.fractions(-9, 9, max_denominator=9), min_size=s.M + 1, max_size=s.M + 1))
    f = dict(zip(s.offsets, vals))
    fam = weights_explicit(s, K)
    combo = sum((sig * interpolate(sub, f) for sig, sub in zip(fam.sigmas, substencils(s, K))), Poly.zero())
    assert combo == interpolate(s, f)


@given(rational_stencils(max_m=7), st.data())
@settings(max_examples=40)
def test_positivity_property(s, data):
    K = data.draw(st.integers(1, min(math.ceil(s.M / 2), s.M - 1)))
    assert positivity_violation(weights_explicit(s, K), 200) == 0
    lo, hi = positivity_interval(s, K)
    assert s.nodes.index(hi) - s.nodes.index(lo) >= 1


def test_float_mode_matches_exact():
    sf = S4.to_float()
    fe, ff = weights_explicit(S4, 2), weights_explicit(sf, 2)
    for x in [Fraction(j, 4) for j in range(-4, 9)]:
        for a, b in zip(ff(float(x)), fe(x)):
            assert a == pytest.approx(float(b), abs=1e-14)

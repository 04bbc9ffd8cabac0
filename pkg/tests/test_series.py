"""Truncated power-series arithmetic: ring axioms, known expansions, roundtrips."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from entrogup.series import (
    TruncatedSeries,
    arctan_series,
    compose,
    exp_series,
    ln_one_plus,
    mul,
    sqrt_series,
    tan_series,
)

# Maclaurin coefficients computed independently (Mercator series, binomial
# 1/2-exponent, factorials, and the classical tangent numbers).
LN1P_COEFFS = (0.0, 1.0, -1 / 2, 1 / 3, -1 / 4, 1 / 5, -1 / 6, 1 / 7, -1 / 8)
EXP_COEFFS = (1.0, 1.0, 1 / 2, 1 / 6, 1 / 24, 1 / 120, 1 / 720, 1 / 5040, 1 / 40320)
SQRT1P_COEFFS = (1.0, 1 / 2, -1 / 8, 1 / 16, -5 / 128, 7 / 256, -21 / 1024)
TAN_COEFFS = (0.0, 1.0, 0.0, 1 / 3, 0.0, 2 / 15, 0.0, 17 / 315, 0.0, 62 / 2835)
ARCTAN_COEFFS = (0.0, 1.0, 0.0, -1 / 3, 0.0, 1 / 5, 0.0, -1 / 7, 0.0, 1 / 9)


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol * (1.0 + abs(x) + abs(y)) for x, y in zip(a, b))


coeff_lists = st.lists(
    st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=7,
)


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        TruncatedSeries(())
    with pytest.raises(ValueError):
        TruncatedSeries((1.0, float("nan")))
    with pytest.raises(ValueError):
        TruncatedSeries((1.0, float("inf")))


def test_constant_and_variable():
    c = TruncatedSeries.constant(3.5, 4)
    assert c.coeffs == (3.5, 0.0, 0.0, 0.0, 0.0)
    x = TruncatedSeries.variable(3)
    assert x.coeffs == (0.0, 1.0, 0.0, 0.0)
    assert x.order == 3
    with pytest.raises(ValueError):
        TruncatedSeries.variable(0)


def test_truncated_never_extends():
    s = TruncatedSeries((1.0, 2.0, 3.0))
    assert s.truncated(1).coeffs == (1.0, 2.0)
    with pytest.raises(ValueError):
        s.truncated(5)


def test_mul_truncates_to_smaller_order():
    a = TruncatedSeries((1.0, 2.0, 3.0))
    sq = mul(a, a)
    # (1 + 2x + 3x^2)^2 = 1 + 4x + 10x^2 + O(x^3)
    assert sq.coeffs == (1.0, 4.0, 10.0)
    b = TruncatedSeries((1.0, 1.0))
    assert mul(a, b).order == 1


def test_scalar_arithmetic():
    a = TruncatedSeries((1.0, 2.0))
    assert (a + 1.0).coeffs == (2.0, 2.0)
    assert (1.0 + a).coeffs == (2.0, 2.0)
    assert (1.0 - a).coeffs == (0.0, -2.0)
    assert (2.0 * a).coeffs == (2.0, 4.0)
    assert (a * 0.5).coeffs == (0.5, 1.0)


@given(coeff_lists, coeff_lists)
@settings(max_examples=200)
def test_mul_commutes(u, v):
    a, b = TruncatedSeries(tuple(u)), TruncatedSeries(tuple(v))
    assert close(mul(a, b).coeffs, mul(b, a).coeffs)


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=200)
def test_mul_associates(u, v, w):
    a, b, c = (TruncatedSeries(tuple(t)) for t in (u, v, w))
    left = mul(mul(a, b).truncated(min(a.order, b.order, c.order)), c)
    right = mul(a, mul(b, c).truncated(min(a.order, b.order, c.order)))
    assert close(left.coeffs, right.coeffs)


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=200)
def test_mul_distributes_over_add(u, v, w):
    n = min(len(u), len(v), len(w)) - 1
    a, b, c = (TruncatedSeries(tuple(t[: n + 1])) for t in (u, v, w))
    assert close(mul(a, b + c).coeffs, (mul(a, b) + mul(a, c)).coeffs)


def test_compose_square():
    outer = TruncatedSeries((0.0, 0.0, 1.0, 0.0, 0.0))  # y^2
    inner = TruncatedSeries((0.0, 1.0, 1.0, 0.0, 0.0))  # x + x^2
    assert compose(outer, inner).coeffs == (0.0, 0.0, 1.0, 2.0, 1.0)


def test_compose_requires_zero_inner_constant():
    with pytest.raises(ValueError):
        compose(TruncatedSeries((1.0, 1.0)), TruncatedSeries((1.0, 1.0)))


def test_ln_one_plus_matches_mercator():
    u = TruncatedSeries.variable(8)
    assert close(ln_one_plus(u).coeffs, LN1P_COEFFS)
    with pytest.raises(ValueError):
        ln_one_plus(TruncatedSeries((0.5, 1.0)))


def test_exp_series_matches_factorials():
    u = TruncatedSeries.variable(8)
    out = exp_series(u)
    assert out.coeffs[0] == 1.0  # constant term comes out exact
    assert close(out.coeffs, EXP_COEFFS)
    with pytest.raises(ValueError):
        exp_series(TruncatedSeries((0.5, 1.0)))


def test_sqrt_series_matches_binomial():
    one_plus_x = TruncatedSeries((1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0))
    assert close(sqrt_series(one_plus_x).coeffs, SQRT1P_COEFFS)
    with pytest.raises(ValueError):
        sqrt_series(TruncatedSeries((0.0, 1.0)))
    with pytest.raises(ValueError):
        sqrt_series(TruncatedSeries((-1.0, 1.0)))


def test_sqrt_of_scaled_constant():
    s = sqrt_series(TruncatedSeries.constant(4.0, 3))
    assert s.coeffs == (2.0, 0.0, 0.0, 0.0)


def test_tan_series_frozen_coefficients():
    assert close(tan_series(9).coeffs, TAN_COEFFS)


def test_arctan_series_frozen_coefficients():
    assert close(arctan_series(9).coeffs, ARCTAN_COEFFS)


def test_tan_compose_arctan_is_identity():
    n = 9
    ident = compose(tan_series(n), arctan_series(n))
    expected = (0.0, 1.0) + (0.0,) * (n - 1)
    assert close(ident.coeffs, expected)


small_inner = st.lists(
    st.floats(min_value=-0.5, max_value=0.5, allow_nan=False, allow_infinity=False),
    min_size=2,
    max_size=7,
).map(lambda v: TruncatedSeries((0.0,) + tuple(v[1:])))


@given(small_inner)
@settings(max_examples=200)
def test_exp_ln_roundtrip(u):
    back = ln_one_plus(exp_series(u) - 1.0)
    assert close(back.coeffs, u.coeffs, tol=1e-10)


@given(small_inner)
@settings(max_examples=200)
def test_ln_exp_roundtrip(u):
    back = exp_series(ln_one_plus(u)) - 1.0
    assert close(back.coeffs, u.coeffs, tol=1e-10)


@given(
    st.lists(
        st.floats(min_value=-0.5, max_value=0.5, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=7,
    ),
    st.floats(min_value=0.5, max_value=4.0),
)
@settings(max_examples=200)
def test_sqrt_squares_back(tail, c0):
    a = TruncatedSeries((c0,) + tuple(tail[1:]))
    r = sqrt_series(a)
    assert close(mul(r, r).coeffs, a.coeffs, tol=1e-10)


def test_values_match_math_functions():
    # summing the series at a small argument approximates the real function
    x = 0.1
    for series, ref in (
        (tan_series(15), math.tan(x)),
        (arctan_series(15), math.atan(x)),
        (ln_one_plus(TruncatedSeries.variable(15)), math.log1p(x)),
        (exp_series(TruncatedSeries.variable(15)), math.exp(x)),
    ):
        total = math.fsum(c * x**m for m, c in enumerate(series.coeffs))
        assert abs(total - ref) < 1e-15 * (1 + abs(ref)) + 1e-16

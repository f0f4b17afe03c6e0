import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtnbounds import series as ps
from gtnbounds.series import (
    ConstantTermNotOne,
    DivisionByNonUnit,
    InnerConstantNonzero,
    NonzeroConstantTerm,
    NotInvertible,
    TruncatedSeries,
)


def S(coeffs, order=None):
    return TruncatedSeries(coeffs, order=order)


def assert_coeffs(series, expected, tol=1e-12):
    got = series.coeffs
    want = np.asarray(expected, dtype=complex)
    assert got.size == want.size, f"order mismatch: {got.size - 1} vs {want.size - 1}"
    assert np.max(np.abs(got - want)) <= tol


# --- add -------------------------------------------------------------------

def test_add_cancellation():
    assert_coeffs(ps.add(S([1, 1]), S([1, -1])), [2, 0])


def test_add_identity():
    assert_coeffs(ps.add(S([0, 1, 1]), ps.zero(2)), [0, 1, 1])


def test_add_min_order_rule():
    out = ps.add(S([1, 2]), S([3, 4, 5]))
    assert out.order == 1
    assert_coeffs(out, [4, 6])


# --- mul -------------------------------------------------------------------

def test_mul_difference_of_squares():
    assert_coeffs(ps.mul(S([1, 1], order=2), S([1, -1], order=2)), [1, 0, -1])


def test_mul_monomials():
    assert_coeffs(ps.mul(S([0, 1], order=2), S([0, 1], order=2)), [0, 0, 1])


def test_mul_hand_convolution():
    # (1 + z + z^2)^2 = 1 + 2z + 3z^2 + ...
    a = S([1, 1, 1])
    assert_coeffs(ps.mul(a, a), [1, 2, 3])


# --- div -------------------------------------------------------------------

def test_div_geometric():
    assert_coeffs(ps.div(ps.one(5), S([1, -1], order=5)), [1, 1, 1, 1, 1, 1])


def test_div_exact_factor():
    assert_coeffs(ps.div(S([0, 1, 1], order=3), S([1, 1], order=3)), [0, 1, 0, 0])


def test_div_by_non_unit():
    with pytest.raises(DivisionByNonUnit):
        ps.div(ps.one(3), S([0, 1], order=3))


# --- exp / log -------------------------------------------------------------

def test_exp_of_z():
    assert_coeffs(ps.exp_series(ps.identity(3)), [1, 1, 0.5, 1 / 6])


def test_exp_characteristic_argument():
    # exp(z + z^2/2) carries the weight-1 telephone numbers over factorials
    out = ps.exp_series(S([0, 1, 0.5], order=3))
    assert_coeffs(out, [1, 1, 1, 2 / 3])


def test_exp_of_zero():
    assert_coeffs(ps.exp_series(ps.zero(4)), [1, 0, 0, 0, 0])


def test_exp_rejects_constant():
    with pytest.raises(NonzeroConstantTerm):
        ps.exp_series(S([0.5, 1]))


def test_log_mercator():
    out = ps.log_series(ps.div(ps.one(3), S([1, -1], order=3)))
    assert_coeffs(out, [0, 1, 0.5, 1 / 3])


def test_log_exp_round_trip():
    a = S([0, 1, 1], order=6)
    assert ps.max_coeff_diff(ps.log_series(ps.exp_series(a)), a) <= 1e-12


def test_log_rejects_non_unit_constant():
    with pytest.raises(ConstantTermNotOne):
        ps.log_series(S([2, 1]))


# --- pow -------------------------------------------------------------------

def test_pow_integer():
    assert_coeffs(ps.pow_real(S([1, 1], order=2), 2.0), [1, 2, 1], tol=1e-14)


def test_pow_binomial_half():
    assert_coeffs(ps.pow_real(S([1, 1], order=2), 0.5), [1, 0.5, -0.125], tol=1e-14)


def test_pow_zero_exponent():
    a = S([1, 0.3, -0.2, 0.7])
    assert_coeffs(ps.pow_real(a, 0.0), [1, 0, 0, 0])


# --- compose / revert ------------------------------------------------------

def test_compose_square_substitution():
    out = ps.compose(S([1, 1, 1], order=4), S([0, 0, 1], order=4))
    assert_coeffs(out, [1, 0, 1, 0, 1])


def test_compose_identity_inner():
    from gtnbounds.telephone import x_series

    xs = x_series(1.0, 6)
    assert ps.max_coeff_diff(ps.compose(xs, ps.identity(6)), xs) <= 1e-14


def test_compose_exp_after_log():
    geom = ps.div(ps.one(6), S([1, -1], order=6))
    exp6 = ps.exp_series(ps.identity(6))
    out = ps.compose(exp6, ps.log_series(geom))
    assert ps.max_coeff_diff(out, geom) <= 1e-12


def test_compose_rejects_nonzero_inner_constant():
    with pytest.raises(InnerConstantNonzero):
        ps.compose(S([1, 1]), S([1, 1]))


def test_revert_identity():
    assert_coeffs(ps.revert(ps.identity(4)), [0, 1, 0, 0, 0])


def test_revert_catalan_signs():
    out = ps.revert(S([0, 1, 1], order=4))
    assert_coeffs(out, [0, 1, -1, 2, -5], tol=1e-12)
    # independent check: composing back gives z
    back = ps.compose(S([0, 1, 1], order=4), out)
    assert_coeffs(back, [0, 1, 0, 0, 0], tol=1e-12)


def test_revert_rejects_zero_linear_term():
    with pytest.raises(NotInvertible):
        ps.revert(S([0, 0, 1]))


# --- derive / integrate ----------------------------------------------------

def test_derive_cubic():
    assert_coeffs(ps.derive(S([0, 0, 0, 1])), [0, 0, 3])


def test_integrate_characteristic_series():
    from gtnbounds.telephone import x_series

    vk = 1.0
    out = ps.integrate(x_series(vk, 4))
    assert_coeffs(
        out,
        [0, 1, 0.5, (1 + vk) / 6, (1 + 3 * vk) / 24, (3 * vk**2 + 6 * vk + 1) / 120],
        tol=1e-14,
    )


def test_integrate_zero():
    assert_coeffs(ps.integrate(ps.zero(3)), [0, 0, 0, 0, 0])


def test_derive_of_integrate_round_trip():
    a = S([1.5, -0.25, 3, 0.5], order=3)
    assert ps.max_coeff_diff(ps.derive(ps.integrate(a)), a) <= 1e-15


# --- property tests --------------------------------------------------------

small_complex = st.complex_numbers(
    max_magnitude=0.6, allow_nan=False, allow_infinity=False
)


@given(st.lists(small_complex, min_size=12, max_size=12))
@settings(max_examples=60, deadline=None)
def test_exp_log_round_trips_order_12(tail):
    a = S([0] + list(tail), order=12)
    assert ps.max_coeff_diff(ps.log_series(ps.exp_series(a)), a) <= 1e-10
    b = S([1] + list(tail), order=12)
    assert ps.max_coeff_diff(ps.exp_series(ps.log_series(b)), b) <= 1e-10


@given(
    st.lists(small_complex, min_size=9, max_size=9),
    st.complex_numbers(min_magnitude=0.5, max_magnitude=2.0, allow_nan=False, allow_infinity=False),
)
@settings(max_examples=40, deadline=None)
def test_revert_is_compositional_inverse_order_10(tail, a1):
    # tail scaled by |a1| to keep the inverse well conditioned in doubles
    a = S([0, a1] + [0.5 * abs(a1) * t for t in tail], order=10)
    back = ps.compose(a, ps.revert(a))
    assert ps.max_coeff_diff(back, ps.identity(10)) <= 1e-10


@given(
    st.lists(small_complex, min_size=9, max_size=9),
    st.lists(small_complex, min_size=9, max_size=9),
    st.lists(small_complex, min_size=9, max_size=9),
)
@settings(max_examples=60, deadline=None)
def test_mul_commutative_associative_order_8(xs, ys, zs):
    a, b, c = S(xs, order=8), S(ys, order=8), S(zs, order=8)
    assert ps.max_coeff_diff(ps.mul(a, b), ps.mul(b, a)) <= 1e-12
    assert ps.max_coeff_diff(ps.mul(ps.mul(a, b), c), ps.mul(a, ps.mul(b, c))) <= 1e-12


@given(
    st.lists(small_complex, min_size=8, max_size=8),
    st.floats(-2, 2, allow_nan=False),
    st.floats(-2, 2, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_pow_additivity(tail, p, q):
    a = S([1] + list(tail), order=8)
    lhs = ps.pow_real(a, p + q)
    rhs = ps.mul(ps.pow_real(a, p), ps.pow_real(a, q))
    assert ps.max_coeff_diff(lhs, rhs) <= 1e-10

import pytest
from hypothesis import given, settings, strategies as st

from sweepcover.recurrence import f_table
from sweepcover.series import (
    IntegerSeries,
    phi_apply,
    series_add,
    series_mul,
    series_pow,
    solve_ogf,
)

import oracles


def schoolbook(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def test_arithmetic_examples():
    z = IntegerSeries([0, 1], 3)
    assert series_mul(z, z) == [0, 0, 1, 0]
    assert series_pow(IntegerSeries([5, 7, 9], 2), 0) == [1, 0, 0]
    one_plus_z = IntegerSeries([1, 1], 2)
    assert series_mul(one_plus_z, one_plus_z) == [1, 2, 1]
    assert series_add(one_plus_z, one_plus_z) == [2, 2, 0]


def test_order_mismatch_raises():
    with pytest.raises(ValueError):
        IntegerSeries([1], 2) * IntegerSeries([1], 3)
    with pytest.raises(ValueError):
        IntegerSeries([1], 2) + IntegerSeries([1], 3)


coeffs = st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=12)


@given(coeffs, coeffs, st.integers(0, 11))
def test_product_matches_schoolbook(a, b, order):
    got = IntegerSeries(a, order) * IntegerSeries(b, order)
    pa = (a + [0] * order)[: order + 1]
    pb = (b + [0] * order)[: order + 1]
    assert got.coefficients == schoolbook(pa, pb, order)
    assert len(got) == order + 1


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6), st.integers(0, 5))
def test_power_matches_repeated_product(a, e):
    s = IntegerSeries(a, 7)
    expected = IntegerSeries.one(7)
    for _ in range(e):
        expected = expected * s
    assert s**e == expected


def test_phi_examples():
    assert phi_apply(2, IntegerSeries.zero(3)) == [0, 1, 1, 0]
    assert phi_apply(2, IntegerSeries([0, 1], 2)) == [0, 1, 4]
    for n in range(2, 6):
        assert phi_apply(n, IntegerSeries([0, 3, 1], 4))[0] == 0


def test_solve_examples():
    assert solve_ogf(2, 4) == [0, 1, 4, 16, 80]
    assert solve_ogf(2, 1) == [0, 1]
    assert solve_ogf(3, 1) == [0, 1]
    with pytest.raises(ValueError):
        solve_ogf(1, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_fixed_point_residual(n):
    y = solve_ogf(n, 40)
    assert phi_apply(n, y) == y


def test_n2_quadratic_identity():
    order = 50
    f = solve_ogf(2, order)
    lin = IntegerSeries([-1, 2], order)
    const = IntegerSeries([0, 1, 1], order)
    assert (f * f + lin * f + const) == IntegerSeries.zero(order)
    assert f.coefficients == oracles.n2_closed_form(order)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_engines_agree(n):
    assert solve_ogf(n, 30).coefficients == list(f_table(n, 30).values)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 6), st.integers(0, 25))
def test_engines_agree_random(n, order):
    assert solve_ogf(n, order).coefficients == list(f_table(n, order).values)

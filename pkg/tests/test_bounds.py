import itertools
import math

import pytest
from hypothesis import given, strategies as st

from sweepcover.bounds import (
    bin_bounds_log,
    binom_run_product,
    bounds_case,
    bounds_grid,
    check_schur_extremes,
    composition_product,
    exact_log,
    powered_composition_closed_form,
    powered_composition_sum,
    powered_growth_exponent,
    theorem2_bounds,
    theorem2_log_bounds,
)
from sweepcover.combinatorics import Composition, binomial
from sweepcover.exceptions import ResourceCapExceeded

import oracles


@pytest.mark.parametrize("x,k,expected", [(2, 1, 2), (3, 3, 1), (4, 2, 18), (5, 2, 180)])
def test_run_product(x, k, expected):
    assert binom_run_product(x, k) == expected


def test_run_product_rejects_short_runs():
    with pytest.raises(ValueError):
        binom_run_product(1, 2)


def test_composition_product():
    assert composition_product(Composition((2, 2)), 1) == 4
    assert composition_product((3,), 3) == 1
    assert composition_product((4, 2), 2) == 18
    with pytest.raises(ValueError):
        composition_product((4, 1), 2)


def test_theorem2_small_values():
    lo, hi = theorem2_bounds(2, 1, 1)
    assert lo == pytest.approx((2 / math.e) ** 2 * math.sqrt(4 * math.pi), rel=1e-12)
    assert lo == pytest.approx(1.919, abs=1e-3)
    assert hi == pytest.approx(2 ** 1.5 / math.sqrt(2 * math.pi), rel=1e-12)
    assert hi == pytest.approx(1.128, abs=1e-3)
    lo, hi = theorem2_bounds(4, 2, 2)
    assert lo == pytest.approx((4 / (4 * math.e)) ** 8 * math.sqrt(4 * math.pi) ** 2, rel=1e-12)
    assert hi == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        theorem2_bounds(3, 2, 2)


def test_m1_reduces_to_single_run_bounds():
    for n in range(1, 15):
        for k in range(1, n + 1):
            a = theorem2_log_bounds(n, 1, k)
            b = bin_bounds_log(n, k)
            assert abs(a[0] - b[0]) < 1e-25 and abs(a[1] - b[1]) < 1e-25


def test_single_run_lower_bound_holds():
    for n in range(1, 30):
        for k in range(1, n + 1):
            lower, _ = bin_bounds_log(n, k)
            assert lower <= exact_log(binom_run_product(n, k))


def test_small_case_upper_counterexample():
    case = bounds_case(2, 1, 1)
    assert case.min_value == case.max_value == 2
    assert case.lower_holds and not case.upper_holds
    assert case.upper_bound < 2 < case.lower_bound + 1


def test_schur_examples():
    v = check_schur_extremes(6, 2, 2)
    assert v.min_compositions == ((3, 3),)
    assert set(v.max_compositions) == {(2, 4), (4, 2)}
    assert v.passed
    v = check_schur_extremes(8, 2, 2)
    assert set(v.max_compositions) == {(2, 6), (6, 2)}
    for k in range(1, 5):
        v = check_schur_extremes(2 * k, 2, k)
        assert v.count == 1 and v.min_value == v.max_value and v.passed


def test_schur_budget():
    with pytest.raises(ResourceCapExceeded):
        check_schur_extremes(40, 5, 1, budget=100)


def test_schur_against_brute_force_products():
    for n, m, k in [(9, 3, 2), (12, 2, 3), (10, 3, 1)]:
        values = {}
        for parts in itertools.product(range(k, n + 1), repeat=m):
            if sum(parts) == n:
                prod = 1
                for p in parts:
                    for i in range(1, p + 1):
                        prod *= binomial(i, k) if i >= k else 1
                values[parts] = prod
        v = check_schur_extremes(n, m, k)
        assert v.min_value == min(values.values())
        assert v.max_value == max(values.values())


def test_log_convexity_of_run_products():
    # h(x) = sum_{i=k}^{x} log C(i, k) has second difference
    # log C(x+2, k) - log C(x+1, k) > 0 for x >= k
    for k in range(1, 8):
        for x in range(k, 60):
            assert binomial(x + 2, k) > binomial(x + 1, k)
            d2 = (exact_log(binom_run_product(x + 2, k)) - 2 * exact_log(binom_run_product(x + 1, k))
                  + exact_log(binom_run_product(x, k)))
            assert d2 > 0


def test_binomial_log_concavity_direction():
    # pinned direction: C(x+1, k)^2 >= C(x, k) C(x+2, k)
    for k in range(1, 8):
        for x in range(k, 60):
            assert binomial(x + 1, k) ** 2 >= binomial(x, k) * binomial(x + 2, k)


def test_grid_lower_bound_and_extremes():
    reports = bounds_grid(range(1, 25), range(1, 4), range(1, 5))
    assert len(reports) == sum(1 for n in range(1, 25) for m in range(1, 4)
                               for k in range(1, 5) if n >= m * k)
    assert all(r.lower_holds for r in reports)
    assert all(r.schur_holds for r in reports)


@pytest.mark.parametrize("parts,p,k,expected", [(2, 2, 3, 8), (2, 1, 4, 10), (1, 1, 5, 5),
                                                (3, 2, 3, 1), (3, 4, 3, 1)])
def test_powered_examples(parts, p, k, expected):
    assert powered_composition_sum(parts, p, k) == expected
    assert powered_composition_closed_form(parts, p, k) == expected


@given(st.integers(1, 3), st.integers(0, 3), st.integers(0, 9))
def test_powered_dp_against_enumeration(parts, p, extra):
    k = parts + extra
    brute = sum(math.prod(c) ** p for c in oracles.compositions_brute(k, parts))
    assert powered_composition_sum(parts, p, k) == brute


def test_closed_form_equals_dp():
    for parts in range(1, 5):
        for p in range(1, 5):
            for k in range(parts, 31):
                assert powered_composition_closed_form(parts, p, k) == \
                    powered_composition_sum(parts, p, k)


def test_powered_rejects_small_k():
    with pytest.raises(ValueError):
        powered_composition_sum(3, 2, 2)
    with pytest.raises(ValueError):
        powered_composition_closed_form(3, 2, 2)


def test_growth_exponent():
    for parts in range(1, 4):
        for p in range(1, 4):
            target = parts * (p + 1) - 1
            ratio = powered_composition_sum(parts, p, 400) / powered_composition_sum(parts, p, 200)
            assert abs(ratio / 2 ** target - 1) < 0.05
            assert abs(powered_growth_exponent(parts, p, 200) / target - 1) < 0.05

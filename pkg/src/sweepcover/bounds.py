"""Exact checks on products of binomial coefficients over compositions and
on powered composition sums.

Products are formed exactly as ints. Comparisons with the closed-form
bounds are made on logarithms carried to 30 significant digits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import mpmath

from .combinatorics import (
    Composition,
    IntPolynomial,
    binomial,
    compositions,
    eulerian_polynomial,
)
from .exceptions import ResourceCapExceeded

__all__ = [
    "BoundsReport",
    "SchurVerdict",
    "binom_run_product",
    "composition_product",
    "theorem2_log_bounds",
    "theorem2_bounds",
    "bin_bounds_log",
    "exact_log",
    "check_schur_extremes",
    "bounds_case",
    "bounds_grid",
    "powered_composition_sum",
    "powered_composition_closed_form",
    "powered_growth_exponent",
]

LOG_DIGITS = 30
MAX_COMPOSITIONS = 10**6

_mp = mpmath.mp.clone()
_mp.dps = LOG_DIGITS


def exact_log(value: int):
    """Natural log of a positive int as a 30-digit mpmath float."""
    if value <= 0:
        raise ValueError("log of a non-positive integer")
    return _mp.log(_mp.mpf(value))


def binom_run_product(x: int, k: int) -> int:
    """``prod_{i=k}^{x} C(i, k)``.

    Factors with ``i < k`` vanish, so the run starts at ``i = k``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if x < k:
        raise ValueError(f"need x >= k, got x={x}, k={k}")
    prod = 1
    for i in range(k, x + 1):
        prod *= binomial(i, k)
    return prod


def composition_product(parts: Composition | Iterable[int], k: int) -> int:
    """``prod_j prod_{i=k}^{n_j} C(i, k)`` over the parts ``n_j``."""
    prod = 1
    for part in parts:
        if part < k:
            raise ValueError(f"part {part} is smaller than k={k}")
        prod *= binom_run_product(part, k)
    return prod


def bin_bounds_log(n: int, k: int):
    """Log of the single-run lower and upper bounds for ``prod C(i, k)``."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    n_, k_ = _mp.mpf(n), _mp.mpf(k)
    lower = k_ / 2 * _mp.log(2 * _mp.pi * n_) + k_ * n_ * _mp.log(n_ / (_mp.e * k_))
    upper = ((k_ - n_) / 2 * _mp.log(2 * _mp.pi)
             + (k_ * n_ + k_ / 2 - n_ / 2) * _mp.log(n_ / k_))
    return lower, upper


def theorem2_log_bounds(n: int, m: int, k: int):
    """Logs of the composition-product lower and upper bounds.

    Lower: ``(n/(e k m))^(k n) * sqrt(2 pi n / m)^k``.
    Upper: ``(nt/k)^(k nt + k/2 - nt/2) * sqrt(2 pi)^(k - nt)`` with
    ``nt = n - (m - 1) k``.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if n < m * k:
        raise ValueError(f"infeasible: n={n} < m*k={m * k}")
    n_, m_, k_ = _mp.mpf(n), _mp.mpf(m), _mp.mpf(k)
    nt = n_ - (m_ - 1) * k_
    lower = k_ * n_ * _mp.log(n_ / (_mp.e * k_ * m_)) + k_ / 2 * _mp.log(2 * _mp.pi * n_ / m_)
    upper = ((k_ * nt + k_ / 2 - nt / 2) * _mp.log(nt / k_)
             + (k_ - nt) / 2 * _mp.log(2 * _mp.pi))
    return lower, upper


def theorem2_bounds(n: int, m: int, k: int) -> tuple[float, float]:
    """The two bounds as floats (``inf`` when beyond double range)."""
    lo, hi = theorem2_log_bounds(n, m, k)

    def to_float(x):
        try:
            return math.exp(float(x))
        except OverflowError:
            return math.inf

    return to_float(lo), to_float(hi)


def _balanced(n: int, m: int) -> tuple[int, ...]:
    q, r = divmod(n, m)
    return (q + 1,) * r + (q,) * (m - r)


def _concentrated(n: int, m: int, k: int) -> tuple[int, ...]:
    return (n - (m - 1) * k,) + (k,) * (m - 1)


@dataclass(frozen=True)
class SchurVerdict:
    n: int
    m: int
    k: int
    count: int
    min_value: int
    max_value: int
    min_compositions: tuple[tuple[int, ...], ...]
    max_compositions: tuple[tuple[int, ...], ...]
    balanced: tuple[int, ...]
    concentrated: tuple[int, ...]

    @property
    def min_is_balanced(self) -> bool:
        return self.balanced in self.min_compositions

    @property
    def max_is_concentrated(self) -> bool:
        return self.concentrated in self.max_compositions

    @property
    def passed(self) -> bool:
        return self.min_is_balanced and self.max_is_concentrated


def check_schur_extremes(n: int, m: int, k: int, *,
                         budget: int = MAX_COMPOSITIONS) -> SchurVerdict:
    """Scan every composition of ``n`` into ``m`` parts ``>= k`` and record
    where the product is smallest and largest.

    The verdict passes when the balanced composition (parts differing by at
    most one) attains the minimum and ``(n - (m-1)k, k, ..., k)`` attains the
    maximum.
    """
    if n < m * k:
        raise ValueError(f"infeasible: n={n} < m*k={m * k}")
    free = n - m * k
    count = binomial(free + m - 1, m - 1)
    if count > budget:
        raise ResourceCapExceeded(f"{count} compositions exceed the budget {budget}")
    # run products are shared across compositions
    runs = {x: binom_run_product(x, k) for x in range(k, n - (m - 1) * k + 1)}
    lo = hi = None
    lo_at: list[tuple[int, ...]] = []
    hi_at: list[tuple[int, ...]] = []
    for comp in compositions(n, m, k):
        value = 1
        for part in comp:
            value *= runs[part]
        if lo is None or value < lo:
            lo, lo_at = value, [comp.parts]
        elif value == lo:
            lo_at.append(comp.parts)
        if hi is None or value > hi:
            hi, hi_at = value, [comp.parts]
        elif value == hi:
            hi_at.append(comp.parts)
    return SchurVerdict(n, m, k, count, lo, hi, tuple(lo_at), tuple(hi_at),
                        _balanced(n, m), _concentrated(n, m, k))


@dataclass(frozen=True)
class BoundsReport:
    """Exact extremes over compositions against the closed-form bounds."""

    n: int
    m: int
    k: int
    ntilde: int
    count: int
    min_value: int
    max_value: int
    min_composition: tuple[int, ...]
    max_composition: tuple[int, ...]
    log_lower: float
    log_upper: float
    log_min: float
    log_max: float
    lower_holds: bool
    upper_holds: bool
    schur_holds: bool

    @property
    def lower_bound(self) -> float:
        return _safe_exp(self.log_lower)

    @property
    def upper_bound(self) -> float:
        return _safe_exp(self.log_upper)


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def bounds_case(n: int, m: int, k: int) -> BoundsReport:
    """One grid case: the lower bound is tested against the smallest
    product and the upper bound against the largest."""
    verdict = check_schur_extremes(n, m, k)
    lo_log, hi_log = theorem2_log_bounds(n, m, k)
    min_log = exact_log(verdict.min_value)
    max_log = exact_log(verdict.max_value)
    min_comp = verdict.balanced if verdict.min_is_balanced else verdict.min_compositions[0]
    max_comp = (verdict.concentrated if verdict.max_is_concentrated
                else verdict.max_compositions[0])
    return BoundsReport(
        n=n, m=m, k=k, ntilde=n - (m - 1) * k, count=verdict.count,
        min_value=verdict.min_value, max_value=verdict.max_value,
        min_composition=min_comp, max_composition=max_comp,
        log_lower=float(lo_log), log_upper=float(hi_log),
        log_min=float(min_log), log_max=float(max_log),
        lower_holds=bool(lo_log <= min_log), upper_holds=bool(max_log <= hi_log),
        schur_holds=verdict.passed)


def bounds_grid(n_range: Iterable[int], m_range: Iterable[int],
                k_range: Iterable[int]) -> list[BoundsReport]:
    """Every feasible ``(n, m, k)`` (``n >= m k``) in the given ranges."""
    out = []
    m_values, k_values = list(m_range), list(k_range)
    for n in n_range:
        for m in m_values:
            for k in k_values:
                if k >= 1 and m >= 1 and n >= m * k:
                    out.append(bounds_case(n, m, k))
    return out


def powered_composition_sum(parts: int, p: int, k: int) -> int:
    """``sum (k_1 ... k_parts)^p`` over compositions of ``k`` into
    ``parts`` positive parts, by repeated convolution."""
    if parts < 1 or p < 0:
        raise ValueError("parts must be positive and p nonnegative")
    if k < parts:
        raise ValueError(f"need k >= parts, got k={k}, parts={parts}")
    base = [0] + [m**p for m in range(1, k + 1)]
    acc = base
    for _ in range(parts - 1):
        nxt = [0] * (k + 1)
        for i, a in enumerate(acc):
            if a:
                for j in range(1, k + 1 - i):
                    nxt[i + j] += a * base[j]
        acc = nxt
    return acc[k]


def powered_composition_closed_form(parts: int, p: int, k: int) -> int:
    """Same sum via ``sum_j a_j C(k - parts - j + N - 1, N - 1)`` with
    ``a_j`` the coefficients of ``P_p(x)^parts`` (Eulerian polynomial) and
    ``N = parts (p + 1)``."""
    if parts < 1 or p < 1:
        raise ValueError("parts and p must be positive")
    if k < parts:
        raise ValueError(f"need k >= parts, got k={k}, parts={parts}")
    coeffs: IntPolynomial = eulerian_polynomial(p) ** parts
    big_n = parts * (p + 1)
    total = 0
    for j, a in enumerate(coeffs):
        m = k - parts - j
        if m < 0:
            break
        total += a * binomial(m + big_n - 1, big_n - 1)
    return total


def powered_growth_exponent(parts: int, p: int, k: int) -> float:
    """``log2(S(2k) / S(k))``; tends to ``parts (p + 1) - 1``."""
    hi = powered_composition_sum(parts, p, 2 * k)
    lo = powered_composition_sum(parts, p, k)
    return float((exact_log(hi) - exact_log(lo)) / _mp.log(2))

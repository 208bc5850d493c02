"""Truncated power series with exact integer coefficients, and the
fixed-point solver for the DSC generating function."""
from __future__ import annotations

from typing import Sequence

import gmpy2

from .combinatorics import binomial, touchard

__all__ = [
    "IntegerSeries",
    "series_add",
    "series_mul",
    "series_pow",
    "phi_apply",
    "solve_ogf",
]


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    raw = value.to_bytes(max(nbytes * count, (value.bit_length() + 7) // 8), "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") for i in range(count)]


def _mul_nonneg(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    # Kronecker substitution: one big-int product replaces the Cauchy sum.
    a = list(a[: order + 1])
    b = list(b[: order + 1])
    if not any(a) or not any(b):
        return [0] * (order + 1)
    bits = max(a).bit_length() + max(b).bit_length()
    nbytes = (bits + min(len(a), len(b)).bit_length() + 8) // 8
    prod = gmpy2.mpz(_pack(a, nbytes)) * gmpy2.mpz(_pack(b, nbytes))
    return _unpack(int(prod), nbytes, order + 1)


def _mul_exact(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    if all(c >= 0 for c in a) and all(c >= 0 for c in b):
        return _mul_nonneg(a, b, order)
    ap = [max(c, 0) for c in a]
    an = [max(-c, 0) for c in a]
    bp = [max(c, 0) for c in b]
    bn = [max(-c, 0) for c in b]
    pp = _mul_nonneg(ap, bp, order)
    nn = _mul_nonneg(an, bn, order)
    pn = _mul_nonneg(ap, bn, order)
    np_ = _mul_nonneg(an, bp, order)
    return [w + x - y - z for w, x, y, z in zip(pp, nn, pn, np_)]


class IntegerSeries:
    """Power series ``sum_{i<=order} c_i z^i`` truncated at ``order``.

    Arithmetic keeps the truncation order fixed; mixing orders raises
    ``ValueError``.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence[int], order: int | None = None):
        coeffs = [int(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coefficients: list[int] = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "IntegerSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "IntegerSeries":
        return cls([1], order)

    def _check(self, other: "IntegerSeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}")

    def __len__(self):
        return self.order + 1

    def __getitem__(self, i):
        return self.coefficients[i]

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, IntegerSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == list(other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, IntegerSeries):
            return NotImplemented
        self._check(other)
        return IntegerSeries([a + b for a, b in zip(self, other)], self.order)

    def __sub__(self, other):
        if not isinstance(other, IntegerSeries):
            return NotImplemented
        self._check(other)
        return IntegerSeries([a - b for a, b in zip(self, other)], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerSeries([other * c for c in self], self.order)
        if not isinstance(other, IntegerSeries):
            return NotImplemented
        self._check(other)
        return IntegerSeries(_mul_exact(self.coefficients, other.coefficients, self.order),
                             self.order)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntegerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, z: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __repr__(self):
        return f"IntegerSeries({self.coefficients}, order={self.order})"


def series_add(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    return a + b


def series_mul(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    return a * b


def series_pow(a: IntegerSeries, e: int) -> IntegerSeries:
    return a ** e


def phi_apply(n: int, y: IntegerSeries) -> IntegerSeries:
    """Evaluate ``Phi(z, y) = sum_u C(n, u) B_u(z) y^(n-u)`` as a series."""
    order = y.order
    powers = [IntegerSeries.one(order)]
    for _ in range(n):
        powers.append(powers[-1] * y)
    acc = IntegerSeries.zero(order)
    for u in range(n + 1):
        weight = IntegerSeries([binomial(n, u) * c for c in touchard(u)], order)
        acc = acc + weight * powers[n - u]
    return acc


def solve_ogf(n: int, order: int) -> IntegerSeries:
    """Coefficients ``f_n(0..order)`` of the DSC generating function.

    Iterates ``y <- Phi(z, y)`` from ``y = 0``. Since ``Phi_y(0, 0) = 0``
    for ``n >= 2`` every pass fixes at least one more coefficient, so the
    loop stops after at most ``order + 2`` evaluations.
    """
    if n < 2:
        raise ValueError(f"branching factor must satisfy n >= 2, got {n}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    y = IntegerSeries.zero(order)
    for _ in range(order + 2):
        nxt = phi_apply(n, y)
        if nxt == y:
            return y
        y = nxt
    raise RuntimeError(
        f"fixed-point iteration for n={n} did not stabilise within {order + 2} passes")

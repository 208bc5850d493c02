"""Exact integer combinatorics: binomials, Stirling and Eulerian numbers,
Touchard polynomials and integer compositions.

Everything here works on Python ints, so values never overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "IntPolynomial",
    "Composition",
    "binomial",
    "stirling2",
    "stirling2_row",
    "touchard",
    "bell",
    "eulerian",
    "eulerian_polynomial",
    "compositions",
]


class IntPolynomial:
    """Dense polynomial in ``z`` with integer coefficients.

    ``coefficients[i]`` is the coefficient of ``z**i``. Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __call__(self, z):
        # Horner; works for ints, floats, Fractions and mpmath numbers
        acc = 0 * z
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self), len(other))
        return IntPolynomial([self[i] + other[i] for i in range(size)])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coefficients])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == IntPolynomial(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of parts, each at least ``min_part``."""

    parts: tuple[int, ...]
    min_part: int = 1
    sum: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < self.min_part for p in parts):
            raise ValueError(f"part below minimum {self.min_part}: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "sum", sum(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative ``n``; zero when ``k > n`` or ``k < 0``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2_row(u: int) -> tuple[int, ...]:
    """Row ``(S(u, 0), ..., S(u, u))`` of Stirling numbers of the second kind."""
    if u < 0:
        raise ValueError("u must be nonnegative")
    if u == 0:
        return (1,)
    prev = stirling2_row(u - 1)
    row = [0] * (u + 1)
    for k in range(1, u + 1):
        left = prev[k] if k < len(prev) else 0
        row[k] = k * left + prev[k - 1]
    return tuple(row)


def stirling2(u: int, k: int) -> int:
    """Number of partitions of a ``u``-set into ``k`` nonempty blocks."""
    if k < 0 or k > u:
        return 0
    return stirling2_row(u)[k]


def touchard(u: int) -> IntPolynomial:
    """Touchard polynomial ``B_u(z) = sum_k S(u, k) z^k``."""
    return IntPolynomial(stirling2_row(u))


def bell(u: int) -> int:
    return sum(stirling2_row(u))


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    # A(n, j) = (j + 1) A(n-1, j) + (n - j) A(n-1, j-1)
    if n == 0:
        return (1,)
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = [0] * n
    for j in range(n):
        a = prev[j] if j < len(prev) else 0
        b = prev[j - 1] if j >= 1 else 0
        row[j] = (j + 1) * a + (n - j) * b
    return tuple(row)


def eulerian(n: int, j: int) -> int:
    """Eulerian number A(n, j): permutations of ``n`` items with ``j`` descents."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if j < 0 or (n > 0 and j >= n) or (n == 0 and j > 0):
        return 0
    return _eulerian_row(n)[j]


def eulerian_polynomial(p: int) -> IntPolynomial:
    """``P_p(x)`` with ``sum_{m>=1} m^p x^m = x P_p(x) / (1 - x)^(p + 1)``."""
    if p < 1:
        raise ValueError("p must be positive")
    return IntPolynomial(_eulerian_row(p))


def compositions(total: int, parts: int, min_part: int = 1) -> Iterator[Composition]:
    """Yield every composition of ``total`` into ``parts`` parts, each
    ``>= min_part``, in lexicographic order.

    >>> [c.parts for c in compositions(3, 2)]
    [(1, 2), (2, 1)]
    >>> [c.parts for c in compositions(0, 0)]
    [()]
    """
    if min_part < 1:
        raise ValueError("min_part must be positive")
    if parts < 0 or total < 0:
        return
    if parts == 0:
        if total == 0:
            yield Composition((), min_part)
        return
    if total < parts * min_part:
        return
    buf = [0] * parts

    def rec(i: int, remaining: int):
        if i == parts - 1:
            buf[i] = remaining
            yield Composition(tuple(buf), min_part)
            return
        slack = remaining - (parts - i - 1) * min_part
        for p in range(min_part, slack + 1):
            buf[i] = p
            yield from rec(i + 1, remaining - p)

    yield from rec(0, total)

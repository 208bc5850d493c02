"""Exact f_n(k) tables from the DSC recurrence.

The composition-indexed inner sums are coefficients of convolution
powers of the partial table, which are extended one coefficient at a
time as ``k`` grows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .combinatorics import binomial, stirling2

__all__ = [
    "DscTable",
    "GrowthVerdict",
    "MAX_KMAX",
    "f_table",
    "total_dsc",
    "check_growth_step",
]

MAX_KMAX = 5000


@dataclass(frozen=True)
class DscTable:
    """``values[k] = f_n(k)`` for ``k = 0..kmax``."""

    n: int
    values: tuple[int, ...]

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def f_table(n: int, kmax: int, *, max_kmax: int = MAX_KMAX) -> DscTable:
    """Number of lower DSCs with exactly ``k`` colours in the infinite
    ``n``-ary tree, for ``k = 0..kmax``.

    Parameters
    ----------
    n : int
        Branching factor, at least 2. The unary tree has infinitely many
        lower antichains with one colour, so it is rejected.
    kmax : int
        Largest colour count to tabulate.
    max_kmax : int
        Upper limit on ``kmax`` to keep memory bounded.
    """
    if n < 2:
        raise ValueError(f"branching factor must satisfy n >= 2, got {n}")
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if kmax > max_kmax:
        raise ValueError(f"kmax={kmax} exceeds the configured budget {max_kmax}")

    # weights[u][k'] = C(n, u) * S(u, k')
    weights = [[binomial(n, u) * stirling2(u, kp) for kp in range(u + 1)]
               for u in range(n + 1)]
    # powers[j][m] = [z^m] f^(*j); powers[0] is the unit series
    powers: list[list[int]] = [[] for _ in range(n + 1)]
    f: list[int] = []

    for k in range(kmax + 1):
        # extend f^(*j) at index k for j >= 2; needs only f[1..k-1]
        powers[0].append(1 if k == 0 else 0)
        for j in range(2, n + 1):
            prev = powers[j - 1]
            powers[j].append(sum(f[i] * prev[k - i] for i in range(1, k)))

        total = 0
        for u in range(n + 1):
            j = n - u
            row = weights[u]
            for kp in range(min(u, k) + 1):
                w = row[kp]
                if w == 0:
                    continue
                # j == 1 with kp == 0 would need f[k]; weight is S(u, 0) = 0 there
                total += w * powers[j][k - kp]
        f.append(total)
        powers[1].append(total)

    return DscTable(n, tuple(f))


def total_dsc(n: int, k: int, convention: Literal["k1", "k0"] = "k1") -> int:
    """All DSCs with ``k`` colours, including the root singleton.

    With ``convention="k1"`` the root singleton is counted as the
    one-coloured DSC it is; ``"k0"`` puts the extra object at ``k = 0``.
    """
    if convention not in ("k1", "k0"):
        raise ValueError(f"unknown convention {convention!r}")
    if k < 0 or (k == 0 and convention == "k1"):
        raise ValueError("k must be positive")
    value = f_table(n, k).values[k]
    extra = 1 if k == (1 if convention == "k1" else 0) else 0
    return value + extra


@dataclass(frozen=True)
class GrowthVerdict:
    """Outcome of ``f(k) >= n f(k - 1)`` over a table."""

    passed: bool
    checks: tuple[tuple[int, bool], ...]
    first_violation: int | None


def check_growth_step(table: DscTable) -> GrowthVerdict:
    n, values = table.n, table.values
    checks = tuple((k, values[k] >= n * values[k - 1]) for k in range(2, len(values)))
    bad = next((k for k, ok in checks if not ok), None)
    return GrowthVerdict(bad is None, checks, bad)

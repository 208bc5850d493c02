"""Square-root singularity of the DSC generating function and the
coefficient asymptotics it implies.

The singular point ``(R, y0)`` solves ``Phi(z, y) = y`` together with
``Phi_y(z, y) = 1``. Near ``R`` the series behaves like
``y0 - c sqrt(1 - z/R)``, hence ``f_n(k) ~ c/(2 sqrt(pi)) k^(-3/2) R^(-k)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .combinatorics import IntPolynomial, binomial, touchard
from .exceptions import ConvergenceError
from .recurrence import DscTable, f_table

__all__ = [
    "CharacteristicSystem",
    "SingularityReport",
    "AsymptoticRow",
    "GrowthTheoremVerdict",
    "characteristic_residual",
    "solve_singularity",
    "asymptotic_table",
    "crossing_k",
    "tail_spread",
    "verify_growth_theorem",
]

SEED_ORDER = 120


class CharacteristicSystem:
    """``Phi(z, y) = sum_u C(n, u) B_u(z) y^(n-u)`` and its partial
    derivatives, evaluated in floating point from exact coefficients."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"branching factor must satisfy n >= 2, got {n}")
        self.n = n
        # weight[j] multiplies y**j, j = n - u
        self.weight: list[IntPolynomial] = [
            touchard(n - j) * binomial(n, n - j) for j in range(n + 1)]
        self.dweight = [w.derivative() for w in self.weight]

    def phi(self, z, y):
        return sum(w(z) * y**j for j, w in enumerate(self.weight))

    def phi_y(self, z, y):
        return sum(j * w(z) * y ** (j - 1) for j, w in enumerate(self.weight) if j >= 1)

    def phi_yy(self, z, y):
        return sum(j * (j - 1) * w(z) * y ** (j - 2)
                   for j, w in enumerate(self.weight) if j >= 2)

    def phi_z(self, z, y):
        return sum(dw(z) * y**j for j, dw in enumerate(self.dweight))

    def phi_zy(self, z, y):
        return sum(j * dw(z) * y ** (j - 1) for j, dw in enumerate(self.dweight) if j >= 1)

    def residual(self, z, y) -> tuple[float, float]:
        return self.phi(z, y) - y, self.phi_y(z, y) - 1

    def jacobian(self, z, y) -> np.ndarray:
        return np.array([[self.phi_z(z, y), self.phi_y(z, y) - 1],
                         [self.phi_zy(z, y), self.phi_yy(z, y)]], dtype=float)


def characteristic_residual(n: int, z: float, y: float) -> tuple[float, float]:
    """``(Phi(z, y) - y, Phi_y(z, y) - 1)``."""
    return CharacteristicSystem(n).residual(float(z), float(y))


@dataclass(frozen=True)
class SingularityReport:
    n: int
    R: float
    y0: float
    c: float
    D: float
    C: float
    residual_norm: float
    newton_iterations: int
    seeded_by: str = "ratio"

    @property
    def exceeds_branching(self) -> bool:
        return self.D > self.n

    def as_dict(self) -> dict:
        return {"n": self.n, "R": self.R, "y0": self.y0, "c": self.c, "D": self.D,
                "C": self.C, "residual_norm": self.residual_norm,
                "newton_iterations": self.newton_iterations,
                "D_exceeds_n": self.exceeds_branching, "seeded_by": self.seeded_by}


def _seed(n: int, order: int = SEED_ORDER) -> tuple[float, float]:
    table = f_table(n, order + 1).values
    r0 = float(Fraction(table[order], table[order + 1]))
    z = r0 * (1 - 1e-3)
    y = 0.0
    for coef in reversed(table[: order + 1]):
        y = y * z + coef
    return r0, y


def _newton(system: CharacteristicSystem, z: float, y: float, tol: float, max_iter: int):
    for it in range(max_iter + 1):
        res = np.array(system.residual(z, y))
        norm = float(np.hypot(*res))
        if not math.isfinite(norm):
            raise ConvergenceError("residual is not finite", (z, y), it)
        if norm < tol:
            return z, y, norm, it
        if it == max_iter:
            break
        jac = system.jacobian(z, y)
        det = np.linalg.det(jac)
        scale = np.abs(jac).max()
        if not math.isfinite(det) or abs(det) <= 1e-14 * max(scale, 1.0) ** 2:
            raise ConvergenceError("near-singular Jacobian", (z, y), it)
        dz, dy = np.linalg.solve(jac, -res)
        z, y = float(z + dz), float(y + dy)
    raise ConvergenceError(
        f"Newton did not converge in {max_iter} iterations (residual {norm:.3e})",
        (z, y), max_iter)


def _grid_seed(system: CharacteristicSystem, points: int = 200) -> tuple[float, float]:
    # On the branch y*(z) where Phi_y = 1, g(z) = Phi - y is negative below R
    # and positive above it, so R is a sign change of g.
    n = system.n

    def y_star(z):
        f = lambda y: system.phi_y(z, y) - 1
        if f(0.0) >= 0:
            return 0.0
        hi = 1.0
        while f(hi) < 0:
            hi *= 2
        return brentq(f, 0.0, hi, xtol=1e-15)

    def g(z):
        y = y_star(z)
        return system.phi(z, y) - y

    zs = [float(z) for z in np.linspace(0, 1.0 / n, points + 1)[1:]]
    prev_z, prev_g = None, None
    for z in zs:
        gz = g(z)
        if prev_g is not None and prev_g < 0 <= gz:
            root = float(brentq(g, prev_z, z, xtol=1e-15))
            return root, float(y_star(root))
        prev_z, prev_g = z, gz
    raise ConvergenceError("grid search found no sign change on (0, 1/n)")


def solve_singularity(n: int, tol: float = 1e-12, *, max_iter: int = 100,
                      guess: tuple[float, float] | None = None,
                      seed: str = "ratio") -> SingularityReport:
    """Locate the dominant singularity ``R_n`` and the local constants.

    Parameters
    ----------
    n : int
        Branching factor (>= 2).
    tol : float
        Newton stops once the Euclidean norm of the two residuals drops
        below ``tol``.
    max_iter : int
        Newton iteration limit.
    guess : (float, float), optional
        Starting ``(z, y)``. By default ``z = f(K)/f(K+1)`` with ``K = 120``
        and ``y`` the truncated series at ``z (1 - 1e-3)``. A grid search on
        ``(0, 1/n)`` takes over if Newton fails from that point.
    seed : {"ratio", "grid"}
        Seeding policy when no ``guess`` is given; ``"grid"`` skips the
        coefficient-ratio start and goes straight to the grid search.

    Returns
    -------
    SingularityReport
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if seed not in ("ratio", "grid"):
        raise ValueError(f"unknown seed policy {seed!r}")
    system = CharacteristicSystem(n)
    try:
        if guess is None and seed == "grid":
            raise ConvergenceError("grid seeding requested")
        seeded_by = "guess" if guess is not None else "ratio"
        z0, y0 = (float(v) for v in guess) if guess is not None else _seed(n)
        z, y, norm, its = _newton(system, z0, y0, tol, max_iter)
        if z <= 0 or y <= 0:
            raise ConvergenceError("Newton left the positive quadrant", (z, y), its)
    except ConvergenceError:
        if guess is not None:
            raise
        seeded_by = "grid"
        z0, y0 = _grid_seed(system)
        z, y, norm, its = _newton(system, z0, y0, tol, max_iter)

    phi_z = system.phi_z(z, y)
    phi_yy = system.phi_yy(z, y)
    c = math.sqrt(2 * z * phi_z / phi_yy)
    return SingularityReport(n=n, R=z, y0=y, c=c, D=1 / z, C=c / (2 * math.sqrt(math.pi)),
                             residual_norm=norm, newton_iterations=its, seeded_by=seeded_by)


@dataclass(frozen=True)
class AsymptoticRow:
    k: int
    root_k: float
    ratio: float


def asymptotic_table(n: int, kmax: int, report: SingularityReport,
                     table: DscTable | None = None) -> list[AsymptoticRow]:
    """Rows ``k = 1..kmax`` of ``f(k)^(1/k)`` and ``f(k) / (k^(-3/2) D^k)``.

    Logs of the exact integers are taken directly, so nothing overflows.
    """
    if table is None or table.kmax < kmax or table.n != n:
        table = f_table(n, kmax)
    log_d = math.log(report.D)
    rows = []
    for k in range(1, kmax + 1):
        lf = math.log(table.values[k])
        rows.append(AsymptoticRow(k, math.exp(lf / k),
                                  math.exp(lf + 1.5 * math.log(k) - k * log_d)))
    return rows


def crossing_k(rows: Sequence[AsymptoticRow], level: float) -> int | None:
    """Smallest ``k`` whose ``k``-th root exceeds ``level``."""
    return next((r.k for r in rows if r.root_k > level), None)


def tail_spread(rows: Sequence[AsymptoticRow]) -> float:
    """Largest relative gap between ``ratio(k)`` and the final ratio over
    the last quarter of the rows."""
    last = rows[-1].ratio
    start = len(rows) - max(1, len(rows) // 4)
    return max(abs(r.ratio - last) / last for r in rows[start:])


@dataclass(frozen=True)
class GrowthTheoremVerdict:
    n: int
    D: float
    margin: float
    final_ratio: float
    ratio_error: float
    band: float
    crossing_k: int | None

    @property
    def exceeds_branching(self) -> bool:
        return self.D > self.n

    @property
    def in_band(self) -> bool:
        return self.ratio_error < self.band

    @property
    def passed(self) -> bool:
        return self.exceeds_branching and self.in_band


def verify_growth_theorem(n: int, kmax: int = 300, band: float = 0.05,
                          tol: float = 1e-12) -> GrowthTheoremVerdict:
    """Check ``D_n > n`` and that ``f(k) k^(3/2) / D^k`` sits within
    ``band`` (relative) of ``C_n`` at ``k = kmax``."""
    report = solve_singularity(n, tol)
    rows = asymptotic_table(n, kmax, report)
    final = rows[-1].ratio
    return GrowthTheoremVerdict(
        n=n, D=report.D, margin=report.D - n, final_ratio=final,
        ratio_error=abs(final / report.C - 1), band=band,
        crossing_k=crossing_k(rows, n))

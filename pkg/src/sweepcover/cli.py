"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 numeric non-convergence or
resource cap, 3 two independent computations disagree.
"""
from __future__ import annotations

import argparse
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .bounds import bounds_grid
from .exceptions import ConvergenceError, ResourceCapExceeded
from .output import figure_svg, to_csv, to_json
from .recurrence import f_table
from .series import solve_ogf
from .singularity import asymptotic_table, crossing_k, solve_singularity, tail_spread
from .tree import DEFAULT_MAX_ANTICHAINS, DEFAULT_MAX_NODES, census_lower_dsc

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_MISMATCH = 0, 1, 2, 3
ASYMPTOTICS_KMAX_LIMIT = 400
ENUMERATE_KMAX_LIMIT = 2000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    k: int | None = None
    kmax: int | None = None
    depth: int | None = None
    tol: float = 1e-12
    out: str | None = None
    format: str = "csv"
    grid: str | None = None
    total_convention: str = "k1"
    max_nodes: int = DEFAULT_MAX_NODES
    max_antichains: int = DEFAULT_MAX_ANTICHAINS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sweepcover",
                     description="Decorated sweep cover counts and asymptotics.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, formats=("csv", "json")):
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=formats, default="csv")

    p = sub.add_parser("enumerate", help="tabulate f_n(k) from the recurrence")
    p.add_argument("--n", type=int, required=True, help="branching factor, n >= 2")
    p.add_argument("--kmax", type=int, default=20, help="largest k (default 20)")
    p.add_argument("--total-convention", choices=("k1", "k0"), default="k1",
                   help="where the root-singleton DSC is counted (default k1)")
    common(p)

    p = sub.add_parser("oracle", help="brute-force census on a finite truncation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--depth", type=int, help="truncation depth (default k+1)")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-antichains", type=int, default=DEFAULT_MAX_ANTICHAINS)
    common(p)

    p = sub.add_parser("singularity", help="solve the characteristic system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    common(p)

    p = sub.add_parser("asymptotics", help="k-th root and ratio table (figure data)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=300,
                   help=f"largest k (default 300, at most {ASYMPTOTICS_KMAX_LIMIT})")
    p.add_argument("--tol", type=float, default=1e-12)
    common(p, ("csv", "json", "svg"))

    p = sub.add_parser("bounds", help="composition-product bounds over a grid")
    p.add_argument("--grid", default="n=1-24,m=1-3,k=1-4",
                   help="ranges like 'n=1-24,m=1-3,k=1-4' (default shown)")
    common(p)
    return parser


def parse_grid(spec: str) -> dict[str, range]:
    """``"n=1-24,m=1-3,k=2"`` -> ranges for n, m, k (all three required)."""
    out = {}
    for item in spec.split(","):
        match = re.fullmatch(r"\s*([nmk])\s*=\s*(\d+)\s*(?:-\s*(\d+))?\s*", item)
        if not match:
            raise UsageError(f"malformed grid entry {item!r}")
        key, lo, hi = match.group(1), int(match.group(2)), match.group(3)
        hi = lo if hi is None else int(hi)
        if key in out or lo > hi or lo < 1:
            raise UsageError(f"bad grid range {item!r}")
        out[key] = range(lo, hi + 1)
    if set(out) != {"n", "m", "k"}:
        raise UsageError("grid needs ranges for n, m and k")
    return out


def _config(args) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand)
    for name in ("n", "k", "kmax", "depth", "tol", "out", "format", "grid",
                 "total_convention", "max_nodes", "max_antichains"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    sub = cfg.subcommand
    if cfg.n is not None and cfg.n < 2:
        raise UsageError(f"--n must satisfy n >= 2 (got {cfg.n})")
    if sub == "enumerate" and not 1 <= cfg.kmax <= ENUMERATE_KMAX_LIMIT:
        raise UsageError(f"--kmax must lie in 1..{ENUMERATE_KMAX_LIMIT}")
    if sub == "asymptotics" and not 1 <= cfg.kmax <= ASYMPTOTICS_KMAX_LIMIT:
        raise UsageError(f"--kmax must lie in 1..{ASYMPTOTICS_KMAX_LIMIT}")
    if sub in ("singularity", "asymptotics") and not (cfg.tol > 0 and math.isfinite(cfg.tol)):
        raise UsageError("--tol must be a positive number")
    if sub == "oracle":
        if cfg.k < 1:
            raise UsageError("--k must be positive")
        if cfg.depth is None:
            cfg.depth = cfg.k + 1
        if cfg.depth < 1:
            raise UsageError("--depth must be positive")
        if cfg.max_nodes < 1 or cfg.max_antichains < 1:
            raise UsageError("resource caps must be positive")
    return cfg


def _emit(cfg: RunConfig, text: str, summary: list[str]):
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
        for line in summary:
            print(line)
    else:
        sys.stdout.write(text)
        for line in summary:
            print(line, file=sys.stderr)


def cmd_enumerate(cfg: RunConfig) -> int:
    table = f_table(cfg.n, cfg.kmax)
    series = solve_ogf(cfg.n, cfg.kmax)
    agree = list(table.values) == series.coefficients
    extra_k = 1 if cfg.total_convention == "k1" else 0
    rows = [{"k": k, "f": table[k], "total": table[k] + (1 if k == extra_k else 0)}
            for k in range(1, cfg.kmax + 1)]
    fields = ["k", "f", "total"]
    if cfg.format == "json":
        text = to_json({"n": cfg.n, "kmax": cfg.kmax,
                        "total_convention": cfg.total_convention,
                        "series_agrees": agree, "rows": rows})
    else:
        text = to_csv(rows, fields)
    summary = [f"recurrence vs series through k={cfg.kmax}: "
               + ("agree" if agree else "MISMATCH")]
    _emit(cfg, text, summary)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_oracle(cfg: RunConfig) -> int:
    caps = dict(max_nodes=cfg.max_nodes, max_antichains=cfg.max_antichains)
    census = census_lower_dsc(cfg.n, cfg.k, cfg.depth, **caps)
    deeper = census_lower_dsc(cfg.n, cfg.k, cfg.depth + 1, **caps)
    recurrence = f_table(cfg.n, cfg.k)[cfg.k]
    stable = census == deeper
    match = census == recurrence and stable
    result = {"n": cfg.n, "k": cfg.k, "depth": cfg.depth, "census": census,
              "census_next_depth": deeper, "recurrence": recurrence,
              "stable": stable, "match": match}
    fields = list(result)
    text = to_json(result) if cfg.format == "json" else to_csv([result], fields)
    summary = [f"census {census}, recurrence {recurrence}, depth+1 census {deeper}: "
               + ("match" if match else "MISMATCH")]
    if not match and cfg.depth < cfg.k + 1:
        summary.append(f"note: depth {cfg.depth} is below k+1={cfg.k + 1}")
    _emit(cfg, text, summary)
    return EXIT_OK if match else EXIT_MISMATCH


def _ratio_estimate(n: int, order: int = 300) -> float:
    # f(k+1)/f(k) ~ D (1 - 3/(2k)); the correction leaves O(1/k^2) error
    values = f_table(n, order + 1).values
    return float(Fraction(values[order + 1], values[order])) * (1 + 1.5 / order)


def cmd_singularity(cfg: RunConfig) -> int:
    report = solve_singularity(cfg.n, cfg.tol)
    estimate = _ratio_estimate(cfg.n)
    agree = abs(estimate / report.D - 1) < 1e-3
    payload = report.as_dict()
    payload["D_ratio_estimate"] = estimate
    payload["ratio_check"] = agree
    fields = list(payload)
    text = to_json(payload) if cfg.format == "json" else to_csv([payload], fields)
    summary = [f"n={cfg.n}: R={report.R:.12g} D={report.D:.12g} c={report.c:.12g} "
               f"C={report.C:.12g} D>n: {report.exceeds_branching}"]
    if not agree:
        summary.append(f"coefficient-ratio estimate {estimate:.8g} disagrees with D")
    _emit(cfg, text, summary)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_asymptotics(cfg: RunConfig) -> int:
    report = solve_singularity(cfg.n, cfg.tol)
    table = f_table(cfg.n, cfg.kmax)
    agree = list(table.values) == solve_ogf(cfg.n, cfg.kmax).coefficients
    rows = asymptotic_table(cfg.n, cfg.kmax, report, table)
    cross = crossing_k(rows, cfg.n)
    final_error = abs(rows[-1].ratio / report.C - 1)
    spread = tail_spread(rows)
    if cfg.format == "svg":
        text = figure_svg(rows, n=cfg.n, D=report.D, C=report.C)
    elif cfg.format == "json":
        text = to_json({"n": cfg.n, "D_n": report.D, "C_n": report.C,
                        "crossing_k": cross, "final_ratio_error": final_error,
                        "tail_spread": spread,
                        "rows": [{"k": r.k, "f_root_k": r.root_k, "ratio": r.ratio}
                                 for r in rows]})
    else:
        text = to_csv([{"k": r.k, "f_root_k": r.root_k, "ratio": r.ratio} for r in rows],
                      ["k", "f_root_k", "ratio"],
                      preamble=[f"n={cfg.n},D_n={report.D:.12g},C_n={report.C:.12g}"])
    summary = [f"n={cfg.n}: D={report.D:.12g} C={report.C:.12g}",
               f"ratio at k={cfg.kmax} is within {100 * final_error:.4g}% of C; "
               f"last-quartile spread {100 * spread:.4g}%",
               f"k-th root first exceeds n at k={cross}"]
    if not agree:
        summary.append("recurrence and series tables DISAGREE")
    _emit(cfg, text, summary)
    return EXIT_OK if agree else EXIT_MISMATCH


def _validity_summary(reports) -> list[str]:
    lines = [f"{len(reports)} cases; lower bound holds on "
             f"{sum(r.lower_holds for r in reports)}, upper bound on "
             f"{sum(r.upper_holds for r in reports)}, extremal compositions as "
             f"predicted on {sum(r.schur_holds for r in reports)}"]
    by_mk: dict[tuple[int, int], list] = {}
    for r in reports:
        by_mk.setdefault((r.m, r.k), []).append(r)
    for (m, k), group in sorted(by_mk.items()):
        holds = [r.n for r in group if r.upper_holds]
        fails = [r.n for r in group if not r.upper_holds]
        lines.append(f"  m={m} k={k}: upper holds for n in {_runs(holds)}; "
                     f"fails for n in {_runs(fails)}")
    return lines


def _runs(values: list[int]) -> str:
    if not values:
        return "{}"
    spans, start, prev = [], values[0], values[0]
    for v in values[1:] + [None]:
        if v is not None and v == prev + 1:
            prev = v
            continue
        spans.append(f"{start}" if start == prev else f"{start}-{prev}")
        if v is not None:
            start = prev = v
    return "{" + ", ".join(spans) + "}"


def cmd_bounds(cfg: RunConfig) -> int:
    grid = parse_grid(cfg.grid)
    reports = bounds_grid(grid["n"], grid["m"], grid["k"])
    fields = ["n", "m", "k", "ntilde", "count", "min_value", "min_composition",
              "max_value", "max_composition", "log_lower", "log_min", "log_max",
              "log_upper", "lower_holds", "upper_holds", "schur_holds"]
    rows = [{f: getattr(r, f) for f in fields} for r in reports]
    summary = _validity_summary(reports)
    if cfg.format == "json":
        text = to_json({"grid": cfg.grid, "summary": summary, "rows": rows})
    else:
        text = to_csv(rows, fields)
    _emit(cfg, text, summary)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "oracle": cmd_oracle,
    "singularity": cmd_singularity,
    "asymptotics": cmd_asymptotics,
    "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ResourceCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

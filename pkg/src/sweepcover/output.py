"""CSV, JSON and SVG writers shared by the command line tools.

Formatting rules: ints are written in full decimal, floats with 12
significant digits, booleans as ``true``/``false``. JSON carries big
integers as decimal strings so no reader can round them.
"""
from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, Mapping, Sequence

from . import __version__

__all__ = ["format_value", "to_csv", "to_json", "figure_svg"]


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.12g}"
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value)
    if value is None:
        return ""
    return str(value)


def _json_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= 2**53 else value
    if isinstance(value, float):
        if not math.isfinite(value):
            return format_value(value)
        return float(f"{value:.12g}")
    if isinstance(value, (tuple, list)):
        return [_json_value(v) for v in value]
    if isinstance(value, Mapping):
        return {k: _json_value(v) for k, v in value.items()}
    return str(value)


def to_csv(rows: Iterable[Mapping], fields: Sequence[str],
           preamble: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in preamble:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([format_value(row[f]) for f in fields])
    return buf.getvalue()


def to_json(payload: Mapping) -> str:
    return json.dumps(_json_value(payload), indent=2) + "\n"


def _panel(xs, ys, *, x0, y0, width, height, title, ylabel, hlines):
    """One plot panel as a list of SVG element strings."""
    finite = [y for y in ys if math.isfinite(y)]
    levels = [h for h, _, _ in hlines]
    lo = min(finite + levels)
    hi = max(finite + levels)
    pad = 0.05 * (hi - lo or 1.0)
    lo, hi = lo - pad, hi + pad
    xmin, xmax = min(xs), max(xs)
    xspan = (xmax - xmin) or 1

    def px(x):
        return x0 + (x - xmin) / xspan * width

    def py(y):
        return y0 + height - (y - lo) / (hi - lo) * height

    out = [f'<rect x="{x0}" y="{y0}" width="{width}" height="{height}" '
           f'fill="none" stroke="#333"/>',
           f'<text x="{x0 + width / 2:.1f}" y="{y0 - 10}" text-anchor="middle" '
           f'font-size="14">{title}</text>',
           f'<text x="{x0 + width / 2:.1f}" y="{y0 + height + 36}" '
           f'text-anchor="middle" font-size="12">k</text>',
           f'<text x="{x0 - 48}" y="{y0 + height / 2:.1f}" font-size="12" '
           f'transform="rotate(-90 {x0 - 48} {y0 + height / 2:.1f})" '
           f'text-anchor="middle">{ylabel}</text>']
    for i in range(5):
        yv = lo + (hi - lo) * i / 4
        out.append(f'<text x="{x0 - 6}" y="{py(yv) + 4:.1f}" text-anchor="end" '
                   f'font-size="10">{yv:.4g}</text>')
        xv = xmin + xspan * i / 4
        out.append(f'<text x="{px(xv):.1f}" y="{y0 + height + 16}" '
                   f'text-anchor="middle" font-size="10">{xv:.0f}</text>')
    for level, label, dashed in hlines:
        dash = ' stroke-dasharray="2,4"' if dashed else ""
        out.append(f'<line x1="{x0}" y1="{py(level):.2f}" x2="{x0 + width}" '
                   f'y2="{py(level):.2f}" stroke="#c03"{dash}/>')
        out.append(f'<text x="{x0 + width - 4}" y="{py(level) - 4:.2f}" '
                   f'text-anchor="end" font-size="10" fill="#c03">{label}</text>')
    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys) if math.isfinite(y))
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>')
    return out


def figure_svg(rows, *, n: int, D: float, C: float) -> str:
    """Two panels: ``f(k)^(1/k)`` against ``D`` and ``n``, and
    ``f(k) k^(3/2) / D^k`` against ``C``."""
    ks = [r.k for r in rows]
    width, height = 380, 260
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- sweepcover {__version__} -->",
        '<svg xmlns="http://www.w3.org/2000/svg" width="960" height="360" '
        'viewBox="0 0 960 360" font-family="sans-serif">',
        '<rect width="960" height="360" fill="white"/>',
    ]
    parts += _panel(ks, [r.root_k for r in rows], x0=80, y0=40, width=width,
                    height=height, title=f"k-th root, n={n}", ylabel="f(k)^(1/k)",
                    hlines=[(D, f"D={D:.6g}", False), (float(n), f"n={n}", True)])
    parts += _panel(ks, [r.ratio for r in rows], x0=560, y0=40, width=width,
                    height=height, title=f"ratio to k^(-3/2) D^k, n={n}",
                    ylabel="ratio", hlines=[(C, f"C={C:.6g}", False)])
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

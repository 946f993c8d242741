"""Tiny deterministic SVG line plots.

Just enough to chart success-probability curves without pulling in a
plotting stack.  Output is a plain string built from the data alone, so the
same series always produce byte-identical files.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["line_plot"]

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_MARGIN_LEFT = 62.0
_MARGIN_RIGHT = 14.0
_MARGIN_TOP = 30.0
_MARGIN_BOTTOM = 46.0


def _nice_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    """Round tick positions covering [lo, hi] with a 1/2/5 step."""
    span = hi - lo
    if span <= 0.0:
        return [lo]
    raw = span / max(n - 1, 1)
    mag = 10.0 ** int(f"{raw:e}".split("e")[1])
    for mult in (1.0, 2.0, 5.0, 10.0):
        step = mult * mag
        if step >= raw:
            break
    first = step * (int(lo / step) if lo >= 0 else -int(-lo / step) - 1)
    ticks = []
    v = first
    while v <= hi + 0.5 * step:
        if v >= lo - 0.5 * step:
            ticks.append(round(v, 12))
        v += step
    return ticks


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def line_plot(
    series: Sequence[tuple[str, Sequence[float], Sequence[float]]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    width: int = 640,
    height: int = 420,
) -> str:
    """Render `series` = [(label, xs, ys), ...] as an SVG line chart."""
    if not series:
        raise ValueError("need at least one series")
    xs_all = [float(x) for _, xs, _ in series for x in xs]
    ys_all = [float(y) for _, _, ys in series for y in ys]
    if not xs_all:
        raise ValueError("series contain no points")

    x_lo, x_hi = min(xs_all), max(xs_all)
    y_lo, y_hi = min(ys_all), max(ys_all)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    x_pad = 0.04 * (x_hi - x_lo)
    y_pad = 0.06 * (y_hi - y_lo)
    x_lo, x_hi = x_lo - x_pad, x_hi + x_pad
    y_lo, y_hi = y_lo - y_pad, y_hi + y_pad

    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return _MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{_MARGIN_LEFT:.2f}" y="{_MARGIN_TOP:.2f}" width="{plot_w:.2f}" '
        f'height="{plot_h:.2f}" fill="none" stroke="#444" stroke-width="1"/>',
    ]
    font = 'font-family="sans-serif" font-size="11"'

    for tx in _nice_ticks(x_lo, x_hi):
        x = px(tx)
        out.append(
            f'<line x1="{x:.2f}" y1="{_MARGIN_TOP + plot_h:.2f}" x2="{x:.2f}" '
            f'y2="{_MARGIN_TOP + plot_h + 5:.2f}" stroke="#444" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{_MARGIN_TOP + plot_h + 18:.2f}" {font} '
            f'text-anchor="middle">{_fmt(tx)}</text>'
        )
    for ty in _nice_ticks(y_lo, y_hi):
        y = py(ty)
        out.append(
            f'<line x1="{_MARGIN_LEFT - 5:.2f}" y1="{y:.2f}" x2="{_MARGIN_LEFT:.2f}" '
            f'y2="{y:.2f}" stroke="#444" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_MARGIN_LEFT - 8:.2f}" y="{y + 4:.2f}" {font} '
            f'text-anchor="end">{_fmt(ty)}</text>'
        )

    if title:
        out.append(
            f'<text x="{width / 2:.2f}" y="18" font-family="sans-serif" '
            f'font-size="13" text-anchor="middle">{title}</text>'
        )
    if xlabel:
        out.append(
            f'<text x="{_MARGIN_LEFT + plot_w / 2:.2f}" y="{height - 8:.2f}" {font} '
            f'text-anchor="middle">{xlabel}</text>'
        )
    if ylabel:
        cy = _MARGIN_TOP + plot_h / 2
        out.append(
            f'<text x="14" y="{cy:.2f}" {font} text-anchor="middle" '
            f'transform="rotate(-90 14 {cy:.2f})">{ylabel}</text>'
        )

    for i, (label, xs, ys) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        pts = " ".join(f"{px(float(x)):.2f},{py(float(y)):.2f}" for x, y in zip(xs, ys))
        if len(list(xs)) > 1:
            out.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.6"/>'
            )
        for x, y in zip(xs, ys):
            out.append(
                f'<circle cx="{px(float(x)):.2f}" cy="{py(float(y)):.2f}" r="2.4" '
                f'fill="{color}"/>'
            )
        ly = _MARGIN_TOP + 14 + 15 * i
        lx = _MARGIN_LEFT + plot_w - 150
        out.append(
            f'<line x1="{lx:.2f}" y1="{ly - 4:.2f}" x2="{lx + 18:.2f}" y2="{ly - 4:.2f}" '
            f'stroke="{color}" stroke-width="1.6"/>'
        )
        out.append(f'<text x="{lx + 24:.2f}" y="{ly:.2f}" {font}>{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Dependency-free SVG line charts.

One fixed layout, byte-deterministic output: the same series always render to
the same text, which is what the reproducibility contract of the run harness
needs. Nothing here is configurable beyond labels and canvas size on purpose.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .errors import DomainError

_PALETTE = ("#1f6feb", "#d2491f", "#2da44e", "#8250df", "#bf8700", "#57606a")
_TICKS = 5


def _span(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        pad = 0.5 if lo == 0.0 else abs(lo) * 0.05
        return lo - pad, hi + pad
    return lo, hi


def _fmt(x: float) -> str:
    return format(x, ".2f")


def line_chart(
    series: list[tuple[str, list[float], list[float]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    width: float = 720.0,
    height: float = 440.0,
) -> str:
    """Render labeled (xs, ys) series to SVG text.

    Raises DomainError on empty input, mismatched lengths, or non-finite data.
    """
    if not series:
        raise DomainError("at least one series is required")
    xs_all: list[float] = []
    ys_all: list[float] = []
    for label, xs, ys in series:
        if len(xs) != len(ys) or len(xs) == 0:
            raise DomainError(f"series {label!r} needs equal, nonzero x/y lengths")
        for v in list(xs) + list(ys):
            if not math.isfinite(v):
                raise DomainError(f"series {label!r} contains a non-finite value")
        xs_all.extend(float(v) for v in xs)
        ys_all.extend(float(v) for v in ys)

    x_lo, x_hi = _span(xs_all)
    y_lo, y_hi = _span(ys_all)
    left, right, top, bottom = 72.0, 24.0, 40.0 if title else 24.0, 52.0
    plot_w = width - left - right
    plot_h = height - top - bottom
    if plot_w <= 0.0 or plot_h <= 0.0:
        raise DomainError(
            f"canvas {width}x{height} leaves no room inside the margins"
        )

    def px(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]
    if title:
        out.append(
            f'<text x="{_fmt(width / 2)}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15" fill="#24292f">{escape(title)}</text>'
        )

    for k in range(_TICKS):
        frac = k / (_TICKS - 1)
        gx = x_lo + frac * (x_hi - x_lo)
        gy = y_lo + frac * (y_hi - y_lo)
        xp, yp = px(gx), py(gy)
        out.append(
            f'<line x1="{_fmt(xp)}" y1="{_fmt(top)}" x2="{_fmt(xp)}" '
            f'y2="{_fmt(top + plot_h)}" stroke="#d0d7de" stroke-width="0.5"/>'
        )
        out.append(
            f'<line x1="{_fmt(left)}" y1="{_fmt(yp)}" x2="{_fmt(left + plot_w)}" '
            f'y2="{_fmt(yp)}" stroke="#d0d7de" stroke-width="0.5"/>'
        )
        out.append(
            f'<text x="{_fmt(xp)}" y="{_fmt(top + plot_h + 18)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11" fill="#57606a">{format(gx, ".6g")}</text>'
        )
        out.append(
            f'<text x="{_fmt(left - 8)}" y="{_fmt(yp + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" fill="#57606a">{format(gy, ".6g")}</text>'
        )

    out.append(
        f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="#57606a" stroke-width="1"/>'
    )

    for idx, (label, xs, ys) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(f"{_fmt(px(float(x)))},{_fmt(py(float(y)))}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if len(series) > 1:
            ly = top + 16 + 16 * idx
            out.append(
                f'<line x1="{_fmt(left + plot_w - 120)}" y1="{_fmt(ly - 4)}" '
                f'x2="{_fmt(left + plot_w - 98)}" y2="{_fmt(ly - 4)}" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
            out.append(
                f'<text x="{_fmt(left + plot_w - 92)}" y="{_fmt(ly)}" '
                f'font-family="sans-serif" font-size="11" fill="#24292f">{escape(label)}</text>'
            )

    if x_label:
        out.append(
            f'<text x="{_fmt(left + plot_w / 2)}" y="{_fmt(height - 12)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" fill="#24292f">{escape(x_label)}</text>'
        )
    if y_label:
        out.append(
            f'<text x="16" y="{_fmt(top + plot_h / 2)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" fill="#24292f" '
            f'transform="rotate(-90 16 {_fmt(top + plot_h / 2)})">{escape(y_label)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"

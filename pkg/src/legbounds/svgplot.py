"""Minimal static SVG line/scatter plots with optional log axes.

Deterministic output: no timestamps, no generated ids, fixed formatting.
Good enough to eyeball the study results; not a plotting library.
"""

import math

__all__ = ["Curve", "render_plot"]

_WIDTH = 720
_HEIGHT = 480
_MARGIN_L = 72
_MARGIN_R = 24
_MARGIN_T = 40
_MARGIN_B = 56

_PALETTE = ["#1f6fb4", "#d95f02", "#2ca02c", "#7570b3", "#a6761d", "#e7298a"]


class Curve:
    def __init__(self, x, y, label="", kind="line", dash=None):
        self.x = [float(v) for v in x]
        self.y = [float(v) for v in y]
        self.label = label
        self.kind = kind  # "line" or "dots"
        self.dash = dash  # e.g. "6,4"


def _nice_linear_ticks(lo, hi, target=6):
    span = hi - lo
    if span <= 0:
        return [lo]
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        step = mult * mag
        if span / step <= target:
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * span:
        ticks.append(0.0 if abs(t) < 1e-12 * span else t)
        t += step
    return ticks


def _decade_ticks(lo, hi):
    ticks = []
    e = math.floor(math.log10(lo)) if lo > 0 else 0
    while 10.0**e <= hi * (1 + 1e-12):
        if 10.0**e >= lo * (1 - 1e-12):
            ticks.append(10.0**e)
        e += 1
    return ticks or [lo, hi]


def _fmt(v):
    if v == int(v) and abs(v) < 1e6:
        return str(int(v))
    return f"{v:.3g}"


def render_plot(path, curves, *, title="", x_label="", y_label="",
                log_x=False, log_y=False):
    """Write an SVG with the given curves; log axes skip nonpositive points."""
    xs, ys = [], []
    for c in curves:
        for xv, yv in zip(c.x, c.y):
            if (log_x and xv <= 0) or (log_y and yv <= 0):
                continue
            xs.append(xv)
            ys.append(yv)
    if not xs:
        raise ValueError("nothing to plot")

    def tx(v):
        return math.log10(v) if log_x else v

    def ty(v):
        return math.log10(v) if log_y else v

    x_lo, x_hi = min(map(tx, xs)), max(map(tx, xs))
    y_lo, y_hi = min(map(ty, ys)), max(map(ty, ys))
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    pad_y = 0.04 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad_y, y_hi + pad_y

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(v):
        return _MARGIN_L + (tx(v) - x_lo) / (x_hi - x_lo) * plot_w

    def py(v):
        return _MARGIN_T + (y_hi - ty(v)) / (y_hi - y_lo) * plot_h

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">'
    )
    out.append(f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>')

    if log_x:
        x_ticks = _decade_ticks(10.0**x_lo, 10.0**x_hi)
    else:
        x_ticks = _nice_linear_ticks(x_lo, x_hi)
    if log_y:
        y_ticks = _decade_ticks(10.0**y_lo, 10.0**y_hi)
    else:
        y_ticks = _nice_linear_ticks(y_lo, y_hi)

    for t in x_ticks:
        x = px(t) if not log_x else _MARGIN_L + (math.log10(t) - x_lo) / (x_hi - x_lo) * plot_w
        out.append(f'<line x1="{x:.2f}" y1="{_MARGIN_T}" x2="{x:.2f}" '
                   f'y2="{_MARGIN_T + plot_h}" stroke="#dddddd" stroke-width="1"/>')
        label = _fmt(t) if not log_x else f"1e{int(round(math.log10(t)))}"
        out.append(f'<text x="{x:.2f}" y="{_MARGIN_T + plot_h + 18}" '
                   f'text-anchor="middle">{label}</text>')
    for t in y_ticks:
        y = py(t) if not log_y else _MARGIN_T + (y_hi - math.log10(t)) / (y_hi - y_lo) * plot_h
        out.append(f'<line x1="{_MARGIN_L}" y1="{y:.2f}" x2="{_MARGIN_L + plot_w}" '
                   f'y2="{y:.2f}" stroke="#dddddd" stroke-width="1"/>')
        label = _fmt(t) if not log_y else f"1e{int(round(math.log10(t)))}"
        out.append(f'<text x="{_MARGIN_L - 6}" y="{y + 4:.2f}" '
                   f'text-anchor="end">{label}</text>')

    out.append(f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" '
               f'height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>')

    for i, c in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        pts = [(xv, yv) for xv, yv in zip(c.x, c.y)
               if not ((log_x and xv <= 0) or (log_y and yv <= 0))]
        if c.kind == "dots":
            for xv, yv in pts:
                out.append(f'<circle cx="{px(xv):.2f}" cy="{py(yv):.2f}" r="2.2" '
                           f'fill="{color}"/>')
        else:
            coords = " ".join(f"{px(xv):.2f},{py(yv):.2f}" for xv, yv in pts)
            dash = f' stroke-dasharray="{c.dash}"' if c.dash else ""
            out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" '
                       f'stroke-width="1.5"{dash}/>')

    legend_y = _MARGIN_T + 14
    for i, c in enumerate(curves):
        if not c.label:
            continue
        color = _PALETTE[i % len(_PALETTE)]
        lx = _MARGIN_L + plot_w - 150
        out.append(f'<line x1="{lx}" y1="{legend_y - 4}" x2="{lx + 24}" '
                   f'y2="{legend_y - 4}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{legend_y}">{c.label}</text>')
        legend_y += 16

    if title:
        out.append(f'<text x="{_WIDTH / 2:.0f}" y="22" text-anchor="middle" '
                   f'font-size="14">{title}</text>')
    if x_label:
        out.append(f'<text x="{_MARGIN_L + plot_w / 2:.0f}" y="{_HEIGHT - 16}" '
                   f'text-anchor="middle">{x_label}</text>')
    if y_label:
        out.append(f'<text x="18" y="{_MARGIN_T + plot_h / 2:.0f}" text-anchor="middle" '
                   f'transform="rotate(-90 18 {_MARGIN_T + plot_h / 2:.0f})">{y_label}</text>')

    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")

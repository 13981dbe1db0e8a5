"""Minimal hand-rolled SVG line charts for sweep output.

CSV is the canonical sweep artifact; the SVG is a convenience rendering with
no plotting dependency. Line styles follow a fixed convention: the entropic
bound is solid, the square-root measurement bound dashed, the pairwise bound
dash-dotted.
"""

from __future__ import annotations

import numpy as np

_WIDTH, _HEIGHT = 720, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 64, 160, 24, 48

_STYLES = {
    "entropic": ("#1f3a93", None),
    "srm": ("#c0392b", "9,5"),
    "pairwise": ("#1e8449", "9,3,2,3"),
    "helstrom": ("#7d3c98", "2,4"),
    "oracle_primal": ("#666666", "1,3"),
    "oracle_dual": ("#666666", "6,3"),
}


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def render_svg(theta: np.ndarray, series: dict[str, np.ndarray], title: str = "") -> str:
    """Render one line per series over the theta grid; returns the SVG text."""
    theta = np.asarray(theta, dtype=np.float64)
    x_lo, x_hi = float(theta.min()), float(theta.max())
    values = np.concatenate([np.asarray(v, dtype=np.float64) for v in series.values()])
    y_lo = min(0.0, float(values.min()))
    y_hi = max(1.0, float(values.max()))
    pad = 0.02 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def sx(x: float) -> float:
        return _MARGIN_L + plot_w * (x - x_lo) / (x_hi - x_lo)

    def sy(y: float) -> float:
        return _MARGIN_T + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]
    if title:
        out.append(
            f'<text x="{_WIDTH / 2:.1f}" y="16" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{title}</text>'
        )
    for tx in _ticks(x_lo, x_hi):
        px = sx(tx)
        out.append(
            f'<line x1="{px:.2f}" y1="{_MARGIN_T + plot_h}" x2="{px:.2f}" '
            f'y2="{_MARGIN_T + plot_h + 5}" stroke="#333"/>'
        )
        out.append(
            f'<text x="{px:.2f}" y="{_MARGIN_T + plot_h + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{tx:.3g}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        py = sy(ty)
        out.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{py:.2f}" x2="{_MARGIN_L}" y2="{py:.2f}" stroke="#333"/>'
        )
        out.append(
            f'<text x="{_MARGIN_L - 9}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{ty:.3g}</text>'
        )
    out.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.1f}" y="{_HEIGHT - 10}" text-anchor="middle" '
        'font-family="sans-serif" font-size="12">theta (rad)</text>'
    )
    out.append(
        f'<text x="16" y="{_MARGIN_T + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 16 {_MARGIN_T + plot_h / 2:.1f})">success probability</text>'
    )

    legend_y = _MARGIN_T + 16
    for name, vals in series.items():
        color, dash = _STYLES.get(name, ("#000000", None))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        points = " ".join(
            f"{sx(float(t)):.2f},{sy(float(v)):.2f}" for t, v in zip(theta, vals)
        )
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.6"{dash_attr} '
            f'points="{points}"/>'
        )
        lx = _MARGIN_L + plot_w + 12
        out.append(
            f'<line x1="{lx}" y1="{legend_y - 4}" x2="{lx + 28}" y2="{legend_y - 4}" '
            f'stroke="{color}" stroke-width="1.6"{dash_attr}/>'
        )
        out.append(
            f'<text x="{lx + 34}" y="{legend_y}" font-family="sans-serif" '
            f'font-size="11">{name}</text>'
        )
        legend_y += 18
    out.append("</svg>")
    return "\n".join(out) + "\n"

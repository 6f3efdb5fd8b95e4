"""Self-contained SVG renderers (no plotting dependency).

All renderers are deterministic: identical inputs produce identical
bytes, and no timestamps or environment-dependent content is emitted.
Numeric CSV/JSON companions carry the underlying data; these pictures
are for quick inspection.
"""

from __future__ import annotations

import math
from typing import Sequence

from .measures import PolarPoint
from .sweep import PhaseGrid

PHASE_COLORS = {
    "Nihilism": "#bdbdbd",
    "Atomism": "#4472c4",
    "Mixism": "#70ad47",
    "Mobism": "#e15759",
}

CASE_COLORS = (
    "#4472c4", "#e15759", "#70ad47", "#ffbf00",
    "#9467bd", "#17becf", "#e377c2", "#8c564b",
)

RADAR_AXES = ("mu_I", "var_I", "mu_L", "var_L", "mu_LR", "var_LR", "mu_S", "var_S", "m_mix")


def _f(x: float) -> str:
    return f"{x:.2f}"


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def render_phase_svg(grid: PhaseGrid) -> str:
    """Phase diagram: one colored cell per mesh point, g across, d up."""
    if not grid.points:
        raise ValueError("cannot render an empty grid")
    size, margin = 440, 60
    cell = size * 0.1

    def x(g: float) -> float:
        return margin + g * size

    def y(d: float) -> float:
        return margin + (1.0 - d) * size

    body = ['<rect width="100%" height="100%" fill="white"/>']
    for p in grid.points:
        color = PHASE_COLORS.get(p.phase, "#000000")
        body.append(
            f'<rect x="{_f(x(p.g) - cell / 2)}" y="{_f(y(p.d) - cell / 2)}" '
            f'width="{_f(cell)}" height="{_f(cell)}" fill="{color}">'
            f"<title>g={p.g} d={p.d} {p.phase}</title></rect>"
        )
    body.append(
        f'<rect x="{_f(margin - cell / 2)}" y="{_f(margin - cell / 2)}" '
        f'width="{_f(size + cell)}" height="{_f(size + cell)}" fill="none" stroke="black"/>'
    )
    for k in range(6):
        v = k / 5.0
        body.append(
            f'<text x="{_f(x(v))}" y="{_f(margin + size + cell / 2 + 18)}" '
            f'font-size="12" text-anchor="middle">{v:.1f}</text>'
        )
        body.append(
            f'<text x="{_f(margin - cell / 2 - 8)}" y="{_f(y(v) + 4)}" '
            f'font-size="12" text-anchor="end">{v:.1f}</text>'
        )
    body.append(
        f'<text x="{_f(margin + size / 2)}" y="{_f(margin + size + cell / 2 + 40)}" '
        f'font-size="14" text-anchor="middle">generation rate g</text>'
    )
    body.append(
        f'<text x="16" y="{_f(margin + size / 2)}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 16 {_f(margin + size / 2)})">disappearance rate d</text>'
    )
    lx = margin + size + cell / 2 + 20
    for idx, (phase, color) in enumerate(PHASE_COLORS.items()):
        ly = margin + idx * 26
        body.append(f'<rect x="{_f(lx)}" y="{_f(ly)}" width="16" height="16" fill="{color}"/>')
        body.append(f'<text x="{_f(lx + 22)}" y="{_f(ly + 13)}" font-size="13">{phase}</text>')
    return _svg(int(margin * 2 + size + 160), int(margin * 2 + size), body)


def render_trajectory_svg(points: Sequence[PolarPoint]) -> str:
    """Quarter-plane trajectory: x = r*cos(theta), y = r*sin(theta)."""
    if not points:
        raise ValueError("cannot render an empty trajectory")
    size, margin = 420, 50
    r_max = max(p.r for p in points)
    scale = size / r_max if r_max > 0 else 1.0
    ox, oy = margin, margin + size  # origin bottom-left

    def xy(p: PolarPoint) -> tuple[float, float]:
        return ox + p.r * math.cos(p.theta) * scale, oy - p.r * math.sin(p.theta) * scale

    body = ['<rect width="100%" height="100%" fill="white"/>']
    for frac in (0.25, 0.5, 0.75, 1.0):
        rr = size * frac
        body.append(
            f'<path d="M {_f(ox + rr)} {_f(oy)} A {_f(rr)} {_f(rr)} 0 0 0 {_f(ox)} {_f(oy - rr)}" '
            f'fill="none" stroke="#cccccc"/>'
        )
        label = r_max * frac
        body.append(
            f'<text x="{_f(ox + rr)}" y="{_f(oy + 16)}" font-size="11" '
            f'text-anchor="middle">{label:.3g}</text>'
        )
    for deg in (0, 30, 45, 60, 90):
        a = math.radians(deg)
        body.append(
            f'<line x1="{_f(ox)}" y1="{_f(oy)}" x2="{_f(ox + size * math.cos(a))}" '
            f'y2="{_f(oy - size * math.sin(a))}" stroke="#dddddd"/>'
        )
        body.append(
            f'<text x="{_f(ox + (size + 14) * math.cos(a))}" '
            f'y="{_f(oy - (size + 14) * math.sin(a) + 4)}" font-size="11" '
            f'text-anchor="middle">{deg}&#176;</text>'
        )
    coords = " ".join(f"{_f(px)},{_f(py)}" for px, py in (xy(p) for p in points))
    body.append(f'<polyline points="{coords}" fill="none" stroke="#4472c4" stroke-width="1.2"/>')
    sx, sy = xy(points[0])
    ex, ey = xy(points[-1])
    body.append(f'<circle cx="{_f(sx)}" cy="{_f(sy)}" r="4" fill="#70ad47"><title>start</title></circle>')
    body.append(f'<circle cx="{_f(ex)}" cy="{_f(ey)}" r="4" fill="#e15759"><title>end</title></circle>')
    body.append(
        f'<text x="{_f(ox + size / 2)}" y="{_f(oy + 36)}" font-size="13" '
        f'text-anchor="middle">r (declination rays in degrees)</text>'
    )
    return _svg(int(margin * 2 + size + 20), int(margin * 2 + size), body)


def render_radar_svg(cases: Sequence[tuple[str, Sequence[float]]]) -> str:
    """Radar chart over the nine series quantities; values already in [0,1]."""
    if not cases:
        raise ValueError("cannot render an empty radar chart")
    k = len(RADAR_AXES)
    cx, cy, radius = 260.0, 240.0, 170.0

    def vertex(axis: int, v: float) -> tuple[float, float]:
        a = -math.pi / 2 + axis * 2 * math.pi / k
        return cx + v * radius * math.cos(a), cy + v * radius * math.sin(a)

    body = ['<rect width="100%" height="100%" fill="white"/>']
    for frac in (0.25, 0.5, 0.75, 1.0):
        ring = " ".join(f"{_f(px)},{_f(py)}" for px, py in (vertex(i, frac) for i in range(k)))
        body.append(f'<polygon points="{ring}" fill="none" stroke="#dddddd"/>')
    for i, name in enumerate(RADAR_AXES):
        px, py = vertex(i, 1.0)
        body.append(f'<line x1="{_f(cx)}" y1="{_f(cy)}" x2="{_f(px)}" y2="{_f(py)}" stroke="#cccccc"/>')
        lx, ly = vertex(i, 1.16)
        body.append(f'<text x="{_f(lx)}" y="{_f(ly + 4)}" font-size="12" text-anchor="middle">{name}</text>')
    for idx, (label, values) in enumerate(cases):
        if len(values) != k:
            raise ValueError(f"case {label!r} must have {k} values, got {len(values)}")
        color = CASE_COLORS[idx % len(CASE_COLORS)]
        poly = " ".join(
            f"{_f(px)},{_f(py)}" for px, py in (vertex(i, v) for i, v in enumerate(values))
        )
        body.append(
            f'<polygon points="{poly}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        ly = 480 + idx * 22
        body.append(f'<rect x="40" y="{ly - 12}" width="14" height="14" fill="{color}"/>')
        body.append(f'<text x="60" y="{ly}" font-size="13">{label}</text>')
    return _svg(520, 480 + len(cases) * 22 + 16, body)

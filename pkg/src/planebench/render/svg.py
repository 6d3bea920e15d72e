"""Deterministic SVG 1.1 output for scenes.

The scene lives on the unit canvas with y upward; the document uses a
512-unit viewBox with y downward. Every drawable element is emitted on its
own line inside <g id="objects">, labels inside <g id="labels">, so the
rasterizer (and tests) can parse the document back without a full SVG
implementation.
"""
from __future__ import annotations

import math
import random

from .. import geom
from ..geom import Circle, LineLike, OpenCurve, Oval, Point, Polygon
from ..predicates import curve_polyline
from ..scene import Scene
from ..styles import PALETTE, DEFAULT_STYLE, StrokeStyle
from .visibility import VisibilityThresholds, place_labels

VIEW = 512.0
MARGIN = 0.02
POINT_RADIUS = 3.5
FONT_SIZE = 17

# Occasional non-black strokes keep diagrams varied without hurting contrast.
_STYLE_COLORS = [
    PALETTE["black"],
    PALETTE["black"],
    PALETTE["black"],
    PALETTE["blue"],
    PALETTE["red"],
    PALETTE["green"],
    PALETTE["purple"],
]


class UnrenderableObjectError(Exception):
    pass


def _sx(x: float) -> float:
    return x * VIEW


def _sy(y: float) -> float:
    return (1.0 - y) * VIEW


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _rgb(color) -> str:
    r, g, b = color
    return f"rgb({r},{g},{b})"


def _dash(style: StrokeStyle) -> str:
    if style.pattern == "dashed":
        return f' stroke-dasharray="{style.width * 4:.1f} {style.width * 3:.1f}"'
    if style.pattern == "dotted":
        return f' stroke-dasharray="{style.width:.1f} {style.width * 2.5:.1f}"'
    return ""


def _extent(obj) -> list[tuple[float, float]]:
    if isinstance(obj, Point):
        return [(obj.x, obj.y)]
    if isinstance(obj, LineLike):
        if obj.kind == "segment":
            return [(obj.p1.x, obj.p1.y), (obj.p2.x, obj.p2.y)]
        return []  # clipped to the canvas anyway
    if isinstance(obj, Circle):
        c, r = obj.center, obj.radius
        return [(c.x - r, c.y - r), (c.x + r, c.y + r)]
    if isinstance(obj, Oval):
        m = max(obj.rx, obj.ry)
        return [(obj.center.x - m, obj.center.y - m), (obj.center.x + m, obj.center.y + m)]
    if isinstance(obj, OpenCurve):
        return [(p.x, p.y) for p in curve_polyline(obj)]
    if isinstance(obj, Polygon):
        return [(v.x, v.y) for v in obj.vertices]
    raise UnrenderableObjectError(f"unknown primitive kind {type(obj).__name__}")


def _clip_straight(obj: LineLike) -> tuple[Point, Point] | None:
    """Clip a ray or infinite line to the margin box."""
    lo, hi = MARGIN, 1.0 - MARGIN
    ux, uy = obj.direction
    x0, y0 = obj.p1.x, obj.p1.y
    t_lo = -math.inf if obj.kind == "line" else 0.0
    t_hi = math.inf
    for p, d, lo_b, hi_b in ((x0, ux, lo, hi), (y0, uy, lo, hi)):
        if abs(d) < 1e-12:
            if not (lo_b <= p <= hi_b):
                return None
            continue
        t1, t2 = (lo_b - p) / d, (hi_b - p) / d
        if t1 > t2:
            t1, t2 = t2, t1
        t_lo, t_hi = max(t_lo, t1), min(t_hi, t2)
    if t_lo >= t_hi:
        return None
    return (
        Point(x0 + t_lo * ux, y0 + t_lo * uy),
        Point(x0 + t_hi * ux, y0 + t_hi * uy),
    )


def _style_for(obj, index: int, rng: random.Random) -> StrokeStyle:
    style = getattr(obj, "style", None)
    if style is not None:
        return style
    color = _STYLE_COLORS[rng.randrange(len(_STYLE_COLORS))]
    return StrokeStyle(color=color, width=DEFAULT_STYLE.width)


def _element(obj, style: StrokeStyle) -> str:
    stroke = f'stroke="{_rgb(style.color)}" stroke-width="{style.width:.1f}"'
    fill = _rgb(style.fill) if style.fill is not None else "none"
    if isinstance(obj, Point):
        return (
            f'<circle cx="{_fmt(_sx(obj.x))}" cy="{_fmt(_sy(obj.y))}" '
            f'r="{POINT_RADIUS}" fill="{_rgb(style.color)}"/>'
        )
    if isinstance(obj, LineLike):
        if obj.kind == "segment":
            a, b = obj.p1, obj.p2
        else:
            clipped = _clip_straight(obj)
            if clipped is None:
                raise UnrenderableObjectError(f"{obj.kind} {obj.id} misses the canvas")
            a, b = clipped
        return (
            f'<line x1="{_fmt(_sx(a.x))}" y1="{_fmt(_sy(a.y))}" '
            f'x2="{_fmt(_sx(b.x))}" y2="{_fmt(_sy(b.y))}" {stroke}{_dash(style)}/>'
        )
    if isinstance(obj, Circle):
        return (
            f'<circle cx="{_fmt(_sx(obj.center.x))}" cy="{_fmt(_sy(obj.center.y))}" '
            f'r="{_fmt(obj.radius * VIEW)}" fill="{fill}" {stroke}{_dash(style)}/>'
        )
    if isinstance(obj, Oval):
        cx, cy = _sx(obj.center.x), _sy(obj.center.y)
        deg = -math.degrees(obj.rotation)
        return (
            f'<ellipse cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(obj.rx * VIEW)}" '
            f'ry="{_fmt(obj.ry * VIEW)}" transform="rotate({deg:.2f} {_fmt(cx)} {_fmt(cy)})" '
            f'fill="{fill}" {stroke}{_dash(style)}/>'
        )
    if isinstance(obj, OpenCurve):
        pts = curve_polyline(obj)
        coords = " ".join(f"{_fmt(_sx(p.x))},{_fmt(_sy(p.y))}" for p in pts)
        return f'<polyline points="{coords}" fill="none" {stroke}{_dash(style)}/>'
    if isinstance(obj, Polygon):
        coords = " ".join(f"{_fmt(_sx(v.x))},{_fmt(_sy(v.y))}" for v in obj.vertices)
        return f'<polygon points="{coords}" fill="{fill}" {stroke}{_dash(style)}/>'
    raise UnrenderableObjectError(f"unknown primitive kind {type(obj).__name__}")


def render_vector(
    scene: Scene,
    style_seed: int = 0,
    *,
    include_labels: bool = True,
    thresholds: VisibilityThresholds | None = None,
) -> str:
    """Serialize the scene to SVG; byte-identical for identical inputs."""
    for obj in scene:
        for x, y in _extent(obj):
            if not (MARGIN <= x <= 1 - MARGIN and MARGIN <= y <= 1 - MARGIN):
                raise UnrenderableObjectError(
                    f"{type(obj).__name__} {obj.id} extends outside the canvas margins"
                )
    rng = random.Random(f"style:{style_seed}")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{int(VIEW)}" height="{int(VIEW)}" viewBox="0 0 {int(VIEW)} {int(VIEW)}">',
        f'<rect width="{int(VIEW)}" height="{int(VIEW)}" fill="rgb(255,255,255)"/>',
        '<g id="objects">',
    ]
    label_colors: dict[str, tuple[int, int, int]] = {}
    for index, obj in enumerate(scene):
        style = _style_for(obj, index, rng)
        label_colors[obj.id] = style.color
        lines.append(_element(obj, style))
    lines.append("</g>")
    lines.append('<g id="labels">')
    if include_labels:
        for obj_id, pos in place_labels(scene, thresholds).items():
            if pos is None:
                continue
            obj = scene.by_id(obj_id)
            color = label_colors.get(obj_id, (0, 0, 0))
            lines.append(
                f'<text x="{_fmt(_sx(pos.x))}" y="{_fmt(_sy(pos.y))}" '
                f'font-family="sans-serif" font-size="{FONT_SIZE}" '
                f'text-anchor="middle" dominant-baseline="middle" '
                f'fill="{_rgb(color)}">{obj.label}</text>'
            )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

"""Rasterization of the SVG documents produced by :mod:`planebench.render.svg`.

Parses the fixed element grammar that render_vector emits (one element per
line, fixed attribute order) and draws with Pillow at 2x supersampling,
then box-downsamples. Identical inputs give identical pixel buffers and
identical PNG bytes.
"""
from __future__ import annotations

import io
import math
import re
from dataclasses import dataclass

from PIL import Image, ImageDraw, ImageFont

SUPERSAMPLE = 2
_BASE = 512.0


class ResolutionTooSmallError(Exception):
    pass


class OutOfBoundsError(Exception):
    pass


_TAG_RE = re.compile(r"<(circle|line|ellipse|polyline|polygon|text|rect)\b([^>]*?)/?>")
_ATTR_RE = re.compile(r'([\w-]+)="([^"]*)"')
_TEXT_RE = re.compile(r"<text\b([^>]*)>([^<]*)</text>")


def parse_svg_elements(doc: str) -> list[dict]:
    """Flat element list with attribute dicts; <text> gets a 'content' key."""
    out = []
    for match in _TAG_RE.finditer(doc):
        tag, attrs = match.group(1), dict(_ATTR_RE.findall(match.group(2)))
        if tag == "text":
            continue
        out.append({"tag": tag, **attrs})
    for match in _TEXT_RE.finditer(doc):
        attrs = dict(_ATTR_RE.findall(match.group(1)))
        out.append({"tag": "text", "content": match.group(2), **attrs})
    return out


def _rgb(spec: str) -> tuple[int, int, int]:
    m = re.match(r"rgb\((\d+),(\d+),(\d+)\)", spec)
    if not m:
        return (0, 0, 0)
    return tuple(int(v) for v in m.groups())  # type: ignore[return-value]


def _dash_spans(points: list[tuple[float, float]], on: float, off: float):
    """Split a polyline into pen-down spans of length `on` separated by `off`."""
    spans = []
    pen = True
    budget = on
    current = [points[0]]
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        seg_len = math.hypot(x2 - x1, y2 - y1)
        pos = 0.0
        while seg_len - pos > 1e-9:
            step = min(budget, seg_len - pos)
            t0 = (pos + step) / seg_len
            nx, ny = x1 + (x2 - x1) * t0, y1 + (y2 - y1) * t0
            if pen:
                current.append((nx, ny))
            pos += step
            budget -= step
            if budget <= 1e-9:
                if pen and len(current) > 1:
                    spans.append(current)
                pen = not pen
                budget = on if pen else off
                current = [(nx, ny)]
    if pen and len(current) > 1:
        spans.append(current)
    return spans


def _draw_polyline(draw, points, color, width, dasharray, close=False):
    pts = list(points)
    if close and pts:
        pts.append(pts[0])
    if len(pts) < 2:
        return
    if dasharray:
        on, off = dasharray
        for span in _dash_spans(pts, on, off):
            draw.line(span, fill=color, width=max(1, round(width)), joint="curve")
    else:
        draw.line(pts, fill=color, width=max(1, round(width)), joint="curve")


def _parse_dash(spec: str | None) -> tuple[float, float] | None:
    if not spec:
        return None
    parts = [float(v) for v in spec.split()]
    return (parts[0], parts[1] if len(parts) > 1 else parts[0])


def rasterize(vector_document: str, resolution: int = 512) -> Image.Image:
    """Render an SVG document from render_vector to an RGB image."""
    if resolution < 64:
        raise ResolutionTooSmallError(f"resolution {resolution} below 64x64 minimum")
    scale = resolution * SUPERSAMPLE / _BASE
    size = resolution * SUPERSAMPLE
    img = Image.new("RGB", (size, size), (255, 255, 255))
    draw = ImageDraw.Draw(img)
    font = ImageFont.load_default(size=17 * scale)

    for el in parse_svg_elements(vector_document):
        tag = el["tag"]
        if tag == "rect":
            draw.rectangle(
                [0, 0, size - 1, size - 1], fill=_rgb(el.get("fill", "rgb(255,255,255)"))
            )
            continue
        stroke = _rgb(el.get("stroke", "rgb(0,0,0)"))
        width = float(el.get("stroke-width", 0)) * scale
        dash = _parse_dash(el.get("stroke-dasharray"))
        if dash:
            dash = (dash[0] * scale, dash[1] * scale)
        fill = el.get("fill", "none")
        if tag == "circle":
            cx, cy, r = (float(el[k]) * scale for k in ("cx", "cy", "r"))
            box = [cx - r, cy - r, cx + r, cy + r]
            if "stroke" not in el:
                draw.ellipse(box, fill=_rgb(fill))
                continue
            if fill != "none":
                draw.ellipse(box, fill=_rgb(fill))
            pts = [
                (cx + r * math.cos(2 * math.pi * k / 180), cy + r * math.sin(2 * math.pi * k / 180))
                for k in range(181)
            ]
            _draw_polyline(draw, pts, stroke, width, dash)
        elif tag == "ellipse":
            cx, cy = float(el["cx"]) * scale, float(el["cy"]) * scale
            rx, ry = float(el["rx"]) * scale, float(el["ry"]) * scale
            m = re.match(r"rotate\((-?[\d.]+)", el.get("transform", ""))
            theta = math.radians(float(m.group(1))) if m else 0.0
            ct, st = math.cos(theta), math.sin(theta)
            pts = []
            for k in range(181):
                t = 2 * math.pi * k / 180
                ex, ey = rx * math.cos(t), ry * math.sin(t)
                pts.append((cx + ex * ct - ey * st, cy + ex * st + ey * ct))
            if fill != "none":
                draw.polygon(pts, fill=_rgb(fill))
            _draw_polyline(draw, pts, stroke, width, dash)
        elif tag == "line":
            pts = [
                (float(el["x1"]) * scale, float(el["y1"]) * scale),
                (float(el["x2"]) * scale, float(el["y2"]) * scale),
            ]
            _draw_polyline(draw, pts, stroke, width, dash)
        elif tag in ("polyline", "polygon"):
            pts = [
                tuple(float(v) * scale for v in pair.split(","))
                for pair in el["points"].split()
            ]
            if tag == "polygon" and fill != "none":
                draw.polygon(pts, fill=_rgb(fill))
            _draw_polyline(draw, pts, stroke, width, dash, close=(tag == "polygon"))
        elif tag == "text":
            x, y = float(el["x"]) * scale, float(el["y"]) * scale
            draw.text(
                (x, y), el["content"], fill=_rgb(el.get("fill", "rgb(0,0,0)")),
                font=font, anchor="mm",
            )
    return img.resize((resolution, resolution), Image.BOX)


def to_png_bytes(image: Image.Image) -> bytes:
    buf = io.BytesIO()
    image.save(buf, format="PNG")
    return buf.getvalue()


@dataclass(frozen=True)
class LabelPlacement:
    """One text item to scribe, in pixel coordinates of the target image."""

    text: str
    x: float
    y: float
    size: int = 17
    color: tuple[int, int, int] = (0, 0, 0)


def scribe_labels(image: Image.Image, placements: list[LabelPlacement]) -> Image.Image:
    """Draw labels at exact pixel positions; pixels outside the glyph boxes
    are left untouched. Raises OutOfBoundsError for placements off the image."""
    out = image.copy()
    draw = ImageDraw.Draw(out)
    for p in placements:
        if not (0 <= p.x < image.width and 0 <= p.y < image.height):
            raise OutOfBoundsError(f"label {p.text!r} at ({p.x}, {p.y}) is off the image")
        font = ImageFont.load_default(size=p.size)
        draw.text((p.x, p.y), p.text, fill=p.color, font=font, anchor="mm")
    return out


def glyph_boxes(
    image: Image.Image, placements: list[LabelPlacement]
) -> list[tuple[int, int, int, int]]:
    """Bounding boxes the scribe is allowed to touch (for locality checks)."""
    draw = ImageDraw.Draw(image.copy())
    boxes = []
    for p in placements:
        font = ImageFont.load_default(size=p.size)
        boxes.append(draw.textbbox((p.x, p.y), p.text, font=font, anchor="mm"))
    return boxes

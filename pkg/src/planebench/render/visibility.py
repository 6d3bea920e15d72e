"""Legibility constraints on scenes and deterministic label placement.

Scenes that fail these checks are rejected upstream by the construction
engine, so every accepted diagram renders with well-separated points,
non-degenerate segments, and labels clear of foreign ink.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .. import geom
from ..geom import Circle, LineLike, OpenCurve, Oval, Point, Polygon
from ..predicates import boundary_points, curve_polyline
from ..scene import Scene


@dataclass(frozen=True)
class VisibilityThresholds:
    min_point_separation: float = 0.03
    min_segment_length: float = 0.05
    min_label_clearance: float = 0.02

    def __post_init__(self) -> None:
        if min(self.min_point_separation, self.min_segment_length,
               self.min_label_clearance) <= 0:
            raise ValueError("visibility thresholds must be strictly positive")


@dataclass(frozen=True)
class Violation:
    kind: str  # "point-separation" | "segment-length" | "label-clearance"
    object_ids: tuple[str, ...]
    detail: str


# Offsets tried in order around a label anchor, in canvas units before scaling.
_LABEL_OFFSETS = (
    (1, 1), (1, -1), (-1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1),
)
_LABEL_DISTANCE = 0.028


def _label_anchor(obj) -> Point | None:
    if isinstance(obj, Point):
        return obj
    if isinstance(obj, LineLike):
        return geom.midpoint(obj.p1, obj.p2)
    if isinstance(obj, Circle):
        return Point(obj.center.x, obj.center.y + obj.radius)
    if isinstance(obj, Oval):
        top = max(boundary_points(obj, 32), key=lambda p: p.y)
        return top
    if isinstance(obj, OpenCurve):
        pts = curve_polyline(obj)
        return pts[len(pts) // 2]
    if isinstance(obj, Polygon):
        xs = [v.x for v in obj.vertices]
        ys = [v.y for v in obj.vertices]
        return Point(sum(xs) / len(xs), sum(ys) / len(ys))
    return None


def _ink_distance(pos: Point, obj) -> float:
    """Distance from a candidate label position to an object's drawn ink."""
    if isinstance(obj, Point):
        return geom.distance(pos, obj)
    if isinstance(obj, LineLike):
        if obj.kind == "segment":
            return geom.point_line_distance(pos, obj)
        # Rays and lines are clipped at render time but extend far; use the
        # unclipped support as the conservative estimate.
        if obj.kind == "ray":
            return geom.point_line_distance(pos, obj)
        return geom.point_infinite_line_distance(pos, obj)
    if isinstance(obj, Circle):
        return abs(geom.distance(pos, obj.center) - obj.radius)
    if isinstance(obj, (Oval, OpenCurve, Polygon)):
        pts = boundary_points(obj, 48)
        return min(geom.distance(pos, q) for q in pts)
    return math.inf


def place_labels(
    scene: Scene, thresholds: VisibilityThresholds | None = None
) -> dict[str, Point | None]:
    """Greedy, deterministic placement: first clearance-satisfying offset of
    eight candidates wins; None marks an unplaceable label."""
    thresholds = thresholds or VisibilityThresholds()
    placements: dict[str, Point | None] = {}
    placed_positions: list[Point] = []
    labeled = [obj for obj in scene if obj.label is not None]
    for obj in labeled:
        anchor = _label_anchor(obj)
        chosen = None
        for ox, oy in _LABEL_OFFSETS:
            cand = Point(
                anchor.x + ox * _LABEL_DISTANCE, anchor.y + oy * _LABEL_DISTANCE
            )
            if not (0.02 <= cand.x <= 0.98 and 0.02 <= cand.y <= 0.98):
                continue
            ok = True
            for other in scene:
                if other.id == obj.id:
                    continue
                if _ink_distance(cand, other) < thresholds.min_label_clearance:
                    ok = False
                    break
            if ok:
                for prev in placed_positions:
                    if geom.distance(cand, prev) < 2.2 * thresholds.min_label_clearance:
                        ok = False
                        break
            if ok:
                chosen = cand
                break
        placements[obj.id] = chosen
        if chosen is not None:
            placed_positions.append(chosen)
    return placements


def check_visibility(
    scene: Scene, thresholds: VisibilityThresholds | None = None
) -> list[Violation]:
    """Empty list iff the scene is legible under the given thresholds."""
    thresholds = thresholds or VisibilityThresholds()
    violations: list[Violation] = []
    points = scene.points()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = geom.distance(points[i], points[j])
            if d < thresholds.min_point_separation:
                violations.append(
                    Violation(
                        "point-separation",
                        (points[i].id, points[j].id),
                        f"distance {d:.4f} < {thresholds.min_point_separation}",
                    )
                )
    for obj in scene:
        if isinstance(obj, LineLike) and obj.kind == "segment":
            if obj.length < thresholds.min_segment_length:
                violations.append(
                    Violation(
                        "segment-length",
                        (obj.id,),
                        f"length {obj.length:.4f} < {thresholds.min_segment_length}",
                    )
                )
        elif isinstance(obj, Polygon):
            for a, b in obj.edges:
                d = geom.distance(a, b)
                if d < thresholds.min_segment_length:
                    violations.append(
                        Violation(
                            "segment-length",
                            (obj.id,),
                            f"edge length {d:.4f} < {thresholds.min_segment_length}",
                        )
                    )
    for obj_id, pos in place_labels(scene, thresholds).items():
        if pos is None:
            violations.append(
                Violation("label-clearance", (obj_id,), "no clear label slot")
            )
    return violations

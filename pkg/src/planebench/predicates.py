"""Boolean predicates over primitives, and the binding expressions that make
statement truth machine-checkable.

The predicate vocabulary is the closed, documented set below. The first
sixteen kinds cover the geometric relations statements talk about; the last
five (`is_kind`, `center_of`, `endpoint_of`, `vertex_of`, `contains`) are
structural helpers so that sentences about objects themselves ("ABC is a
triangle", "O is the center") stay checkable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import geom
from .geom import (
    Circle,
    LineLike,
    OpenCurve,
    Oval,
    Point,
    Polygon,
    Primitive,
    Tolerance,
    DEFAULT_TOL,
)
from .scene import Scene, SceneError

PREDICATE_KINDS = (
    "parallel",
    "orthogonal",
    "tangent",
    "intersects",
    "point_on",
    "point_inside",
    "convex",
    "congruent",
    "similar",
    "collinear",
    "equal_length",
    "equal_angle",
    "same_side",
    "between",
    "adjacent",
    "connected",
    "is_kind",
    "center_of",
    "endpoint_of",
    "vertex_of",
    "contains",
)


class PredicateError(Exception):
    """Arity or argument-kind mismatch."""


@dataclass(frozen=True)
class AngleArm:
    """The angle at ``vertex`` swept between the two arm points."""

    arm_a: Point
    vertex: Point
    arm_b: Point

    def measure(self) -> float:
        return geom.angle_between(self.vertex, self.arm_a, self.arm_b)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise PredicateError(msg)


def _as_linelikes(args, n: int, kind: str) -> list[LineLike]:
    _need(len(args) == n and all(isinstance(a, LineLike) for a in args),
          f"{kind} expects {n} line-like arguments")
    return list(args)


def _dir_cross(l1: LineLike, l2: LineLike) -> float:
    (ux, uy), (vx, vy) = l1.direction, l2.direction
    return geom.cross(ux, uy, vx, vy)


def _dir_dot(l1: LineLike, l2: LineLike) -> float:
    (ux, uy), (vx, vy) = l1.direction, l2.direction
    return geom.dot(ux, uy, vx, vy)


# --------------------------------------------------------------------------
# boundary sampling, used by adjacency/containment checks


def boundary_points(obj: Primitive, n: int = 64) -> list[Point]:
    if isinstance(obj, Point):
        return [obj]
    if isinstance(obj, LineLike):
        return [
            Point(
                obj.p1.x + (obj.p2.x - obj.p1.x) * i / (n - 1),
                obj.p1.y + (obj.p2.y - obj.p1.y) * i / (n - 1),
            )
            for i in range(n)
        ]
    if isinstance(obj, Circle):
        return [
            Point(
                obj.center.x + obj.radius * math.cos(2 * math.pi * i / n),
                obj.center.y + obj.radius * math.sin(2 * math.pi * i / n),
            )
            for i in range(n)
        ]
    if isinstance(obj, Oval):
        ct, st = math.cos(obj.rotation), math.sin(obj.rotation)
        out = []
        for i in range(n):
            t = 2 * math.pi * i / n
            ex, ey = obj.rx * math.cos(t), obj.ry * math.sin(t)
            out.append(Point(obj.center.x + ex * ct - ey * st, obj.center.y + ex * st + ey * ct))
        return out
    if isinstance(obj, OpenCurve):
        pts = curve_polyline(obj)
        if len(pts) >= n:
            return pts
        return pts
    if isinstance(obj, Polygon):
        out = []
        per_edge = max(2, n // len(obj.vertices))
        for a, b in obj.edges:
            for i in range(per_edge):
                t = i / per_edge
                out.append(Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t))
        return out
    raise PredicateError(f"cannot sample boundary of {type(obj).__name__}")


def curve_polyline(curve: OpenCurve, samples_per_span: int = 16) -> list[Point]:
    """Flatten an open curve to a dense polyline (Catmull-Rom for smooth)."""
    pts = list(curve.points)
    if curve.interpolation == "polyline":
        return pts
    if len(pts) == 2:
        return pts
    padded = [pts[0]] + pts + [pts[-1]]
    out: list[Point] = []
    for i in range(1, len(padded) - 2):
        p0, p1, p2, p3 = padded[i - 1], padded[i], padded[i + 1], padded[i + 2]
        for j in range(samples_per_span):
            t = j / samples_per_span
            t2, t3 = t * t, t * t * t
            x = 0.5 * (
                2 * p1.x
                + (-p0.x + p2.x) * t
                + (2 * p0.x - 5 * p1.x + 4 * p2.x - p3.x) * t2
                + (-p0.x + 3 * p1.x - 3 * p2.x + p3.x) * t3
            )
            y = 0.5 * (
                2 * p1.y
                + (-p0.y + p2.y) * t
                + (2 * p0.y - 5 * p1.y + 4 * p2.y - p3.y) * t2
                + (-p0.y + 3 * p1.y - 3 * p2.y + p3.y) * t3
            )
            out.append(Point(x, y))
    out.append(pts[-1])
    return out


def object_distance(a: Primitive, b: Primitive) -> float:
    """Approximate minimum distance between two primitives' boundaries."""
    if isinstance(a, Point) and isinstance(b, Point):
        return geom.distance(a, b)
    if isinstance(a, Point):
        return min(geom.distance(a, q) for q in boundary_points(b))
    if isinstance(b, Point):
        return min(geom.distance(p, q) for p in boundary_points(a) for q in [b])
    pa, pb = boundary_points(a), boundary_points(b)
    return min(geom.distance(p, q) for p in pa for q in pb)


# --------------------------------------------------------------------------
# individual predicates


def _parallel(args, tol: Tolerance) -> bool:
    l1, l2 = _as_linelikes(args, 2, "parallel")
    return abs(_dir_cross(l1, l2)) <= math.sin(tol.angular_eps) + tol.eps


def _orthogonal(args, tol: Tolerance) -> bool:
    l1, l2 = _as_linelikes(args, 2, "orthogonal")
    return abs(_dir_dot(l1, l2)) <= math.sin(tol.angular_eps) + tol.eps


def _tangent(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "tangent expects 2 arguments")
    a, b = args
    if isinstance(a, Circle) and isinstance(b, LineLike):
        a, b = b, a
    if isinstance(a, LineLike) and isinstance(b, Circle):
        if abs(geom.point_infinite_line_distance(b.center, a)) > b.radius + tol.eps:
            return False
        if abs(geom.point_infinite_line_distance(b.center, a) - b.radius) > tol.eps:
            return False
        # For segments and rays the touch point must lie on the extent.
        foot = geom.project_to_line(b.center, a)
        return geom.point_line_distance(foot, a) <= tol.eps
    if isinstance(a, Circle) and isinstance(b, Circle):
        d = geom.distance(a.center, b.center)
        return (
            abs(d - (a.radius + b.radius)) <= tol.eps
            or abs(d - abs(a.radius - b.radius)) <= tol.eps
        )
    raise PredicateError("tangent expects (line-like, circle) or (circle, circle)")


def _flatten_to_segments(obj: Primitive) -> list[LineLike]:
    if isinstance(obj, LineLike):
        return [obj]
    if isinstance(obj, Polygon):
        return [geom.segment(a, b) for a, b in obj.edges]
    if isinstance(obj, OpenCurve):
        pts = curve_polyline(obj)
        return [geom.segment(a, b) for a, b in zip(pts, pts[1:])]
    raise PredicateError(f"cannot flatten {type(obj).__name__} to segments")


def _extended_for_intersection(ln: LineLike) -> LineLike:
    """Segments stay as they are; rays/lines get stretched far out."""
    if ln.kind == "segment":
        return ln
    ux, uy = ln.direction
    far = 1e3
    p2 = Point(ln.p1.x + ux * far, ln.p1.y + uy * far)
    if ln.kind == "ray":
        return geom.segment(ln.p1, p2)
    p0 = Point(ln.p1.x - ux * far, ln.p1.y - uy * far)
    return geom.segment(p0, p2)


def _intersects(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "intersects expects 2 arguments")
    a, b = args
    if isinstance(a, Circle) and isinstance(b, Circle):
        d = geom.distance(a.center, b.center)
        return d <= a.radius + b.radius + tol.eps and d + tol.eps >= abs(a.radius - b.radius)
    if isinstance(a, Circle) or isinstance(b, Circle):
        circle = a if isinstance(a, Circle) else b
        other = b if isinstance(a, Circle) else a
        for seg in _flatten_to_segments(other):
            seg = _extended_for_intersection(seg)
            pts = geom.line_circle_intersection(geom.line(seg.p1, seg.p2), circle, tol)
            for p in pts:
                if geom.point_line_distance(p, seg) <= tol.eps:
                    return True
        return False
    segs_a = [_extended_for_intersection(s) for s in _flatten_to_segments(a)]
    segs_b = [_extended_for_intersection(s) for s in _flatten_to_segments(b)]
    return any(geom.segments_intersect(sa, sb, tol) for sa in segs_a for sb in segs_b)


def _point_on(args, tol: Tolerance) -> bool:
    _need(len(args) == 2 and isinstance(args[0], Point), "point_on expects (point, object)")
    p, obj = args
    if isinstance(obj, LineLike):
        return geom.point_line_distance(p, obj) <= tol.eps
    if isinstance(obj, Circle):
        return abs(geom.distance(p, obj.center) - obj.radius) <= tol.eps
    if isinstance(obj, Polygon):
        return any(
            geom.point_line_distance(p, geom.segment(a, b)) <= tol.eps for a, b in obj.edges
        )
    if isinstance(obj, OpenCurve):
        pts = curve_polyline(obj)
        return any(
            geom.point_line_distance(p, geom.segment(a, b)) <= tol.eps
            for a, b in zip(pts, pts[1:])
        )
    if isinstance(obj, Oval):
        # Normalized radial coordinate: 1 on the boundary.
        ct, st = math.cos(obj.rotation), math.sin(obj.rotation)
        dx, dy = p.x - obj.center.x, p.y - obj.center.y
        lx, ly = dx * ct + dy * st, -dx * st + dy * ct
        rho = math.hypot(lx / obj.rx, ly / obj.ry)
        return abs(rho - 1.0) <= tol.eps / min(obj.rx, obj.ry)
    raise PredicateError(f"point_on does not accept {type(obj).__name__}")


def point_in_polygon(p: Point, poly: Polygon) -> bool:
    """Even-odd rule; boundary points are not inside."""
    inside = False
    n = len(poly.vertices)
    for i in range(n):
        a, b = poly.vertices[i], poly.vertices[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
    return inside


def _point_inside(args, tol: Tolerance) -> bool:
    _need(len(args) == 2 and isinstance(args[0], Point), "point_inside expects (point, region)")
    p, obj = args
    if isinstance(obj, Circle):
        return geom.distance(p, obj.center) < obj.radius - tol.eps
    if isinstance(obj, Oval):
        ct, st = math.cos(obj.rotation), math.sin(obj.rotation)
        dx, dy = p.x - obj.center.x, p.y - obj.center.y
        lx, ly = dx * ct + dy * st, -dx * st + dy * ct
        return math.hypot(lx / obj.rx, ly / obj.ry) < 1.0 - tol.eps
    if isinstance(obj, Polygon):
        if _point_on((p, obj), tol):
            return False
        return point_in_polygon(p, obj)
    raise PredicateError(f"point_inside does not accept {type(obj).__name__}")


def polygon_is_convex(poly: Polygon, tol: Tolerance = DEFAULT_TOL) -> bool:
    n = len(poly.vertices)
    sign = 0
    for i in range(n):
        a, b, c = poly.vertices[i], poly.vertices[(i + 1) % n], poly.vertices[(i + 2) % n]
        cr = geom.cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y)
        if abs(cr) <= tol.eps:
            continue
        s = 1 if cr > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def _convex(args, tol: Tolerance) -> bool:
    _need(len(args) == 1 and isinstance(args[0], Polygon), "convex expects one polygon")
    return polygon_is_convex(args[0], tol)


def _poly_signature(poly: Polygon) -> tuple[list[float], list[float]]:
    """Side lengths and interior angles in vertex order."""
    v = poly.vertices
    n = len(v)
    sides = [geom.distance(v[i], v[(i + 1) % n]) for i in range(n)]
    angles = [geom.angle_between(v[i], v[i - 1], v[(i + 1) % n]) for i in range(n)]
    return sides, angles


def _signatures_match(
    a: Polygon, b: Polygon, tol: Tolerance, *, ratio: bool
) -> bool:
    if len(a.vertices) != len(b.vertices):
        return False
    sa, aa = _poly_signature(a)
    sb, ab = _poly_signature(b)
    n = len(sa)
    orderings = []
    for shift in range(n):
        orderings.append(([sb[(shift + i) % n] for i in range(n)],
                          [ab[(shift + i) % n] for i in range(n)]))
        orderings.append(([sb[(shift - i) % n] for i in range(n)],
                          [ab[(shift - i) % n] for i in range(n)]))
    for sides, angles in orderings:
        if any(abs(x - y) > tol.angular_eps * 10 for x, y in zip(aa, angles)):
            continue
        if ratio:
            k = sides[0] / sa[0]
            if all(abs(x * k - y) <= tol.eps * 10 for x, y in zip(sa, sides)):
                return True
        else:
            if all(abs(x - y) <= tol.eps * 10 for x, y in zip(sa, sides)):
                return True
    return False


def _congruent(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "congruent expects 2 arguments")
    a, b = args
    if isinstance(a, LineLike) and isinstance(b, LineLike):
        return abs(a.length - b.length) <= tol.eps
    if isinstance(a, Circle) and isinstance(b, Circle):
        return abs(a.radius - b.radius) <= tol.eps
    if isinstance(a, Polygon) and isinstance(b, Polygon):
        return _signatures_match(a, b, tol, ratio=False)
    raise PredicateError("congruent expects matching segment/circle/polygon kinds")


def _similar(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "similar expects 2 arguments")
    a, b = args
    if isinstance(a, Circle) and isinstance(b, Circle):
        return True
    if isinstance(a, Polygon) and isinstance(b, Polygon):
        return _signatures_match(a, b, tol, ratio=True)
    raise PredicateError("similar expects two polygons or two circles")


def _collinear(args, tol: Tolerance) -> bool:
    _need(len(args) >= 3 and all(isinstance(a, Point) for a in args),
          "collinear expects >= 3 points")
    a, b = args[0], args[1]
    if geom.distance(a, b) <= tol.eps:
        # Anchor on another pair if the first two coincide.
        for c in args[2:]:
            if geom.distance(a, c) > tol.eps:
                b = c
                break
        else:
            return True
    base = geom.line(a, b)
    return all(geom.point_infinite_line_distance(p, base) <= tol.eps for p in args[2:])


def _equal_length(args, tol: Tolerance) -> bool:
    l1, l2 = _as_linelikes(args, 2, "equal_length")
    return abs(l1.length - l2.length) <= tol.eps


def _equal_angle(args, tol: Tolerance) -> bool:
    _need(len(args) == 2 and all(isinstance(a, AngleArm) for a in args),
          "equal_angle expects two angles")
    return abs(args[0].measure() - args[1].measure()) <= tol.angular_eps * 10


def _same_side(args, tol: Tolerance) -> bool:
    _need(
        len(args) == 3
        and isinstance(args[0], Point)
        and isinstance(args[1], Point)
        and isinstance(args[2], LineLike),
        "same_side expects (point, point, line-like)",
    )
    p, q, ln = args
    a, b, c = ln.coefficients()
    dp = a * p.x + b * p.y + c
    dq = a * q.x + b * q.y + c
    if abs(dp) <= tol.eps or abs(dq) <= tol.eps:
        return False
    return (dp > 0) == (dq > 0)


def _between(args, tol: Tolerance) -> bool:
    _need(len(args) == 3 and all(isinstance(a, Point) for a in args),
          "between expects (middle, end, end)")
    m, a, b = args
    if geom.distance(a, b) <= tol.eps:
        return False
    seg = geom.segment(a, b)
    if geom.point_infinite_line_distance(m, seg) > tol.eps:
        return False
    t = geom.line_param(m, seg)
    return tol.eps < t < 1.0 - tol.eps


def _adjacent(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "adjacent expects 2 arguments")
    return object_distance(args[0], args[1]) < tol.adjacency


def _endpoints(obj: Primitive) -> list[Point]:
    if isinstance(obj, LineLike):
        if obj.kind == "segment":
            return [obj.p1, obj.p2]
        if obj.kind == "ray":
            return [obj.p1]
        return []
    if isinstance(obj, OpenCurve):
        return [obj.points[0], obj.points[-1]]
    return []


def _connected(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "connected expects 2 arguments")
    ea, eb = _endpoints(args[0]), _endpoints(args[1])
    if not ea or not eb:
        raise PredicateError("connected expects segments, rays, or open curves")
    return any(geom.distance(p, q) <= tol.eps for p in ea for q in eb)


_KIND_CHECKS = {
    "point": lambda o, t: isinstance(o, Point),
    "line": lambda o, t: isinstance(o, LineLike) and o.kind == "line",
    "segment": lambda o, t: isinstance(o, LineLike) and o.kind == "segment",
    "ray": lambda o, t: isinstance(o, LineLike) and o.kind == "ray",
    "circle": lambda o, t: isinstance(o, Circle),
    "oval": lambda o, t: isinstance(o, Oval),
    "curve": lambda o, t: isinstance(o, OpenCurve),
    "polygon": lambda o, t: isinstance(o, Polygon),
    "triangle": lambda o, t: isinstance(o, Polygon) and len(o.vertices) == 3,
    "quadrilateral": lambda o, t: isinstance(o, Polygon) and len(o.vertices) == 4,
}


def _is_rectangle(poly: Polygon, tol: Tolerance) -> bool:
    if len(poly.vertices) != 4:
        return False
    _, angles = _poly_signature(poly)
    return all(abs(a - math.pi / 2) <= tol.angular_eps * 10 for a in angles)


def _is_regular(poly: Polygon, tol: Tolerance) -> bool:
    sides, angles = _poly_signature(poly)
    return (
        max(sides) - min(sides) <= tol.eps * 10
        and max(angles) - min(angles) <= tol.angular_eps * 10
    )


_KIND_CHECKS["rectangle"] = lambda o, t: isinstance(o, Polygon) and _is_rectangle(o, t)
_KIND_CHECKS["square"] = lambda o, t: (
    isinstance(o, Polygon) and _is_rectangle(o, t) and _is_regular(o, t)
)
_KIND_CHECKS["regular_polygon"] = lambda o, t: isinstance(o, Polygon) and _is_regular(o, t)


def _is_kind(args, tol: Tolerance) -> bool:
    _need(len(args) == 2 and isinstance(args[1], str), "is_kind expects (object, kind-name)")
    obj, name = args
    if name not in _KIND_CHECKS:
        raise PredicateError(f"unknown kind name {name!r}")
    return _KIND_CHECKS[name](obj, tol)


def _center_of(args, tol: Tolerance) -> bool:
    _need(
        len(args) == 2 and isinstance(args[0], Point) and isinstance(args[1], (Circle, Oval)),
        "center_of expects (point, circle-or-oval)",
    )
    return geom.distance(args[0], args[1].center) <= tol.eps


def _endpoint_of(args, tol: Tolerance) -> bool:
    _need(len(args) == 2 and isinstance(args[0], Point), "endpoint_of expects (point, object)")
    ends = _endpoints(args[1])
    if not ends:
        raise PredicateError("endpoint_of expects a segment, ray, or open curve")
    return any(geom.distance(args[0], e) <= tol.eps for e in ends)


def _vertex_of(args, tol: Tolerance) -> bool:
    _need(
        len(args) == 2 and isinstance(args[0], Point) and isinstance(args[1], Polygon),
        "vertex_of expects (point, polygon)",
    )
    return any(geom.distance(args[0], v) <= tol.eps for v in args[1].vertices)


def _contains(args, tol: Tolerance) -> bool:
    _need(len(args) == 2, "contains expects (outer, inner)")
    outer, inner = args
    if isinstance(outer, Circle) and isinstance(inner, Circle):
        d = geom.distance(outer.center, inner.center)
        return d + inner.radius < outer.radius - tol.eps
    if not isinstance(outer, (Circle, Oval, Polygon)):
        raise PredicateError("contains expects a circle, oval, or polygon as the region")
    probes = boundary_points(inner, 32)
    return all(_point_inside((p, outer), tol) for p in probes)


_DISPATCH = {
    "parallel": _parallel,
    "orthogonal": _orthogonal,
    "tangent": _tangent,
    "intersects": _intersects,
    "point_on": _point_on,
    "point_inside": _point_inside,
    "convex": _convex,
    "congruent": _congruent,
    "similar": _similar,
    "collinear": _collinear,
    "equal_length": _equal_length,
    "equal_angle": _equal_angle,
    "same_side": _same_side,
    "between": _between,
    "adjacent": _adjacent,
    "connected": _connected,
    "is_kind": _is_kind,
    "center_of": _center_of,
    "endpoint_of": _endpoint_of,
    "vertex_of": _vertex_of,
    "contains": _contains,
}


def eval_predicate(kind: str, args: tuple, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Evaluate one predicate; raises PredicateError on arity/kind mismatch."""
    if kind not in _DISPATCH:
        raise PredicateError(f"unknown predicate kind {kind!r}")
    return _DISPATCH[kind](tuple(args), tol)


# --------------------------------------------------------------------------
# binding expressions: serializable predicate formulas over labeled objects


class MissingRefError(Exception):
    """A binding referenced a label or derived object absent from the scene."""


def _resolve_arg(spec, scene: Scene, roles: dict[str, str]):
    """Resolve one serialized argument spec against a scene.

    Specs: ["ref", role] | ["pt", role] | ["seg", a, b] | ["lineref", a, b]
    | ["angle", a, v, b] | ["polyref", v1, ...] | ["circref", center]
    | ["lit", value]
    """
    op = spec[0]
    if op == "lit":
        return spec[1]

    def label_of(role: str) -> str:
        if role not in roles:
            raise MissingRefError(f"role {role!r} has no label")
        return roles[role]

    def labeled(role: str):
        lab = label_of(role)
        try:
            return scene.by_label(lab)
        except SceneError:
            raise MissingRefError(f"label {lab!r} not in scene") from None

    def labeled_point(role: str) -> Point:
        obj = labeled(role)
        if not isinstance(obj, Point):
            raise MissingRefError(f"label {roles[role]!r} is not a point")
        return obj

    if op == "ref":
        return labeled(spec[1])
    if op == "pt":
        return labeled_point(spec[1])
    if op == "seg":
        return geom.segment(labeled_point(spec[1]), labeled_point(spec[2]))
    if op == "angle":
        return AngleArm(labeled_point(spec[1]), labeled_point(spec[2]), labeled_point(spec[3]))
    if op == "lineref":
        a, b = labeled_point(spec[1]), labeled_point(spec[2])
        for obj in scene.of_kind(LineLike):
            anchors = {(obj.p1.x, obj.p1.y), (obj.p2.x, obj.p2.y)}
            if {(a.x, a.y), (b.x, b.y)} == anchors:
                return obj
        raise MissingRefError(f"no line-like through labels {spec[1:]!r}")
    if op == "polyref":
        want = {roles.get(r) for r in spec[1:]}
        if None in want:
            raise MissingRefError("polygon role without label")
        for obj in scene.of_kind(Polygon):
            if {v.label for v in obj.vertices} == want:
                return obj
        raise MissingRefError(f"no polygon with vertex labels {sorted(want)!r}")
    if op == "circref":
        center = labeled_point(spec[1])
        for obj in scene.of_kind(Circle):
            if geom.distance(obj.center, center) <= 1e-9:
                return obj
        raise MissingRefError(f"no circle centered at label {roles[spec[1]]!r}")
    raise PredicateError(f"unknown argument spec {spec!r}")


def eval_binding(
    expr, scene: Scene, roles: dict[str, str], tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Evaluate a serialized binding expression.

    ["atom", kind, argspec...] / ["and", e...] / ["or", e...] / ["not", e]
    Raises MissingRefError when a referenced object does not exist.
    """
    op = expr[0]
    if op == "atom":
        args = tuple(_resolve_arg(s, scene, roles) for s in expr[2:])
        return eval_predicate(expr[1], args, tol)
    if op == "and":
        return all(eval_binding(e, scene, roles, tol) for e in expr[1:])
    if op == "or":
        return any(eval_binding(e, scene, roles, tol) for e in expr[1:])
    if op == "not":
        return not eval_binding(expr[1], scene, roles, tol)
    raise PredicateError(f"unknown binding node {op!r}")


def binding_verdict(
    expr, scene: Scene, roles: dict[str, str], tol: Tolerance = DEFAULT_TOL
) -> str:
    """'true', 'false', or 'absent' (references a missing object)."""
    try:
        return "true" if eval_binding(expr, scene, roles, tol) else "false"
    except MissingRefError:
        return "absent"

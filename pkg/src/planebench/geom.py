"""2D Euclidean primitives and constructors.

Everything works on the unit canvas [0, 1] x [0, 1] with y increasing upward;
raster code flips the axis when it draws. All values are immutable and all
functions are pure, so they are safe to share across workers.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field

from .styles import StrokeStyle


class GeometryError(Exception):
    """Base class for kernel failures."""


class DegenerateTriangleError(GeometryError):
    pass


class DegenerateAngleError(GeometryError):
    pass


class NoIntersectionError(GeometryError):
    pass


@dataclass(frozen=True)
class Tolerance:
    """Numeric slack used by every predicate and constructor check."""

    eps: float = 1e-6
    angular_eps: float = 1e-6
    # Distance under which two disjoint objects count as "adjacent".
    adjacency: float = 0.05

    def __post_init__(self) -> None:
        if self.eps <= 0 or self.angular_eps <= 0 or self.adjacency <= 0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: float
    y: float
    id: str = ""
    label: str | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    @property
    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)

    def moved(self, x: float, y: float) -> Point:
        return dataclasses.replace(self, x=x, y=y)


@dataclass(frozen=True)
class LineLike:
    """Infinite line, segment, or ray.

    ``p1``/``p2`` are two distinct anchor points: endpoints for a segment,
    tail and a through-point for a ray, any two points for a line.
    """

    kind: str  # "line" | "segment" | "ray"
    p1: Point
    p2: Point
    id: str = ""
    label: str | None = None
    style: StrokeStyle | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("line", "segment", "ray"):
            raise GeometryError(f"unknown line kind {self.kind!r}")
        if distance(self.p1, self.p2) == 0.0:
            raise GeometryError("line-like object needs two distinct points")

    @property
    def direction(self) -> tuple[float, float]:
        dx, dy = self.p2.x - self.p1.x, self.p2.y - self.p1.y
        n = math.hypot(dx, dy)
        return (dx / n, dy / n)

    @property
    def length(self) -> float:
        return distance(self.p1, self.p2)

    def coefficients(self) -> tuple[float, float, float]:
        """(a, b, c) with ax + by + c = 0, normalized so a^2 + b^2 = 1."""
        a = self.p1.y - self.p2.y
        b = self.p2.x - self.p1.x
        c = self.p1.x * self.p2.y - self.p2.x * self.p1.y
        n = math.hypot(a, b)
        return (a / n, b / n, c / n)


def segment(a: Point, b: Point, **kw) -> LineLike:
    return LineLike("segment", a, b, **kw)


def ray(tail: Point, through: Point, **kw) -> LineLike:
    return LineLike("ray", tail, through, **kw)


def line(a: Point, b: Point, **kw) -> LineLike:
    return LineLike("line", a, b, **kw)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float
    id: str = ""
    label: str | None = None
    style: StrokeStyle | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise GeometryError(f"circle radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Oval:
    center: Point
    rx: float
    ry: float
    rotation: float = 0.0  # radians in [0, pi)
    id: str = ""
    label: str | None = None
    style: StrokeStyle | None = None

    def __post_init__(self) -> None:
        if self.rx <= 0 or self.ry <= 0:
            raise GeometryError("oval semi-axes must be positive")
        object.__setattr__(self, "rotation", self.rotation % math.pi)


@dataclass(frozen=True)
class OpenCurve:
    """Open polyline or smooth (Catmull-Rom) curve through control points."""

    points: tuple[Point, ...]
    interpolation: str = "polyline"  # "polyline" | "smooth"
    id: str = ""
    label: str | None = None
    style: StrokeStyle | None = None

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise GeometryError("open curve needs at least 2 control points")
        for a, b in zip(self.points, self.points[1:]):
            if distance(a, b) == 0.0:
                raise GeometryError("consecutive control points coincide")
        if self.interpolation not in ("polyline", "smooth"):
            raise GeometryError(f"unknown interpolation {self.interpolation!r}")


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point, ...]
    id: str = ""
    label: str | None = None
    style: StrokeStyle | None = None

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        n = len(self.vertices)
        for i in range(n):
            if distance(self.vertices[i], self.vertices[(i + 1) % n]) == 0.0:
                raise GeometryError("consecutive polygon vertices coincide")

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


Primitive = Point | LineLike | Circle | Oval | OpenCurve | Polygon


# ---------------------------------------------------------------------------
# scalar helpers


def distance(a: Point, b: Point) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def dot(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * bx + ay * by


def cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def angle_of(tail: Point, head: Point) -> float:
    """Direction of the vector tail->head in (-pi, pi]."""
    return math.atan2(head.y - tail.y, head.x - tail.x)


def angle_between(vertex: Point, a: Point, b: Point) -> float:
    """Unsigned angle a-vertex-b in [0, pi]."""
    ax, ay = a.x - vertex.x, a.y - vertex.y
    bx, by = b.x - vertex.x, b.y - vertex.y
    na, nb = math.hypot(ax, ay), math.hypot(bx, by)
    if na == 0 or nb == 0:
        raise DegenerateAngleError("angle arm coincides with vertex")
    c = max(-1.0, min(1.0, dot(ax, ay, bx, by) / (na * nb)))
    return math.acos(c)


def signed_angle(vertex: Point, a: Point, b: Point) -> float:
    """Signed angle from vertex->a to vertex->b in (-pi, pi]."""
    ta = angle_of(vertex, a)
    tb = angle_of(vertex, b)
    d = tb - ta
    while d <= -math.pi:
        d += 2 * math.pi
    while d > math.pi:
        d -= 2 * math.pi
    return d


def triangle_area(a: Point, b: Point, c: Point) -> float:
    return abs(cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y)) / 2.0


def polygon_signed_area(vertices: tuple[Point, ...] | list[Point]) -> float:
    s = 0.0
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return s / 2.0


def polygon_perimeter(vertices: tuple[Point, ...] | list[Point]) -> float:
    n = len(vertices)
    return sum(distance(vertices[i], vertices[(i + 1) % n]) for i in range(n))


# ---------------------------------------------------------------------------
# projections and distances


def project_to_line(p: Point, ln: LineLike) -> Point:
    """Foot of the perpendicular from p onto the full line through ln."""
    x1, y1 = ln.p1.xy
    dx, dy = ln.p2.x - x1, ln.p2.y - y1
    t = dot(p.x - x1, p.y - y1, dx, dy) / (dx * dx + dy * dy)
    return Point(x1 + t * dx, y1 + t * dy)


def line_param(p: Point, ln: LineLike) -> float:
    """Parameter t of the projection of p, with p1 -> 0 and p2 -> 1."""
    x1, y1 = ln.p1.xy
    dx, dy = ln.p2.x - x1, ln.p2.y - y1
    return dot(p.x - x1, p.y - y1, dx, dy) / (dx * dx + dy * dy)


def point_line_distance(p: Point, ln: LineLike) -> float:
    """Distance from p to ln, honoring the segment/ray extent."""
    t = line_param(p, ln)
    if ln.kind == "segment":
        t = max(0.0, min(1.0, t))
    elif ln.kind == "ray":
        t = max(0.0, t)
    x1, y1 = ln.p1.xy
    dx, dy = ln.p2.x - x1, ln.p2.y - y1
    return math.hypot(p.x - (x1 + t * dx), p.y - (y1 + t * dy))


def point_infinite_line_distance(p: Point, ln: LineLike) -> float:
    a, b, c = ln.coefficients()
    return abs(a * p.x + b * p.y + c)


# ---------------------------------------------------------------------------
# intersections


def line_line_intersection(l1: LineLike, l2: LineLike, tol: Tolerance = DEFAULT_TOL) -> Point:
    a1, b1, c1 = l1.coefficients()
    a2, b2, c2 = l2.coefficients()
    d = a1 * b2 - a2 * b1
    if abs(d) < tol.eps:
        raise NoIntersectionError("lines are parallel or coincident")
    x = (b1 * c2 - b2 * c1) / d
    y = (c1 * a2 - c2 * a1) / d
    return Point(x, y)


def line_circle_intersection(
    ln: LineLike, circle: Circle, tol: Tolerance = DEFAULT_TOL
) -> list[Point]:
    """Intersections of the full line through ln with the circle (0, 1 or 2)."""
    foot = project_to_line(circle.center, ln)
    d = distance(circle.center, foot)
    if d > circle.radius + tol.eps:
        return []
    if abs(d - circle.radius) <= tol.eps:
        return [foot]
    half = math.sqrt(max(circle.radius**2 - d**2, 0.0))
    ux, uy = ln.direction
    return [
        Point(foot.x - half * ux, foot.y - half * uy),
        Point(foot.x + half * ux, foot.y + half * uy),
    ]


def circle_circle_intersection(
    c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL
) -> list[Point]:
    d = distance(c1.center, c2.center)
    if d < tol.eps:
        return []
    if d > c1.radius + c2.radius + tol.eps or d < abs(c1.radius - c2.radius) - tol.eps:
        return []
    a = (c1.radius**2 - c2.radius**2 + d * d) / (2 * d)
    h2 = c1.radius**2 - a * a
    ux = (c2.center.x - c1.center.x) / d
    uy = (c2.center.y - c1.center.y) / d
    mx, my = c1.center.x + a * ux, c1.center.y + a * uy
    if h2 <= tol.eps**2:
        return [Point(mx, my)]
    h = math.sqrt(max(h2, 0.0))
    return [Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)]


def segments_intersect(s1: LineLike, s2: LineLike, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether two segments share at least one point (touching counts)."""

    def orient(a: Point, b: Point, c: Point) -> float:
        return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y)

    def on_seg(a: Point, b: Point, c: Point) -> bool:
        return (
            min(a.x, b.x) - tol.eps <= c.x <= max(a.x, b.x) + tol.eps
            and min(a.y, b.y) - tol.eps <= c.y <= max(a.y, b.y) + tol.eps
        )

    a, b, c, d = s1.p1, s1.p2, s2.p1, s2.p2
    d1, d2 = orient(a, b, c), orient(a, b, d)
    d3, d4 = orient(c, d, a), orient(c, d, b)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and all(
        abs(v) > tol.eps for v in (d1, d2, d3, d4)
    ):
        return True
    if abs(d1) <= tol.eps and on_seg(a, b, c):
        return True
    if abs(d2) <= tol.eps and on_seg(a, b, d):
        return True
    if abs(d3) <= tol.eps and on_seg(c, d, a):
        return True
    if abs(d4) <= tol.eps and on_seg(c, d, b):
        return True
    return False


# ---------------------------------------------------------------------------
# spec constructors


def midpoint(a: Point, b: Point) -> Point:
    """Defined for coincident inputs as well (returns the shared point)."""
    return Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)


def special_center(
    tri: tuple[Point, Point, Point],
    kind: str = "incenter",
    opposite: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> Point:
    """Incenter, or the excenter opposite ``tri[opposite]``.

    Uses the barycentric weights (a:b:c) with a, b, c the side lengths
    opposite each vertex; the excenter negates the weight of the chosen
    vertex.
    """
    pa, pb, pc = tri
    if triangle_area(pa, pb, pc) <= tol.eps:
        raise DegenerateTriangleError("triangle area below tolerance")
    a = distance(pb, pc)
    b = distance(pc, pa)
    c = distance(pa, pb)
    w = [a, b, c]
    if kind == "incenter":
        pass
    elif kind == "excenter":
        if opposite not in (0, 1, 2):
            raise GeometryError(f"excenter vertex index must be 0..2, got {opposite}")
        w[opposite] = -w[opposite]
    else:
        raise GeometryError(f"unknown center kind {kind!r}")
    total = sum(w)
    x = (w[0] * pa.x + w[1] * pb.x + w[2] * pc.x) / total
    y = (w[0] * pa.y + w[1] * pb.y + w[2] * pc.y) / total
    return Point(x, y)


def angle_trisect(
    vertex: Point, arm_a: Point, arm_b: Point, tol: Tolerance = DEFAULT_TOL
) -> tuple[LineLike, LineLike]:
    """Two rays from vertex splitting angle (arm_a, vertex, arm_b) in three."""
    sweep = signed_angle(vertex, arm_a, arm_b)
    if abs(sweep) <= tol.angular_eps or abs(abs(sweep) - math.pi) <= tol.angular_eps:
        raise DegenerateAngleError("arms are collinear with the vertex")
    base = angle_of(vertex, arm_a)
    arm_len = max(distance(vertex, arm_a), distance(vertex, arm_b))
    rays = []
    for k in (1, 2):
        theta = base + sweep * k / 3.0
        head = Point(vertex.x + arm_len * math.cos(theta), vertex.y + arm_len * math.sin(theta))
        rays.append(ray(vertex, head))
    return (rays[0], rays[1])


def tangent_from_point(p: Point, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[LineLike]:
    """Tangent lines to c through p: [] inside, one on the circle, two outside."""
    d = distance(p, c.center)
    if abs(d - c.radius) <= tol.eps:
        # Tangent at p itself: perpendicular to the radius.
        nx, ny = (p.x - c.center.x) / d, (p.y - c.center.y) / d
        q = Point(p.x - ny, p.y + nx)
        return [line(p, q)]
    if d < c.radius:
        return []
    alpha = math.acos(c.radius / d)
    base = math.atan2(p.y - c.center.y, p.x - c.center.x)
    out = []
    for sign in (1.0, -1.0):
        theta = base + sign * alpha
        touch = Point(
            c.center.x + c.radius * math.cos(theta),
            c.center.y + c.radius * math.sin(theta),
        )
        out.append(line(p, touch))
    return out


# ---------------------------------------------------------------------------
# rigid and similarity transforms


@dataclass(frozen=True)
class Translation:
    dx: float
    dy: float


@dataclass(frozen=True)
class Rotation:
    center: Point
    theta: float


@dataclass(frozen=True)
class Reflection:
    axis: LineLike


@dataclass(frozen=True)
class Scaling:
    center: Point
    factor: float

    def __post_init__(self) -> None:
        if self.factor <= 0:
            raise GeometryError("scale factor must be positive")


Transform = Translation | Rotation | Reflection | Scaling


def _map_xy(t: Transform, x: float, y: float) -> tuple[float, float]:
    if isinstance(t, Translation):
        return (x + t.dx, y + t.dy)
    if isinstance(t, Rotation):
        ct, st = math.cos(t.theta), math.sin(t.theta)
        rx, ry = x - t.center.x, y - t.center.y
        return (t.center.x + rx * ct - ry * st, t.center.y + rx * st + ry * ct)
    if isinstance(t, Reflection):
        a, b, c = t.axis.coefficients()
        d = a * x + b * y + c
        return (x - 2 * d * a, y - 2 * d * b)
    if isinstance(t, Scaling):
        return (
            t.center.x + t.factor * (x - t.center.x),
            t.center.y + t.factor * (y - t.center.y),
        )
    raise GeometryError(f"unknown transform {t!r}")


def _map_direction(t: Transform, dx: float, dy: float) -> tuple[float, float]:
    ox, oy = _map_xy(t, 0.0, 0.0)
    px, py = _map_xy(t, dx, dy)
    return (px - ox, py - oy)


def transform(obj: Primitive, t: Transform) -> Primitive:
    """Apply a translation/rotation/reflection/uniform-scale to a primitive."""
    if isinstance(obj, Point):
        return obj.moved(*_map_xy(t, obj.x, obj.y))
    if isinstance(obj, LineLike):
        return dataclasses.replace(
            obj, p1=transform(obj.p1, t), p2=transform(obj.p2, t)
        )
    if isinstance(obj, Circle):
        r = obj.radius * t.factor if isinstance(t, Scaling) else obj.radius
        return dataclasses.replace(obj, center=transform(obj.center, t), radius=r)
    if isinstance(obj, Oval):
        k = t.factor if isinstance(t, Scaling) else 1.0
        ux, uy = _map_direction(t, math.cos(obj.rotation), math.sin(obj.rotation))
        return dataclasses.replace(
            obj,
            center=transform(obj.center, t),
            rx=obj.rx * k,
            ry=obj.ry * k,
            rotation=math.atan2(uy, ux) % math.pi,
        )
    if isinstance(obj, OpenCurve):
        return dataclasses.replace(obj, points=tuple(transform(p, t) for p in obj.points))
    if isinstance(obj, Polygon):
        return dataclasses.replace(obj, vertices=tuple(transform(p, t) for p in obj.vertices))
    raise GeometryError(f"cannot transform {type(obj).__name__}")


def inverse(t: Transform) -> Transform:
    if isinstance(t, Translation):
        return Translation(-t.dx, -t.dy)
    if isinstance(t, Rotation):
        return Rotation(t.center, -t.theta)
    if isinstance(t, Reflection):
        return t
    if isinstance(t, Scaling):
        return Scaling(t.center, 1.0 / t.factor)
    raise GeometryError(f"unknown transform {t!r}")

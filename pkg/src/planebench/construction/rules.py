"""Apply procedures for every cataloged construction rule.

Each implementation receives a :class:`Builder` (scene + rng + label pool),
creates its objects, and returns the role->label map used to instantiate the
rule's statement templates. Constraint misses raise :class:`RuleFailure`;
the engine treats that as "leave the diagram unchanged and retry".
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .. import geom
from ..geom import Circle, LineLike, OpenCurve, Oval, Point, Polygon
from ..predicates import point_in_polygon
from ..scene import Scene

# Sampling canvas (tighter than the render margins so derived objects fit).
LO, HI = 0.10, 0.90
MIN_SEP = 0.06  # twice the renderer's min point separation
MIN_SEG = 0.14


class RuleFailure(Exception):
    pass


@dataclass(frozen=True)
class LabelPool:
    remaining: tuple[str, ...]

    def clone(self) -> "LabelPool":
        return LabelPool(self.remaining)


class Builder:
    """Mutable construction context for a single rule attempt."""

    def __init__(self, scene: Scene, rng: random.Random, pool: LabelPool):
        self.scene = scene
        self.rng = rng
        self.pool = pool
        self.created_ids: list[str] = []

    # -- labels ------------------------------------------------------------

    def take_label(self) -> str:
        if not self.pool.remaining:
            raise RuleFailure("degenerate-sample: label pool exhausted")
        label, rest = self.pool.remaining[0], self.pool.remaining[1:]
        self.pool = LabelPool(rest)
        return label

    # -- object creation ---------------------------------------------------

    def add(self, obj, label: str | None = None):
        self.scene, stored = self.scene.add(obj, label)
        self.created_ids.append(stored.id)
        return stored

    def add_labeled(self, obj):
        return self.add(obj, self.take_label())

    def place_point(self, x: float, y: float, min_sep: float = MIN_SEP) -> Point:
        self.check_spot(x, y, min_sep)
        return self.add(Point(x, y), self.take_label())

    def check_spot(self, x: float, y: float, min_sep: float = MIN_SEP) -> None:
        if not (0.03 <= x <= 0.97 and 0.03 <= y <= 0.97):
            raise RuleFailure("degenerate-sample: out of canvas")
        for p in self.scene.points():
            if math.hypot(p.x - x, p.y - y) < min_sep:
                raise RuleFailure("degenerate-sample: too close to existing point")

    def spot_ok(self, x: float, y: float, min_sep: float = MIN_SEP) -> bool:
        try:
            self.check_spot(x, y, min_sep)
            return True
        except RuleFailure:
            return False

    def rand_point(self, min_sep: float = MIN_SEP, tries: int = 60) -> Point:
        for _ in range(tries):
            x, y = self.rng.uniform(LO, HI), self.rng.uniform(LO, HI)
            if self.spot_ok(x, y, min_sep):
                return self.place_point(x, y, min_sep)
        raise RuleFailure("degenerate-sample: no free spot")

    def rand_xy(self, lo: float = LO, hi: float = HI) -> tuple[float, float]:
        return (self.rng.uniform(lo, hi), self.rng.uniform(lo, hi))

    def pick(self, candidates: list):
        if not candidates:
            raise RuleFailure("missing-requirements")
        return candidates[self.rng.randrange(len(candidates))]


# ---------------------------------------------------------------------------
# requirement selectors and prerequisite injection


def _labeled(obj) -> bool:
    return obj.label is not None


def scene_segments(scene: Scene) -> list[LineLike]:
    return [
        o
        for o in scene.of_kind(LineLike)
        if o.kind == "segment" and _labeled(o.p1) and _labeled(o.p2)
    ]


def scene_straights(scene: Scene) -> list[LineLike]:
    """Lines or segments with labeled anchors (usable as a base line)."""
    return [
        o
        for o in scene.of_kind(LineLike)
        if o.kind in ("line", "segment") and _labeled(o.p1) and _labeled(o.p2)
    ]


def scene_lines(scene: Scene) -> list[LineLike]:
    return [
        o
        for o in scene.of_kind(LineLike)
        if o.kind == "line" and _labeled(o.p1) and _labeled(o.p2)
    ]


def scene_circles(scene: Scene) -> list[Circle]:
    return [o for o in scene.of_kind(Circle) if _labeled(o.center)]


def scene_triangles(scene: Scene) -> list[Polygon]:
    return [
        o
        for o in scene.of_kind(Polygon)
        if len(o.vertices) == 3 and all(_labeled(v) for v in o.vertices)
    ]


def scene_angles(scene: Scene) -> list[tuple[Point, Point, Point]]:
    """(vertex, arm, arm) triples from segment/ray pairs sharing an endpoint."""
    arms: list[tuple[Point, Point]] = []
    for o in scene.of_kind(LineLike):
        if o.kind == "segment" and _labeled(o.p1) and _labeled(o.p2):
            arms.append((o.p1, o.p2))
            arms.append((o.p2, o.p1))
        elif o.kind == "ray" and _labeled(o.p1) and _labeled(o.p2):
            arms.append((o.p1, o.p2))
    out = []
    for i in range(len(arms)):
        for j in range(i + 1, len(arms)):
            (v1, a1), (v2, a2) = arms[i], arms[j]
            if geom.distance(v1, v2) > 1e-9 or geom.distance(a1, a2) < 1e-9:
                continue
            sweep = abs(geom.signed_angle(v1, a1, a2))
            if math.radians(25) <= sweep <= math.radians(155):
                out.append((v1, a1, a2))
    return out


_SELECTORS = {
    "point": lambda s: [p for p in s.points() if _labeled(p)],
    "segment": scene_segments,
    "straight": scene_straights,
    "line": scene_lines,
    "circle": scene_circles,
    "triangle": scene_triangles,
    "angle": scene_angles,
}


def has_candidates(scene: Scene, requirement: str) -> bool:
    if requirement not in _SELECTORS:
        raise RuleFailure(f"unknown requirement kind {requirement!r}")
    return bool(_SELECTORS[requirement](scene))


def inject_requirement(builder: Builder, requirement: str) -> None:
    """Create one minimal object satisfying a requirement kind."""
    if requirement == "point":
        builder.rand_point()
    elif requirement == "segment":
        _make_segment(builder)
    elif requirement in ("straight", "line"):
        kind = "line" if requirement == "line" else builder.rng.choice(["line", "segment"])
        _make_straight(builder, kind)
    elif requirement == "circle":
        _make_circle(builder)
    elif requirement == "triangle":
        _make_triangle(builder)
    elif requirement == "angle":
        _make_angle(builder)
    else:
        raise RuleFailure(f"unknown requirement kind {requirement!r}")


# ---------------------------------------------------------------------------
# shared construction helpers


def _second_point(builder: Builder, a: Point, lo: float = MIN_SEG, hi: float = 0.55,
                  tries: int = 60) -> Point:
    for _ in range(tries):
        theta = builder.rng.uniform(0, 2 * math.pi)
        r = builder.rng.uniform(lo, hi)
        x, y = a.x + r * math.cos(theta), a.y + r * math.sin(theta)
        if builder.spot_ok(x, y):
            return builder.place_point(x, y)
    raise RuleFailure("degenerate-sample: no partner spot")


def _make_segment(builder: Builder) -> tuple[LineLike, Point, Point]:
    a = builder.rand_point()
    b = _second_point(builder, a)
    seg = builder.add(geom.segment(a, b))
    return seg, a, b


def _make_straight(builder: Builder, kind: str) -> tuple[LineLike, Point, Point]:
    a = builder.rand_point()
    b = _second_point(builder, a)
    obj = builder.add(LineLike(kind, a, b))
    return obj, a, b


def _make_circle(builder: Builder) -> tuple[Circle, Point]:
    for _ in range(60):
        r = builder.rng.uniform(0.10, 0.22)
        x, y = builder.rand_xy(r + 0.06, 1 - r - 0.06)
        if builder.spot_ok(x, y):
            center = builder.place_point(x, y)
            circle = builder.add(Circle(center, r))
            return circle, center
    raise RuleFailure("degenerate-sample: no circle spot")


def _triangle_coords(builder: Builder, tries: int = 80):
    for _ in range(tries):
        cx, cy = builder.rand_xy(0.25, 0.75)
        pts = []
        base = builder.rng.uniform(0, 2 * math.pi)
        ok = True
        for k in range(3):
            theta = base + 2 * math.pi * k / 3 + builder.rng.uniform(-0.5, 0.5)
            r = builder.rng.uniform(0.13, 0.24)
            x, y = cx + r * math.cos(theta), cy + r * math.sin(theta)
            if not builder.spot_ok(x, y):
                ok = False
                break
            pts.append((x, y))
        if not ok:
            continue
        p = [Point(x, y) for x, y in pts]
        if geom.triangle_area(*p) < 0.014:
            continue
        if min(geom.distance(p[i], p[j]) for i in range(3) for j in range(i + 1, 3)) < MIN_SEG:
            continue
        return pts
    raise RuleFailure("degenerate-sample: no triangle spot")


def _make_triangle(builder: Builder) -> tuple[Polygon, list[Point]]:
    coords = _triangle_coords(builder)
    verts = [builder.place_point(x, y) for x, y in coords]
    poly = builder.add(Polygon(tuple(verts)))
    return poly, verts


def _make_angle(builder: Builder) -> tuple[Point, Point, Point]:
    for _ in range(60):
        vx, vy = builder.rand_xy(0.25, 0.75)
        if not builder.spot_ok(vx, vy):
            continue
        base = builder.rng.uniform(0, 2 * math.pi)
        sweep = builder.rng.uniform(math.radians(35), math.radians(140))
        r1 = builder.rng.uniform(0.2, 0.35)
        r2 = builder.rng.uniform(0.2, 0.35)
        ax, ay = vx + r1 * math.cos(base), vy + r1 * math.sin(base)
        bx, by = vx + r2 * math.cos(base + sweep), vy + r2 * math.sin(base + sweep)
        probe = Builder(builder.scene, builder.rng, builder.pool.clone())
        if not (probe.spot_ok(vx, vy) and probe.spot_ok(ax, ay) and probe.spot_ok(bx, by)):
            continue
        if math.hypot(ax - bx, ay - by) < MIN_SEP:
            continue
        v = builder.place_point(vx, vy)
        a = builder.place_point(ax, ay)
        b = builder.place_point(bx, by)
        builder.add(geom.segment(v, a))
        builder.add(geom.segment(v, b))
        return v, a, b
    raise RuleFailure("degenerate-sample: no angle spot")


def _direction_point(p: Point, theta: float, dist: float) -> tuple[float, float]:
    return (p.x + dist * math.cos(theta), p.y + dist * math.sin(theta))


def _pick_triangle(builder: Builder) -> Polygon:
    return builder.pick(scene_triangles(builder.scene))


def _pick_circle(builder: Builder) -> Circle:
    return builder.pick(scene_circles(builder.scene))


# ---------------------------------------------------------------------------
# rule registry

RULE_IMPLS: dict = {}


def impl(rule_id: str):
    def deco(fn):
        RULE_IMPLS[rule_id] = fn
        return fn

    return deco


# -- fundamental objects -----------------------------------------------------


@impl("point")
def _r_point(b: Builder) -> dict:
    a = b.rand_point()
    return {"A": a.label}


@impl("segment")
def _r_segment(b: Builder) -> dict:
    _, a, p2 = _make_segment(b)
    return {"A": a.label, "B": p2.label}


@impl("infinite_line")
def _r_line(b: Builder) -> dict:
    _, a, p2 = _make_straight(b, "line")
    return {"A": a.label, "B": p2.label}


@impl("ray")
def _r_ray(b: Builder) -> dict:
    _, a, p2 = _make_straight(b, "ray")
    return {"A": a.label, "B": p2.label}


@impl("circle")
def _r_circle(b: Builder) -> dict:
    _, center = _make_circle(b)
    return {"O": center.label}


@impl("triangle")
def _r_triangle(b: Builder) -> dict:
    _, verts = _make_triangle(b)
    return {"A": verts[0].label, "B": verts[1].label, "C": verts[2].label}


def _regular_polygon(b: Builder, n: int, roles: str) -> dict:
    for _ in range(60):
        r = b.rng.uniform(0.13, 0.21)
        cx, cy = b.rand_xy(r + 0.08, 1 - r - 0.08)
        base = b.rng.uniform(0, 2 * math.pi)
        coords = [
            _direction_point(Point(cx, cy), base + 2 * math.pi * k / n, r) for k in range(n)
        ]
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in coords):
            continue
        side = math.hypot(coords[0][0] - coords[1][0], coords[0][1] - coords[1][1])
        if side < MIN_SEP + 0.02:
            continue
        verts = [b.place_point(x, y) for x, y in coords]
        b.add(Polygon(tuple(verts)))
        return {role: v.label for role, v in zip(roles, verts)}
    raise RuleFailure("degenerate-sample: no regular polygon spot")


@impl("square")
def _r_square(b: Builder) -> dict:
    return _regular_polygon(b, 4, "ABCD")


@impl("rectangle")
def _r_rectangle(b: Builder) -> dict:
    for _ in range(60):
        w = b.rng.uniform(0.22, 0.4)
        h = w / b.rng.uniform(1.4, 2.2)
        theta = b.rng.uniform(0, math.pi)
        cx, cy = b.rand_xy(0.3, 0.7)
        ct, st = math.cos(theta), math.sin(theta)
        half = [(-w / 2, -h / 2), (w / 2, -h / 2), (w / 2, h / 2), (-w / 2, h / 2)]
        coords = [(cx + dx * ct - dy * st, cy + dx * st + dy * ct) for dx, dy in half]
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in coords):
            continue
        verts = [b.place_point(x, y) for x, y in coords]
        b.add(Polygon(tuple(verts)))
        return {role: v.label for role, v in zip("ABCD", verts)}
    raise RuleFailure("degenerate-sample: no rectangle spot")


@impl("regular_pentagon")
def _r_pentagon(b: Builder) -> dict:
    return _regular_polygon(b, 5, "ABCDE")


@impl("regular_hexagon")
def _r_hexagon(b: Builder) -> dict:
    return _regular_polygon(b, 6, "ABCDEF")


@impl("oval")
def _r_oval(b: Builder) -> dict:
    for _ in range(60):
        rx = b.rng.uniform(0.12, 0.2)
        ry = rx / b.rng.uniform(1.4, 2.0)
        rot = b.rng.uniform(0, math.pi)
        m = max(rx, ry)
        cx, cy = b.rand_xy(m + 0.06, 1 - m - 0.06)
        if not b.spot_ok(cx, cy):
            continue
        oval = b.add(Oval(Point(cx, cy), rx, ry, rot), b.take_label())
        return {"V": oval.label}
    raise RuleFailure("degenerate-sample: no oval spot")


@impl("open_curve")
def _r_open_curve(b: Builder) -> dict:
    a = b.rand_point()
    p2 = _second_point(b, a, lo=0.3, hi=0.55)
    n_mid = b.rng.randint(1, 3)
    controls = [a]
    for k in range(1, n_mid + 1):
        t = k / (n_mid + 1)
        mx = a.x + (p2.x - a.x) * t
        my = a.y + (p2.y - a.y) * t
        nx, ny = -(p2.y - a.y), (p2.x - a.x)
        nlen = math.hypot(nx, ny)
        amp = b.rng.uniform(-0.12, 0.12)
        px = min(0.95, max(0.05, mx + amp * nx / nlen))
        py = min(0.95, max(0.05, my + amp * ny / nlen))
        controls.append(Point(px, py))
    controls.append(p2)
    kind = b.rng.choice(["polyline", "smooth"])
    curve = b.add(OpenCurve(tuple(controls), kind), b.take_label())
    return {"A": a.label, "B": p2.label, "W": curve.label}


# -- derived objects ---------------------------------------------------------


@impl("midpoint")
def _r_midpoint(b: Builder) -> dict:
    seg = b.pick([s for s in scene_segments(b.scene) if s.length >= 2.4 * MIN_SEP])
    m = geom.midpoint(seg.p1, seg.p2)
    pt = b.place_point(m.x, m.y, min_sep=MIN_SEP * 0.9)
    return {"A": seg.p1.label, "B": seg.p2.label, "M": pt.label}


@impl("incenter")
def _r_incenter(b: Builder) -> dict:
    tri = _pick_triangle(b)
    center = geom.special_center(tuple(tri.vertices), "incenter")
    pt = b.place_point(center.x, center.y, min_sep=MIN_SEP * 0.8)
    a, c2, c3 = tri.vertices
    return {"A": a.label, "B": c2.label, "C": c3.label, "I": pt.label}


@impl("excenter")
def _r_excenter(b: Builder) -> dict:
    tri = _pick_triangle(b)
    order = list(range(3))
    b.rng.shuffle(order)
    for k in order:
        center = geom.special_center(tuple(tri.vertices), "excenter", opposite=k)
        if b.spot_ok(center.x, center.y, MIN_SEP * 0.8):
            pt = b.place_point(center.x, center.y, min_sep=MIN_SEP * 0.8)
            rest = [v for i, v in enumerate(tri.vertices) if i != k]
            return {
                "A": tri.vertices[k].label,
                "B": rest[0].label,
                "C": rest[1].label,
                "E": pt.label,
            }
    raise RuleFailure("degenerate-sample: excenters out of canvas")


@impl("centroid")
def _r_centroid(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    m = geom.midpoint(vb, vc)
    g = Point((va.x + vb.x + vc.x) / 3, (va.y + vb.y + vc.y) / 3)
    if geom.distance(m, g) < MIN_SEP * 0.8:
        raise RuleFailure("degenerate-sample: centroid too close to midpoint")
    mp = b.place_point(m.x, m.y, MIN_SEP * 0.8)
    gp = b.place_point(g.x, g.y, MIN_SEP * 0.8)
    b.add(geom.segment(va, mp))
    return {"A": va.label, "B": vb.label, "C": vc.label, "M": mp.label, "G": gp.label}


@impl("circumcenter")
def _r_circumcenter(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    center = _circumcenter_of(va, vb, vc)
    pt = b.place_point(center.x, center.y, MIN_SEP * 0.8)
    return {"A": va.label, "B": vb.label, "C": vc.label, "O": pt.label}


def _circumcenter_of(a: Point, c2: Point, c3: Point) -> Point:
    d = 2 * (a.x * (c2.y - c3.y) + c2.x * (c3.y - a.y) + c3.x * (a.y - c2.y))
    if abs(d) < 1e-12:
        raise RuleFailure("degenerate-sample: collinear vertices")
    ux = (
        (a.x**2 + a.y**2) * (c2.y - c3.y)
        + (c2.x**2 + c2.y**2) * (c3.y - a.y)
        + (c3.x**2 + c3.y**2) * (a.y - c2.y)
    ) / d
    uy = (
        (a.x**2 + a.y**2) * (c3.x - c2.x)
        + (c2.x**2 + c2.y**2) * (a.x - c3.x)
        + (c3.x**2 + c3.y**2) * (c2.x - a.x)
    ) / d
    return Point(ux, uy)


@impl("orthocenter")
def _r_orthocenter(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    o = _circumcenter_of(va, vb, vc)
    h = Point(va.x + vb.x + vc.x - 2 * o.x, va.y + vb.y + vc.y - 2 * o.y)
    pt = b.place_point(h.x, h.y, MIN_SEP * 0.8)
    return {"A": va.label, "B": vb.label, "C": vc.label, "H": pt.label}


@impl("angle_bisector")
def _r_angle_bisector(b: Builder) -> dict:
    v, arm_a, arm_b = b.pick(scene_angles(b.scene))
    sweep = geom.signed_angle(v, arm_a, arm_b)
    theta = geom.angle_of(v, arm_a) + sweep / 2
    dist = 0.8 * min(geom.distance(v, arm_a), geom.distance(v, arm_b))
    x, y = _direction_point(v, theta, dist)
    d = b.place_point(x, y)
    b.add(geom.ray(v, d))
    return {"A": v.label, "B": arm_a.label, "C": arm_b.label, "D": d.label}


@impl("angle_trisector")
def _r_angle_trisector(b: Builder) -> dict:
    v, arm_a, arm_b = b.pick(scene_angles(b.scene))
    r1, r2 = geom.angle_trisect(v, arm_a, arm_b)
    dist = 0.8 * min(geom.distance(v, arm_a), geom.distance(v, arm_b))
    heads = []
    for r in (r1, r2):
        theta = geom.angle_of(r.p1, r.p2)
        x, y = _direction_point(v, theta, dist)
        heads.append(b.place_point(x, y, MIN_SEP * 0.7))
    b.add(geom.ray(v, heads[0]))
    b.add(geom.ray(v, heads[1]))
    return {
        "A": v.label,
        "B": arm_a.label,
        "C": arm_b.label,
        "D": heads[0].label,
        "E": heads[1].label,
    }


@impl("perpendicular_bisector")
def _r_perp_bisector(b: Builder) -> dict:
    seg = b.pick([s for s in scene_segments(b.scene) if s.length >= 2.4 * MIN_SEP])
    m = geom.midpoint(seg.p1, seg.p2)
    mp = b.place_point(m.x, m.y, MIN_SEP * 0.9)
    ux, uy = seg.direction
    anchor = Point(mp.x - uy * 0.25, mp.y + ux * 0.25)
    ln = b.add(geom.line(mp, anchor), b.take_label())
    return {"A": seg.p1.label, "B": seg.p2.label, "M": mp.label, "L": ln.label}


@impl("perpendicular_foot")
def _r_perp_foot(b: Builder) -> dict:
    base = b.pick(scene_straights(b.scene))
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        t = b.rng.uniform(0.25, 0.75)
        on_line = Point(
            base.p1.x + (base.p2.x - base.p1.x) * t,
            base.p1.y + (base.p2.y - base.p1.y) * t,
        )
        h = b.rng.uniform(0.14, 0.3)
        a, bb, c = base.coefficients()
        px, py = on_line.x + a * h, on_line.y + bb * h
        if not b.spot_ok(px, py):
            continue
        p = Point(px, py)
        foot = geom.project_to_line(p, base)
        tt = geom.line_param(foot, base)
        if base.kind == "segment" and not (0.12 <= tt <= 0.88):
            continue
        if not b.spot_ok(foot.x, foot.y, MIN_SEP * 0.9):
            continue
        pp = b.place_point(px, py)
        fp = b.place_point(foot.x, foot.y, MIN_SEP * 0.9)
        b.add(geom.segment(pp, fp))
        return {"P": pp.label, "F": fp.label, "A": base.p1.label, "B": base.p2.label}
    raise RuleFailure("degenerate-sample: no foot spot")


def _through_point_line(b: Builder, perpendicular: bool) -> dict:
    base = b.pick(scene_straights(b.scene))
    a, bb, c = base.coefficients()
    for _ in range(60):
        x, y = b.rand_xy()
        if abs(a * x + bb * y + c) < 0.1 or not b.spot_ok(x, y):
            continue
        p = b.place_point(x, y)
        if perpendicular:
            anchor = Point(p.x + a * 0.25, p.y + bb * 0.25)
        else:
            ux, uy = base.direction
            anchor = Point(p.x + ux * 0.25, p.y + uy * 0.25)
        ln = b.add(geom.line(p, anchor), b.take_label())
        return {"P": p.label, "A": base.p1.label, "B": base.p2.label, "L": ln.label}
    raise RuleFailure("degenerate-sample: no clear point")


@impl("parallel_through_point")
def _r_parallel_through_point(b: Builder) -> dict:
    return _through_point_line(b, perpendicular=False)


@impl("perpendicular_through_point")
def _r_perpendicular_through_point(b: Builder) -> dict:
    return _through_point_line(b, perpendicular=True)


@impl("tangent_from_point")
def _r_tangent_from_point(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        d = b.rng.uniform(circle.radius + 0.15, circle.radius + 0.4)
        x, y = _direction_point(circle.center, theta, d)
        if not b.spot_ok(x, y):
            continue
        p = b.place_point(x, y)
        lines = geom.tangent_from_point(p, circle)
        ln = b.add(lines[b.rng.randrange(2)], b.take_label())
        return {"P": p.label, "O": circle.center.label, "L": ln.label}
    raise RuleFailure("degenerate-sample: no external point")


@impl("tangent_at_point")
def _r_tangent_at_point(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        x, y = _direction_point(circle.center, theta, circle.radius)
        if not b.spot_ok(x, y, MIN_SEP * 0.9):
            continue
        q = b.place_point(x, y, MIN_SEP * 0.9)
        nx, ny = math.cos(theta), math.sin(theta)
        anchor = Point(q.x - ny * 0.25, q.y + nx * 0.25)
        ln = b.add(geom.line(q, anchor), b.take_label())
        return {"O": circle.center.label, "Q": q.label, "L": ln.label}
    raise RuleFailure("degenerate-sample: no boundary spot")


@impl("diameter")
def _r_diameter(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        ax, ay = _direction_point(circle.center, theta, circle.radius)
        bx, by = _direction_point(circle.center, theta + math.pi, circle.radius)
        if b.spot_ok(ax, ay, MIN_SEP * 0.9) and b.spot_ok(bx, by, MIN_SEP * 0.9):
            pa = b.place_point(ax, ay, MIN_SEP * 0.9)
            pb = b.place_point(bx, by, MIN_SEP * 0.9)
            b.add(geom.segment(pa, pb))
            return {"O": circle.center.label, "A": pa.label, "B": pb.label}
    raise RuleFailure("degenerate-sample: no diameter spot")


@impl("chord")
def _r_chord(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        t1 = b.rng.uniform(0, 2 * math.pi)
        gap = b.rng.uniform(math.radians(55), math.radians(140))
        t2 = t1 + gap
        ax, ay = _direction_point(circle.center, t1, circle.radius)
        bx, by = _direction_point(circle.center, t2, circle.radius)
        if math.hypot(ax - bx, ay - by) < MIN_SEG:
            continue
        if b.spot_ok(ax, ay, MIN_SEP * 0.9) and b.spot_ok(bx, by, MIN_SEP * 0.9):
            pa = b.place_point(ax, ay, MIN_SEP * 0.9)
            pb = b.place_point(bx, by, MIN_SEP * 0.9)
            b.add(geom.segment(pa, pb))
            return {"O": circle.center.label, "A": pa.label, "B": pb.label}
    raise RuleFailure("degenerate-sample: no chord spot")


@impl("radius_segment")
def _r_radius_segment(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        x, y = _direction_point(circle.center, theta, circle.radius)
        if b.spot_ok(x, y, MIN_SEP * 0.9):
            p = b.place_point(x, y, MIN_SEP * 0.9)
            b.add(geom.segment(circle.center, p))
            return {"O": circle.center.label, "A": p.label}
    raise RuleFailure("degenerate-sample: no radius spot")


@impl("incircle")
def _r_incircle(b: Builder) -> dict:
    tri = b.pick(
        [
            t
            for t in scene_triangles(b.scene)
            if _inradius(t) >= 0.055
        ]
    )
    center = geom.special_center(tuple(tri.vertices), "incenter")
    r = _inradius(tri)
    pt = b.place_point(center.x, center.y, MIN_SEP * 0.8)
    b.add(Circle(pt, r))
    va, vb, vc = tri.vertices
    return {"A": va.label, "B": vb.label, "C": vc.label, "I": pt.label}


def _inradius(tri: Polygon) -> float:
    va, vb, vc = tri.vertices
    area = geom.triangle_area(va, vb, vc)
    s = geom.polygon_perimeter(tri.vertices) / 2
    return area / s


@impl("circumcircle")
def _r_circumcircle(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    center = _circumcenter_of(va, vb, vc)
    r = geom.distance(center, va)
    if r > 0.42:
        raise RuleFailure("degenerate-sample: circumcircle too large")
    if not (r + 0.02 <= center.x <= 1 - r - 0.02 and r + 0.02 <= center.y <= 1 - r - 0.02):
        raise RuleFailure("degenerate-sample: circumcircle out of canvas")
    pt = b.place_point(center.x, center.y, MIN_SEP * 0.8)
    b.add(Circle(pt, r))
    return {"A": va.label, "B": vb.label, "C": vc.label, "O": pt.label}


@impl("point_reflection")
def _r_point_reflection(b: Builder) -> dict:
    base = b.pick(scene_straights(b.scene))
    a, bb, c = base.coefficients()
    for _ in range(60):
        x, y = b.rand_xy()
        d = a * x + bb * y + c
        if abs(d) < 0.09:
            continue
        qx, qy = x - 2 * d * a, y - 2 * d * bb
        if not (b.spot_ok(x, y) and b.spot_ok(qx, qy)):
            continue
        p = b.place_point(x, y)
        q = b.place_point(qx, qy)
        return {"P": p.label, "Q": q.label, "A": base.p1.label, "B": base.p2.label}
    raise RuleFailure("degenerate-sample: no mirror pair")


@impl("equilateral_triangle")
def _r_equilateral(b: Builder) -> dict:
    return _regular_polygon(b, 3, "ABC")


@impl("isosceles_triangle")
def _r_isosceles(b: Builder) -> dict:
    for _ in range(60):
        ax, ay = b.rand_xy(0.2, 0.8)
        base_dir = b.rng.uniform(0, 2 * math.pi)
        leg = b.rng.uniform(0.22, 0.34)
        half = b.rng.uniform(math.radians(20), math.radians(40))
        bx, by = ax + leg * math.cos(base_dir - half), ay + leg * math.sin(base_dir - half)
        cx, cy = ax + leg * math.cos(base_dir + half), ay + leg * math.sin(base_dir + half)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in ((ax, ay), (bx, by), (cx, cy))):
            continue
        if math.hypot(bx - cx, by - cy) < MIN_SEG:
            continue
        # Base must differ from the legs so the claim stays specific.
        if abs(math.hypot(bx - cx, by - cy) - leg) < 0.04:
            continue
        va = b.place_point(ax, ay)
        vb = b.place_point(bx, by)
        vc = b.place_point(cx, cy)
        b.add(Polygon((va, vb, vc)))
        return {"A": va.label, "B": vb.label, "C": vc.label}
    raise RuleFailure("degenerate-sample: no isosceles spot")


@impl("right_triangle")
def _r_right_triangle(b: Builder) -> dict:
    for _ in range(60):
        ax, ay = b.rand_xy(0.2, 0.8)
        theta = b.rng.uniform(0, 2 * math.pi)
        l1 = b.rng.uniform(0.18, 0.3)
        l2 = b.rng.uniform(0.18, 0.3)
        bx, by = ax + l1 * math.cos(theta), ay + l1 * math.sin(theta)
        cx, cy = ax - l2 * math.sin(theta), ay + l2 * math.cos(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in ((ax, ay), (bx, by), (cx, cy))):
            continue
        va = b.place_point(ax, ay)
        vb = b.place_point(bx, by)
        vc = b.place_point(cx, cy)
        b.add(Polygon((va, vb, vc)))
        return {"A": va.label, "B": vb.label, "C": vc.label}
    raise RuleFailure("degenerate-sample: no right-triangle spot")


@impl("median")
def _r_median(b: Builder) -> dict:
    tri = _pick_triangle(b)
    idx = b.rng.randrange(3)
    va = tri.vertices[idx]
    vb, vc = (tri.vertices[(idx + 1) % 3], tri.vertices[(idx + 2) % 3])
    m = geom.midpoint(vb, vc)
    mp = b.place_point(m.x, m.y, MIN_SEP * 0.9)
    b.add(geom.segment(va, mp))
    return {"A": va.label, "B": vb.label, "C": vc.label, "M": mp.label}


@impl("altitude")
def _r_altitude(b: Builder) -> dict:
    tri = _pick_triangle(b)
    order = list(range(3))
    b.rng.shuffle(order)
    for idx in order:
        va = tri.vertices[idx]
        vb, vc = (tri.vertices[(idx + 1) % 3], tri.vertices[(idx + 2) % 3])
        base = geom.segment(vb, vc)
        foot = geom.project_to_line(va, base)
        t = geom.line_param(foot, base)
        if not (0.15 <= t <= 0.85):
            continue
        if geom.distance(va, foot) < MIN_SEG:
            continue
        if not b.spot_ok(foot.x, foot.y, MIN_SEP * 0.9):
            continue
        fp = b.place_point(foot.x, foot.y, MIN_SEP * 0.9)
        b.add(geom.segment(va, fp))
        return {"A": va.label, "B": vb.label, "C": vc.label, "F": fp.label}
    raise RuleFailure("degenerate-sample: no interior foot")


@impl("midsegment")
def _r_midsegment(b: Builder) -> dict:
    tri = _pick_triangle(b)
    idx = b.rng.randrange(3)
    va = tri.vertices[idx]
    vb, vc = (tri.vertices[(idx + 1) % 3], tri.vertices[(idx + 2) % 3])
    m = geom.midpoint(va, vb)
    n = geom.midpoint(va, vc)
    mp = b.place_point(m.x, m.y, MIN_SEP * 0.8)
    np_ = b.place_point(n.x, n.y, MIN_SEP * 0.8)
    b.add(geom.segment(mp, np_))
    return {"A": va.label, "B": vb.label, "C": vc.label, "M": mp.label, "N": np_.label}


# -- relations ---------------------------------------------------------------


def _companion_segment(b: Builder, seg: LineLike, theta: float, length: float) -> tuple:
    for _ in range(60):
        cx, cy = b.rand_xy(0.18, 0.82)
        ax = cx - 0.5 * length * math.cos(theta)
        ay = cy - 0.5 * length * math.sin(theta)
        bx = cx + 0.5 * length * math.cos(theta)
        by = cy + 0.5 * length * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(ax, ay) and probe.spot_ok(bx, by)):
            continue
        # Keep the pair visually distinct from the base segment.
        mid_base = geom.midpoint(seg.p1, seg.p2)
        if math.hypot(cx - mid_base.x, cy - mid_base.y) < 0.12:
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        b.add(geom.segment(pa, pb))
        return pa, pb
    raise RuleFailure("degenerate-sample: no companion spot")


@impl("parallel_segments")
def _r_parallel_segments(b: Builder) -> dict:
    seg = b.pick(scene_segments(b.scene))
    theta = math.atan2(*reversed(seg.direction))
    length = seg.length * b.rng.uniform(0.75, 1.3)
    pa, pb = _companion_segment(b, seg, theta, max(MIN_SEG, length))
    return {"A": seg.p1.label, "B": seg.p2.label, "C": pa.label, "D": pb.label}


@impl("perpendicular_segments")
def _r_perpendicular_segments(b: Builder) -> dict:
    seg = b.pick(scene_segments(b.scene))
    theta = math.atan2(*reversed(seg.direction)) + math.pi / 2
    length = seg.length * b.rng.uniform(0.75, 1.3)
    pa, pb = _companion_segment(b, seg, theta, max(MIN_SEG, length))
    return {"A": seg.p1.label, "B": seg.p2.label, "C": pa.label, "D": pb.label}


@impl("congruent_segments")
def _r_congruent_segments(b: Builder) -> dict:
    seg = b.pick(scene_segments(b.scene))
    base = math.atan2(*reversed(seg.direction))
    # Clearly oblique to the original so sibling claims stay false.
    theta = base + b.rng.choice([1, -1]) * b.rng.uniform(math.radians(20), math.radians(70))
    pa, pb = _companion_segment(b, seg, theta, seg.length)
    return {"A": seg.p1.label, "B": seg.p2.label, "C": pa.label, "D": pb.label}


def _transformed_triangle(b: Builder, tri: Polygon, scale: float) -> list[Point]:
    va, vb, vc = tri.vertices
    cx = (va.x + vb.x + vc.x) / 3
    cy = (va.y + vb.y + vc.y) / 3
    for _ in range(80):
        theta = b.rng.uniform(0, 2 * math.pi)
        reflect = b.rng.random() < 0.5
        tx, ty = b.rand_xy(0.22, 0.78)
        coords = []
        ok = True
        probe = Builder(b.scene, b.rng, b.pool.clone())
        for v in tri.vertices:
            dx, dy = v.x - cx, v.y - cy
            if reflect:
                dy = -dy
            rx = (dx * math.cos(theta) - dy * math.sin(theta)) * scale
            ry = (dx * math.sin(theta) + dy * math.cos(theta)) * scale
            x, y = tx + rx, ty + ry
            if not probe.spot_ok(x, y):
                ok = False
                break
            coords.append((x, y))
        if not ok:
            continue
        pts = [Point(x, y) for x, y in coords]
        if min(
            geom.distance(pts[i], pts[j]) for i in range(3) for j in range(i + 1, 3)
        ) < MIN_SEP + 0.01:
            continue
        return [b.place_point(x, y) for x, y in coords]
    raise RuleFailure("degenerate-sample: no transformed copy spot")


@impl("congruent_triangles")
def _r_congruent_triangles(b: Builder) -> dict:
    tri = _pick_triangle(b)
    verts = _transformed_triangle(b, tri, 1.0)
    b.add(Polygon(tuple(verts)))
    va, vb, vc = tri.vertices
    return {
        "A": va.label, "B": vb.label, "C": vc.label,
        "D": verts[0].label, "E": verts[1].label, "F": verts[2].label,
    }


@impl("similar_triangles")
def _r_similar_triangles(b: Builder) -> dict:
    tri = _pick_triangle(b)
    scale = b.rng.uniform(0.55, 0.72)
    verts = _transformed_triangle(b, tri, scale)
    b.add(Polygon(tuple(verts)))
    va, vb, vc = tri.vertices
    return {
        "A": va.label, "B": vb.label, "C": vc.label,
        "D": verts[0].label, "E": verts[1].label, "F": verts[2].label,
    }


@impl("congruent_circles")
def _r_congruent_circles(b: Builder) -> dict:
    c1 = _pick_circle(b)
    r = c1.radius
    for _ in range(60):
        x, y = b.rand_xy(r + 0.06, 1 - r - 0.06)
        if math.hypot(x - c1.center.x, y - c1.center.y) < 2 * r + 0.04:
            continue
        if not b.spot_ok(x, y):
            continue
        center = b.place_point(x, y)
        b.add(Circle(center, r))
        return {"O": c1.center.label, "P": center.label}
    raise RuleFailure("degenerate-sample: no twin circle spot")


@impl("concentric_circles")
def _r_concentric_circles(b: Builder) -> dict:
    for _ in range(60):
        r_in = b.rng.uniform(0.08, 0.14)
        r_out = r_in * b.rng.uniform(1.6, 2.2)
        x, y = b.rand_xy(r_out + 0.06, 1 - r_out - 0.06)
        if not b.spot_ok(x, y):
            continue
        center = b.place_point(x, y)
        inner = b.add(Circle(center, r_in), b.take_label())
        outer = b.add(Circle(center, r_out), b.take_label())
        return {"O": center.label, "C": inner.label, "D": outer.label}
    raise RuleFailure("degenerate-sample: no concentric spot")


@impl("collinear_points")
def _r_collinear_points(b: Builder) -> dict:
    for _ in range(60):
        ax, ay = b.rand_xy(0.15, 0.85)
        theta = b.rng.uniform(0, 2 * math.pi)
        total = b.rng.uniform(0.34, 0.6)
        t_mid = b.rng.uniform(0.35, 0.65)
        cx, cy = ax + total * math.cos(theta), ay + total * math.sin(theta)
        bx, by = ax + total * t_mid * math.cos(theta), ay + total * t_mid * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in ((ax, ay), (bx, by), (cx, cy))):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        pc = b.place_point(cx, cy)
        b.add(geom.segment(pa, pc))
        return {"A": pa.label, "B": pb.label, "C": pc.label}
    raise RuleFailure("degenerate-sample: no collinear spot")


@impl("equal_angles")
def _r_equal_angles(b: Builder) -> dict:
    sweep = b.rng.uniform(math.radians(30), math.radians(120))
    wedges = []
    for _ in range(2):
        placed = None
        for _ in range(60):
            vx, vy = b.rand_xy(0.18, 0.82)
            base = b.rng.uniform(0, 2 * math.pi)
            r1, r2 = b.rng.uniform(0.16, 0.24), b.rng.uniform(0.16, 0.24)
            ax, ay = _direction_point(Point(vx, vy), base, r1)
            cx, cy = _direction_point(Point(vx, vy), base + sweep, r2)
            probe = Builder(b.scene, b.rng, b.pool.clone())
            if not all(probe.spot_ok(x, y) for x, y in ((vx, vy), (ax, ay), (cx, cy))):
                continue
            if math.hypot(ax - cx, ay - cy) < MIN_SEP:
                continue
            v = b.place_point(vx, vy)
            arm1 = b.place_point(ax, ay)
            arm2 = b.place_point(cx, cy)
            b.add(geom.segment(v, arm1))
            b.add(geom.segment(v, arm2))
            placed = (arm1, v, arm2)
            break
        if placed is None:
            raise RuleFailure("degenerate-sample: no wedge spot")
        wedges.append(placed)
    (a1, v1, c1), (a2, v2, c2) = wedges
    return {
        "A": a1.label, "B": v1.label, "C": c1.label,
        "D": a2.label, "E": v2.label, "F": c2.label,
    }


@impl("point_on_line")
def _r_point_on_line(b: Builder) -> dict:
    base = b.pick(scene_straights(b.scene))
    for _ in range(60):
        t = b.rng.uniform(0.2, 0.8)
        x = base.p1.x + (base.p2.x - base.p1.x) * t
        y = base.p1.y + (base.p2.y - base.p1.y) * t
        if b.spot_ok(x, y, MIN_SEP * 0.9):
            p = b.place_point(x, y, MIN_SEP * 0.9)
            return {"P": p.label, "A": base.p1.label, "B": base.p2.label}
    raise RuleFailure("degenerate-sample: line fully occupied")


@impl("point_on_circle")
def _r_point_on_circle(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(60):
        theta = b.rng.uniform(0, 2 * math.pi)
        x, y = _direction_point(circle.center, theta, circle.radius)
        if b.spot_ok(x, y, MIN_SEP * 0.9):
            p = b.place_point(x, y, MIN_SEP * 0.9)
            return {"P": p.label, "O": circle.center.label}
    raise RuleFailure("degenerate-sample: circle fully occupied")


@impl("equidistant_point")
def _r_equidistant_point(b: Builder) -> dict:
    for _ in range(60):
        ax, ay = b.rand_xy(0.18, 0.82)
        theta = b.rng.uniform(0, 2 * math.pi)
        half = b.rng.uniform(0.12, 0.2)
        bx, by = ax + 2 * half * math.cos(theta), ay + 2 * half * math.sin(theta)
        mx, my = (ax + bx) / 2, (ay + by) / 2
        h = b.rng.choice([1, -1]) * b.rng.uniform(0.12, 0.24)
        px, py = mx - h * math.sin(theta), my + h * math.cos(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in ((ax, ay), (bx, by), (px, py))):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        pp = b.place_point(px, py)
        b.add(geom.segment(pp, pa))
        b.add(geom.segment(pp, pb))
        return {"P": pp.label, "A": pa.label, "B": pb.label}
    raise RuleFailure("degenerate-sample: no isosceles wedge spot")


@impl("parallel_lines")
def _r_parallel_lines(b: Builder) -> dict:
    for _ in range(60):
        theta = b.rng.uniform(0, math.pi)
        cx, cy = b.rand_xy(0.25, 0.75)
        gap = b.rng.uniform(0.12, 0.24)
        nx, ny = -math.sin(theta), math.cos(theta)
        half = 0.16
        pts = []
        probe = Builder(b.scene, b.rng, b.pool.clone())
        ok = True
        for s in (1, -1):
            ox, oy = cx + s * gap / 2 * nx, cy + s * gap / 2 * ny
            for t in (-half, half):
                x, y = ox + t * math.cos(theta), oy + t * math.sin(theta)
                if not probe.spot_ok(x, y):
                    ok = False
                    break
                pts.append((x, y))
            if not ok:
                break
        if not ok:
            continue
        pa = b.place_point(*pts[0])
        pb = b.place_point(*pts[1])
        pc = b.place_point(*pts[2])
        pd = b.place_point(*pts[3])
        b.add(geom.line(pa, pb))
        b.add(geom.line(pc, pd))
        return {"A": pa.label, "B": pb.label, "C": pc.label, "D": pd.label}
    raise RuleFailure("degenerate-sample: no parallel pair spot")


# -- positional --------------------------------------------------------------


@impl("point_inside_triangle")
def _r_point_inside_triangle(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    for _ in range(80):
        w = [b.rng.uniform(0.2, 1.0) for _ in range(3)]
        s = sum(w)
        x = (w[0] * va.x + w[1] * vb.x + w[2] * vc.x) / s
        y = (w[0] * va.y + w[1] * vb.y + w[2] * vc.y) / s
        p = Point(x, y)
        edge_clear = min(
            geom.point_line_distance(p, geom.segment(e1, e2)) for e1, e2 in tri.edges
        )
        if edge_clear < 0.035:
            continue
        if b.spot_ok(x, y, MIN_SEP * 0.9):
            pp = b.place_point(x, y, MIN_SEP * 0.9)
            return {"P": pp.label, "A": va.label, "B": vb.label, "C": vc.label}
    raise RuleFailure("degenerate-sample: interior too crowded")


@impl("point_outside_triangle")
def _r_point_outside_triangle(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    for _ in range(80):
        x, y = b.rand_xy()
        p = Point(x, y)
        if point_in_polygon(p, tri):
            continue
        edge_clear = min(
            geom.point_line_distance(p, geom.segment(e1, e2)) for e1, e2 in tri.edges
        )
        if edge_clear < 0.05:
            continue
        if b.spot_ok(x, y):
            pp = b.place_point(x, y)
            return {"P": pp.label, "A": va.label, "B": vb.label, "C": vc.label}
    raise RuleFailure("degenerate-sample: no exterior spot")


@impl("point_inside_circle")
def _r_point_inside_circle(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(80):
        theta = b.rng.uniform(0, 2 * math.pi)
        d = b.rng.uniform(MIN_SEP, max(MIN_SEP, circle.radius - 0.045))
        x, y = _direction_point(circle.center, theta, d)
        if d <= circle.radius - 0.045 and b.spot_ok(x, y, MIN_SEP * 0.9):
            p = b.place_point(x, y, MIN_SEP * 0.9)
            return {"P": p.label, "O": circle.center.label}
    raise RuleFailure("degenerate-sample: circle interior crowded")


@impl("point_outside_circle")
def _r_point_outside_circle(b: Builder) -> dict:
    circle = _pick_circle(b)
    for _ in range(80):
        theta = b.rng.uniform(0, 2 * math.pi)
        d = b.rng.uniform(circle.radius + 0.06, circle.radius + 0.3)
        x, y = _direction_point(circle.center, theta, d)
        if b.spot_ok(x, y):
            p = b.place_point(x, y)
            return {"P": p.label, "O": circle.center.label}
    raise RuleFailure("degenerate-sample: no exterior spot")


@impl("point_between")
def _r_point_between(b: Builder) -> dict:
    for _ in range(60):
        ax, ay = b.rand_xy(0.15, 0.85)
        theta = b.rng.uniform(0, 2 * math.pi)
        total = b.rng.uniform(0.3, 0.6)
        t = b.rng.uniform(0.3, 0.7)
        cx, cy = ax + total * math.cos(theta), ay + total * math.sin(theta)
        bx, by = ax + total * t * math.cos(theta), ay + total * t * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in ((ax, ay), (bx, by), (cx, cy))):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        pc = b.place_point(cx, cy)
        b.add(geom.segment(pa, pc))
        return {"A": pa.label, "B": pb.label, "C": pc.label}
    raise RuleFailure("degenerate-sample: no between spot")


def _side_pair(b: Builder, same: bool) -> dict:
    base = b.pick([ln for ln in scene_straights(b.scene) if ln.kind == "line"])
    a, bb, c = base.coefficients()
    for _ in range(80):
        x1, y1 = b.rand_xy()
        x2, y2 = b.rand_xy()
        d1 = a * x1 + bb * y1 + c
        d2 = a * x2 + bb * y2 + c
        if abs(d1) < 0.07 or abs(d2) < 0.07:
            continue
        if same and (d1 > 0) != (d2 > 0):
            continue
        if not same and (d1 > 0) == (d2 > 0):
            continue
        if math.hypot(x1 - x2, y1 - y2) < MIN_SEP:
            continue
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(x1, y1) and probe.spot_ok(x2, y2)):
            continue
        p = b.place_point(x1, y1)
        q = b.place_point(x2, y2)
        return {"P": p.label, "Q": q.label, "A": base.p1.label, "B": base.p2.label}
    raise RuleFailure("degenerate-sample: no side pair")


@impl("same_side_points")
def _r_same_side_points(b: Builder) -> dict:
    return _side_pair(b, same=True)


@impl("opposite_side_points")
def _r_opposite_side_points(b: Builder) -> dict:
    return _side_pair(b, same=False)


def _two_circles(b: Builder, gap_lo: float, gap_hi: float) -> dict:
    """Two circles whose boundary gap falls in [gap_lo, gap_hi]."""
    for _ in range(80):
        r1 = b.rng.uniform(0.09, 0.16)
        r2 = b.rng.uniform(0.09, 0.16)
        gap = b.rng.uniform(gap_lo, gap_hi)
        d = r1 + r2 + gap
        theta = b.rng.uniform(0, 2 * math.pi)
        x1, y1 = b.rand_xy(0.3, 0.7)
        x2, y2 = x1 + d * math.cos(theta), y1 + d * math.sin(theta)
        lo1, hi1 = r1 + 0.04, 1 - r1 - 0.04
        lo2, hi2 = r2 + 0.04, 1 - r2 - 0.04
        if not (lo1 <= x1 <= hi1 and lo1 <= y1 <= hi1):
            continue
        if not (lo2 <= x2 <= hi2 and lo2 <= y2 <= hi2):
            continue
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(x1, y1) and probe.spot_ok(x2, y2)):
            continue
        o = b.place_point(x1, y1)
        p = b.place_point(x2, y2)
        b.add(Circle(o, r1))
        b.add(Circle(p, r2))
        return {"O": o.label, "P": p.label}
    raise RuleFailure("degenerate-sample: no circle pair spot")


@impl("adjacent_circles")
def _r_adjacent_circles(b: Builder) -> dict:
    return _two_circles(b, 0.012, 0.04)


@impl("separated_circles")
def _r_separated_circles(b: Builder) -> dict:
    return _two_circles(b, 0.12, 0.3)


@impl("nested_circles")
def _r_nested_circles(b: Builder) -> dict:
    for _ in range(80):
        r_out = b.rng.uniform(0.18, 0.26)
        r_in = b.rng.uniform(0.06, r_out - 0.1)
        x, y = b.rand_xy(r_out + 0.05, 1 - r_out - 0.05)
        shift = b.rng.uniform(MIN_SEP, r_out - r_in - 0.03)
        theta = b.rng.uniform(0, 2 * math.pi)
        ix, iy = x + shift * math.cos(theta), y + shift * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(x, y) and probe.spot_ok(ix, iy)):
            continue
        o = b.place_point(x, y)
        p = b.place_point(ix, iy)
        b.add(Circle(o, r_out))
        b.add(Circle(p, r_in))
        return {"O": o.label, "P": p.label}
    raise RuleFailure("degenerate-sample: no nested spot")


@impl("triangle_in_circle")
def _r_triangle_in_circle(b: Builder) -> dict:
    for _ in range(80):
        r = b.rng.uniform(0.24, 0.32)
        x, y = b.rand_xy(r + 0.05, 1 - r - 0.05)
        if not b.spot_ok(x, y):
            continue
        center = b.place_point(x, y)
        circle = b.add(Circle(center, r))
        coords = []
        base = b.rng.uniform(0, 2 * math.pi)
        ok = True
        probe = Builder(b.scene, b.rng, b.pool.clone())
        for k in range(3):
            theta = base + 2 * math.pi * k / 3 + b.rng.uniform(-0.4, 0.4)
            rr = b.rng.uniform(0.45, 0.75) * r
            px, py = x + rr * math.cos(theta), y + rr * math.sin(theta)
            if not probe.spot_ok(px, py):
                ok = False
                break
            coords.append((px, py))
        if not ok:
            continue
        pts = [Point(px, py) for px, py in coords]
        if geom.triangle_area(*pts) < 0.008:
            continue
        if min(geom.distance(pts[i], pts[j]) for i in range(3) for j in range(i + 1, 3)) < MIN_SEP + 0.01:
            continue
        verts = [b.place_point(px, py) for px, py in coords]
        b.add(Polygon(tuple(verts)))
        return {
            "O": center.label,
            "A": verts[0].label, "B": verts[1].label, "C": verts[2].label,
        }
    raise RuleFailure("degenerate-sample: no inscribed spot")


@impl("circle_in_triangle")
def _r_circle_in_triangle(b: Builder) -> dict:
    tri = b.pick([t for t in scene_triangles(b.scene) if _inradius(t) >= 0.08])
    center = geom.special_center(tuple(tri.vertices), "incenter")
    r = _inradius(tri) * b.rng.uniform(0.5, 0.75)
    pt = b.place_point(center.x, center.y, MIN_SEP * 0.8)
    b.add(Circle(pt, r))
    va, vb, vc = tri.vertices
    return {"O": pt.label, "A": va.label, "B": vb.label, "C": vc.label}


@impl("segment_through_triangle")
def _r_segment_through_triangle(b: Builder) -> dict:
    tri = _pick_triangle(b)
    va, vb, vc = tri.vertices
    cx = (va.x + vb.x + vc.x) / 3
    cy = (va.y + vb.y + vc.y) / 3
    for _ in range(80):
        theta = b.rng.uniform(0, 2 * math.pi)
        l1 = b.rng.uniform(0.26, 0.42)
        l2 = b.rng.uniform(0.26, 0.42)
        ax, ay = cx + l1 * math.cos(theta), cy + l1 * math.sin(theta)
        bx, by = cx - l2 * math.cos(theta), cy - l2 * math.sin(theta)
        if point_in_polygon(Point(ax, ay), tri) or point_in_polygon(Point(bx, by), tri):
            continue
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(ax, ay) and probe.spot_ok(bx, by)):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        b.add(geom.segment(pa, pb))
        return {
            "A": pa.label, "B": pb.label,
            "C": va.label, "D": vb.label, "E": vc.label,
        }
    raise RuleFailure("degenerate-sample: no crossing spot")


# -- interactions ------------------------------------------------------------


@impl("tangent_circles_external")
def _r_tangent_circles_external(b: Builder) -> dict:
    return _two_circles(b, 0.0, 0.0)


@impl("tangent_circles_internal")
def _r_tangent_circles_internal(b: Builder) -> dict:
    for _ in range(80):
        r_out = b.rng.uniform(0.18, 0.26)
        r_in = b.rng.uniform(0.07, r_out - 0.075)
        d = r_out - r_in
        theta = b.rng.uniform(0, 2 * math.pi)
        x, y = b.rand_xy(r_out + 0.05, 1 - r_out - 0.05)
        ix, iy = x + d * math.cos(theta), y + d * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(x, y) and probe.spot_ok(ix, iy)):
            continue
        o = b.place_point(x, y)
        p = b.place_point(ix, iy)
        b.add(Circle(o, r_out))
        b.add(Circle(p, r_in))
        return {"O": o.label, "P": p.label}
    raise RuleFailure("degenerate-sample: no internal tangency spot")


@impl("circle_pair_line_tangent")
def _r_circle_pair_line_tangent(b: Builder) -> dict:
    for _ in range(80):
        tx, ty = b.rand_xy(0.3, 0.7)
        theta = b.rng.uniform(0, math.pi)
        nx, ny = -math.sin(theta), math.cos(theta)
        r1 = b.rng.uniform(0.1, 0.16)
        r2 = b.rng.uniform(0.1, 0.16)
        c1 = (tx + r1 * nx, ty + r1 * ny)
        c2 = (tx - r2 * nx, ty - r2 * ny)
        ok = True
        for (cx, cy), r in ((c1, r1), (c2, r2)):
            if not (r + 0.04 <= cx <= 1 - r - 0.04 and r + 0.04 <= cy <= 1 - r - 0.04):
                ok = False
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not ok or not (
            probe.spot_ok(*c1) and probe.spot_ok(*c2) and probe.spot_ok(tx, ty, MIN_SEP * 0.9)
        ):
            continue
        o = b.place_point(*c1)
        p = b.place_point(*c2)
        t = b.place_point(tx, ty, MIN_SEP * 0.9)
        b.add(Circle(o, r1))
        b.add(Circle(p, r2))
        anchor = Point(tx + math.cos(theta) * 0.3, ty + math.sin(theta) * 0.3)
        ln = b.add(geom.line(t, anchor), b.take_label())
        return {"O": o.label, "P": p.label, "T": t.label, "L": ln.label}
    raise RuleFailure("degenerate-sample: no shared tangency spot")


@impl("intersecting_circles")
def _r_intersecting_circles(b: Builder) -> dict:
    for _ in range(80):
        r1 = b.rng.uniform(0.12, 0.18)
        r2 = b.rng.uniform(0.12, 0.18)
        d = b.rng.uniform(abs(r1 - r2) + 0.06, r1 + r2 - 0.05)
        theta = b.rng.uniform(0, 2 * math.pi)
        x1, y1 = b.rand_xy(0.3, 0.7)
        x2, y2 = x1 + d * math.cos(theta), y1 + d * math.sin(theta)
        if not (r2 + 0.04 <= x2 <= 1 - r2 - 0.04 and r2 + 0.04 <= y2 <= 1 - r2 - 0.04):
            continue
        if not (r1 + 0.04 <= x1 <= 1 - r1 - 0.04 and r1 + 0.04 <= y1 <= 1 - r1 - 0.04):
            continue
        c1 = Circle(Point(x1, y1), r1)
        c2 = Circle(Point(x2, y2), r2)
        pts = geom.circle_circle_intersection(c1, c2)
        if len(pts) != 2:
            continue
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(x1, y1) and probe.spot_ok(x2, y2)):
            continue
        cross = pts[b.rng.randrange(2)]
        if not probe.spot_ok(cross.x, cross.y, MIN_SEP * 0.9):
            continue
        o = b.place_point(x1, y1)
        p = b.place_point(x2, y2)
        b.add(Circle(o, r1))
        b.add(Circle(p, r2))
        xp = b.place_point(cross.x, cross.y, MIN_SEP * 0.9)
        return {"O": o.label, "P": p.label, "X": xp.label}
    raise RuleFailure("degenerate-sample: no crossing circles spot")


@impl("segment_crosses_circle")
def _r_segment_crosses_circle(b: Builder) -> dict:
    circle = _pick_circle(b)
    ox, oy = circle.center.x, circle.center.y
    for _ in range(80):
        theta = b.rng.uniform(0, 2 * math.pi)
        offset = b.rng.uniform(0, circle.radius - 0.05)
        nx, ny = -math.sin(theta), math.cos(theta)
        mx, my = ox + offset * nx, oy + offset * ny
        reach = circle.radius + b.rng.uniform(0.08, 0.2)
        ax, ay = mx + reach * math.cos(theta), my + reach * math.sin(theta)
        bx, by = mx - reach * math.cos(theta), my - reach * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(ax, ay) and probe.spot_ok(bx, by)):
            continue
        half = math.sqrt(circle.radius**2 - offset**2)
        x1 = Point(mx + half * math.cos(theta), my + half * math.sin(theta))
        x2 = Point(mx - half * math.cos(theta), my - half * math.sin(theta))
        if geom.distance(x1, x2) < MIN_SEP + 0.01:
            continue
        if not (probe.spot_ok(x1.x, x1.y, MIN_SEP * 0.8) and probe.spot_ok(x2.x, x2.y, MIN_SEP * 0.8)):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        px1 = b.place_point(x1.x, x1.y, MIN_SEP * 0.8)
        px2 = b.place_point(x2.x, x2.y, MIN_SEP * 0.8)
        b.add(geom.segment(pa, pb))
        return {
            "A": pa.label, "B": pb.label, "O": circle.center.label,
            "X": px1.label, "Y": px2.label,
        }
    raise RuleFailure("degenerate-sample: no crossing chord spot")


@impl("crossing_segments")
def _r_crossing_segments(b: Builder) -> dict:
    for _ in range(80):
        xx, xy = b.rand_xy(0.3, 0.7)
        t1 = b.rng.uniform(0, math.pi)
        t2 = t1 + b.rng.choice([1, -1]) * b.rng.uniform(math.radians(35), math.radians(145))
        lens = [b.rng.uniform(0.14, 0.26) for _ in range(4)]
        coords = [
            _direction_point(Point(xx, xy), t1, lens[0]),
            _direction_point(Point(xx, xy), t1 + math.pi, lens[1]),
            _direction_point(Point(xx, xy), t2, lens[2]),
            _direction_point(Point(xx, xy), t2 + math.pi, lens[3]),
        ]
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not all(probe.spot_ok(x, y) for x, y in coords):
            continue
        if not probe.spot_ok(xx, xy, MIN_SEP * 0.9):
            continue
        pa = b.place_point(*coords[0])
        pb = b.place_point(*coords[1])
        pc = b.place_point(*coords[2])
        pd = b.place_point(*coords[3])
        xp = b.place_point(xx, xy, MIN_SEP * 0.9)
        b.add(geom.segment(pa, pb))
        b.add(geom.segment(pc, pd))
        return {
            "A": pa.label, "B": pb.label, "C": pc.label, "D": pd.label, "X": xp.label,
        }
    raise RuleFailure("degenerate-sample: no crossing spot")


@impl("segment_chain")
def _r_segment_chain(b: Builder) -> dict:
    for _ in range(80):
        pts = []
        x, y = b.rand_xy(0.18, 0.5)
        theta = b.rng.uniform(-math.pi / 4, math.pi / 4)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        ok = probe.spot_ok(x, y)
        pts.append((x, y))
        for _ in range(3):
            if not ok:
                break
            step = b.rng.uniform(0.16, 0.26)
            x, y = x + step * math.cos(theta), y + step * math.sin(theta)
            theta += b.rng.choice([1, -1]) * b.rng.uniform(math.radians(30), math.radians(80))
            if not probe.spot_ok(x, y):
                ok = False
                break
            for px, py in pts:
                if math.hypot(px - x, py - y) < MIN_SEP:
                    ok = False
                    break
            pts.append((x, y))
        if not ok or len(pts) != 4:
            continue
        placed = [b.place_point(px, py) for px, py in pts]
        for u, v in zip(placed, placed[1:]):
            b.add(geom.segment(u, v))
        return {role: p.label for role, p in zip("ABCD", placed)}
    raise RuleFailure("degenerate-sample: no chain spot")


@impl("shared_vertex_triangles")
def _r_shared_vertex_triangles(b: Builder) -> dict:
    for _ in range(80):
        px, py = b.rand_xy(0.35, 0.65)
        base = b.rng.uniform(0, 2 * math.pi)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not probe.spot_ok(px, py):
            continue
        wings = []
        ok = True
        for w in range(2):
            side = base + w * math.pi + b.rng.uniform(-0.3, 0.3)
            spread = b.rng.uniform(math.radians(30), math.radians(60))
            r1, r2 = b.rng.uniform(0.16, 0.26), b.rng.uniform(0.16, 0.26)
            a = _direction_point(Point(px, py), side - spread / 2, r1)
            c = _direction_point(Point(px, py), side + spread / 2, r2)
            if not (probe.spot_ok(*a) and probe.spot_ok(*c)):
                ok = False
                break
            if math.hypot(a[0] - c[0], a[1] - c[1]) < MIN_SEP + 0.01:
                ok = False
                break
            wings.append((a, c))
        if not ok:
            continue
        p = b.place_point(px, py)
        pa = b.place_point(*wings[0][0])
        pb = b.place_point(*wings[0][1])
        pc = b.place_point(*wings[1][0])
        pd = b.place_point(*wings[1][1])
        b.add(Polygon((p, pa, pb)))
        b.add(Polygon((p, pc, pd)))
        return {
            "P": p.label, "A": pa.label, "B": pb.label, "C": pc.label, "D": pd.label,
        }
    raise RuleFailure("degenerate-sample: no shared vertex spot")


@impl("shared_edge_triangles")
def _r_shared_edge_triangles(b: Builder) -> dict:
    for _ in range(80):
        ax, ay = b.rand_xy(0.3, 0.7)
        theta = b.rng.uniform(0, 2 * math.pi)
        elen = b.rng.uniform(0.2, 0.3)
        bx, by = ax + elen * math.cos(theta), ay + elen * math.sin(theta)
        mx, my = (ax + bx) / 2, (ay + by) / 2
        nx, ny = -math.sin(theta), math.cos(theta)
        h1 = b.rng.uniform(0.13, 0.22)
        h2 = b.rng.uniform(0.13, 0.22)
        cx, cy = mx + h1 * nx + b.rng.uniform(-0.06, 0.06), my + h1 * ny
        dx, dy = mx - h2 * nx + b.rng.uniform(-0.06, 0.06), my - h2 * ny
        probe = Builder(b.scene, b.rng, b.pool.clone())
        quad = ((ax, ay), (bx, by), (cx, cy), (dx, dy))
        if not all(probe.spot_ok(x, y) for x, y in quad):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        pc = b.place_point(cx, cy)
        pd = b.place_point(dx, dy)
        b.add(Polygon((pa, pb, pc)))
        b.add(Polygon((pa, pb, pd)))
        return {"A": pa.label, "B": pb.label, "C": pc.label, "D": pd.label}
    raise RuleFailure("degenerate-sample: no shared edge spot")


@impl("curve_crosses_segment")
def _r_curve_crosses_segment(b: Builder) -> dict:
    for _ in range(80):
        ax, ay = b.rand_xy(0.2, 0.8)
        theta = b.rng.uniform(0, 2 * math.pi)
        slen = b.rng.uniform(0.3, 0.5)
        bx, by = ax + slen * math.cos(theta), ay + slen * math.sin(theta)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(ax, ay) and probe.spot_ok(bx, by)):
            continue
        mx, my = (ax + bx) / 2, (ay + by) / 2
        nx, ny = -math.sin(theta), math.cos(theta)
        amp = b.rng.uniform(0.1, 0.16)
        c0 = (mx + amp * nx - 0.3 * slen * math.cos(theta),
              my + amp * ny - 0.3 * slen * math.sin(theta))
        c1 = (mx - amp * nx + 0.3 * slen * math.cos(theta),
              my - amp * ny + 0.3 * slen * math.sin(theta))
        if not all(0.05 <= v <= 0.95 for v in (*c0, *c1)):
            continue
        pa = b.place_point(ax, ay)
        pb = b.place_point(bx, by)
        b.add(geom.segment(pa, pb))
        curve = b.add(
            OpenCurve((Point(*c0), Point(mx + 0.0, my + 0.0), Point(*c1)), "smooth"),
            b.take_label(),
        )
        return {"A": pa.label, "B": pb.label, "W": curve.label}
    raise RuleFailure("degenerate-sample: no crossing curve spot")


@impl("square_in_circle")
def _r_square_in_circle(b: Builder) -> dict:
    for _ in range(80):
        r = b.rng.uniform(0.2, 0.28)
        x, y = b.rand_xy(r + 0.05, 1 - r - 0.05)
        base = b.rng.uniform(0, 2 * math.pi)
        coords = [
            _direction_point(Point(x, y), base + k * math.pi / 2, r) for k in range(4)
        ]
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not probe.spot_ok(x, y):
            continue
        if not all(probe.spot_ok(px, py, MIN_SEP * 0.9) for px, py in coords):
            continue
        center = b.place_point(x, y)
        b.add(Circle(center, r))
        verts = [b.place_point(px, py, MIN_SEP * 0.9) for px, py in coords]
        b.add(Polygon(tuple(verts)))
        return {
            "O": center.label,
            "A": verts[0].label, "B": verts[1].label,
            "C": verts[2].label, "D": verts[3].label,
        }
    raise RuleFailure("degenerate-sample: no inscribed square spot")


@impl("common_tangent_line")
def _r_common_tangent_line(b: Builder) -> dict:
    for _ in range(80):
        theta = b.rng.uniform(0, math.pi)
        ux, uy = math.cos(theta), math.sin(theta)
        nx, ny = -uy, ux
        x0, y0 = b.rand_xy(0.3, 0.7)
        t1 = b.rng.uniform(-0.22, -0.08)
        t2 = b.rng.uniform(0.08, 0.22)
        r1 = b.rng.uniform(0.08, 0.14)
        r2 = b.rng.uniform(0.08, 0.14)
        c1 = (x0 + t1 * ux + r1 * nx, y0 + t1 * uy + r1 * ny)
        c2 = (x0 + t2 * ux + r2 * nx, y0 + t2 * uy + r2 * ny)
        if math.hypot(c1[0] - c2[0], c1[1] - c2[1]) < r1 + r2 + 0.03:
            continue
        ok = True
        for (cx, cy), r in ((c1, r1), (c2, r2)):
            if not (r + 0.04 <= cx <= 1 - r - 0.04 and r + 0.04 <= cy <= 1 - r - 0.04):
                ok = False
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not ok or not (probe.spot_ok(*c1) and probe.spot_ok(*c2)):
            continue
        o = b.place_point(*c1)
        p = b.place_point(*c2)
        b.add(Circle(o, r1))
        b.add(Circle(p, r2))
        ln = b.add(
            geom.line(Point(x0, y0), Point(x0 + ux * 0.3, y0 + uy * 0.3)), b.take_label()
        )
        return {"O": o.label, "P": p.label, "L": ln.label}
    raise RuleFailure("degenerate-sample: no common tangent spot")


@impl("segment_tangent_circle")
def _r_segment_tangent_circle(b: Builder) -> dict:
    for _ in range(80):
        tx, ty = b.rand_xy(0.3, 0.7)
        theta = b.rng.uniform(0, math.pi)
        ux, uy = math.cos(theta), math.sin(theta)
        nx, ny = -uy, ux
        r = b.rng.uniform(0.1, 0.16)
        cx, cy = tx + r * nx, ty + r * ny
        if not (r + 0.04 <= cx <= 1 - r - 0.04 and r + 0.04 <= cy <= 1 - r - 0.04):
            continue
        l1 = b.rng.uniform(0.14, 0.24)
        l2 = b.rng.uniform(0.14, 0.24)
        a = (tx - l1 * ux, ty - l1 * uy)
        c = (tx + l2 * ux, ty + l2 * uy)
        probe = Builder(b.scene, b.rng, b.pool.clone())
        if not (probe.spot_ok(*a) and probe.spot_ok(*c) and probe.spot_ok(cx, cy)):
            continue
        pa = b.place_point(*a)
        pb = b.place_point(*c)
        o = b.place_point(cx, cy)
        b.add(Circle(o, r))
        b.add(geom.segment(pa, pb))
        return {"A": pa.label, "B": pb.label, "O": o.label}
    raise RuleFailure("degenerate-sample: no tangent segment spot")

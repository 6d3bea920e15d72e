import math
import random

import pytest

from planebench import geom
from planebench.geom import (
    Circle,
    DegenerateAngleError,
    DegenerateTriangleError,
    Point,
    Reflection,
    Rotation,
    Scaling,
    Tolerance,
    Translation,
    angle_trisect,
    midpoint,
    special_center,
    tangent_from_point,
    transform,
)

EPS = 1e-9


def dist_to_side(p, a, b):
    # Independent point-to-line distance via the cross-product area formula.
    num = abs((b.x - a.x) * (a.y - p.y) - (a.x - p.x) * (b.y - a.y))
    return num / math.hypot(b.x - a.x, b.y - a.y)


class TestMidpoint:
    def test_axis_pair(self):
        m = midpoint(Point(0, 0), Point(2, 0))
        assert (m.x, m.y) == (1.0, 0.0)

    def test_degenerate_identity(self):
        m = midpoint(Point(1, 1), Point(1, 1))
        assert (m.x, m.y) == (1.0, 1.0)

    def test_componentwise_average_oracle(self):
        a, b = Point(0.3, -2.1), Point(4.7, 0.9)
        expected = ((0.3 + 4.7) / 2.0, (-2.1 + 0.9) / 2.0)
        m = midpoint(a, b)
        assert abs(m.x - expected[0]) < EPS and abs(m.y - expected[1]) < EPS

    def test_equidistance_property(self):
        rng = random.Random(11)
        for _ in range(100):
            a = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            b = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            m = midpoint(a, b)
            assert abs(geom.distance(a, m) - geom.distance(b, m)) < EPS


class TestSpecialCenter:
    def test_345_incenter(self):
        # Analytic: (a*A + b*B + c*C)/(a+b+c) with a=5, b=4, c=3 gives (1, 1).
        tri = (Point(0, 0), Point(3, 0), Point(0, 4))
        c = special_center(tri, "incenter")
        assert abs(c.x - 1.0) < EPS and abs(c.y - 1.0) < EPS
        # Cross-check: equidistant from all three sides.
        d = [
            dist_to_side(c, tri[0], tri[1]),
            dist_to_side(c, tri[1], tri[2]),
            dist_to_side(c, tri[2], tri[0]),
        ]
        assert max(d) - min(d) < EPS

    def test_equilateral_incenter_is_centroid(self):
        tri = (Point(0, 0), Point(1, 0), Point(0.5, math.sqrt(3) / 2))
        c = special_center(tri, "incenter")
        g = Point(sum(p.x for p in tri) / 3, sum(p.y for p in tri) / 3)
        assert geom.distance(c, g) < EPS

    def test_345_excenter_equidistant_brute_force(self):
        tri = (Point(0, 0), Point(3, 0), Point(0, 4))
        e = special_center(tri, "excenter", opposite=0)
        d = [
            dist_to_side(e, tri[0], tri[1]),
            dist_to_side(e, tri[1], tri[2]),
            dist_to_side(e, tri[2], tri[0]),
        ]
        assert max(d) - min(d) < 1e-6

    def test_degenerate_triangle(self):
        with pytest.raises(DegenerateTriangleError):
            special_center((Point(0, 0), Point(1, 0), Point(2, 0)), "incenter")


class TestAngleTrisect:
    def test_right_angle(self):
        v = Point(0, 0)
        r1, r2 = angle_trisect(v, Point(1, 0), Point(0, 1))
        assert abs(geom.angle_of(v, r1.p2) - math.radians(30)) < 1e-9
        assert abs(geom.angle_of(v, r2.p2) - math.radians(60)) < 1e-9

    def test_60_degrees(self):
        v = Point(0, 0)
        arm_b = Point(math.cos(math.radians(60)), math.sin(math.radians(60)))
        r1, r2 = angle_trisect(v, Point(1, 0), arm_b)
        assert abs(geom.angle_of(v, r1.p2) - math.radians(20)) < 1e-9
        assert abs(geom.angle_of(v, r2.p2) - math.radians(40)) < 1e-9

    def test_random_subangles_equal(self):
        rng = random.Random(3)
        for _ in range(50):
            v = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
            t0 = rng.uniform(0, 2 * math.pi)
            sweep = rng.uniform(0.2, math.pi - 0.2)
            a = Point(v.x + math.cos(t0), v.y + math.sin(t0))
            b = Point(v.x + math.cos(t0 + sweep), v.y + math.sin(t0 + sweep))
            r1, r2 = angle_trisect(v, a, b)
            subs = [
                geom.angle_between(v, a, r1.p2),
                geom.angle_between(v, r1.p2, r2.p2),
                geom.angle_between(v, r2.p2, b),
            ]
            assert max(subs) - min(subs) < 1e-9
            assert abs(sum(subs) - sweep) < 3e-9

    def test_collinear_arms_raise(self):
        with pytest.raises(DegenerateAngleError):
            angle_trisect(Point(0, 0), Point(1, 0), Point(2, 0))
        with pytest.raises(DegenerateAngleError):
            angle_trisect(Point(0, 0), Point(1, 0), Point(-1, 0))


class TestTangentFromPoint:
    def test_external_point_two_tangents(self):
        c = Circle(Point(0, 0), 1.0)
        lines = tangent_from_point(Point(2, 0), c)
        assert len(lines) == 2
        for ln in lines:
            # Distance-to-center oracle.
            assert abs(geom.point_infinite_line_distance(c.center, ln) - 1.0) < 1e-9
            assert geom.point_infinite_line_distance(Point(2, 0), ln) < 1e-9

    def test_point_on_circle(self):
        c = Circle(Point(0, 0), 1.0)
        p = Point(1, 0)
        lines = tangent_from_point(p, c)
        assert len(lines) == 1
        ux, uy = lines[0].direction
        # Orthogonal to the radius at p.
        assert abs(ux * 1.0 + uy * 0.0) < 1e-9

    def test_center_point_no_tangent(self):
        assert tangent_from_point(Point(0, 0), Circle(Point(0, 0), 1.0)) == []

    def test_trichotomy_matches_counts(self):
        rng = random.Random(7)
        tol = Tolerance()
        for _ in range(200):
            c = Circle(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.2, 1.0))
            p = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
            d = geom.distance(p, c.center)
            n = len(tangent_from_point(p, c, tol))
            if abs(d - c.radius) <= tol.eps:
                assert n == 1
            elif d < c.radius:
                assert n == 0
            else:
                assert n == 2


class TestTransform:
    def test_rotate_quarter_turn(self):
        p = transform(Point(1, 0), Rotation(Point(0, 0), math.pi / 2))
        assert abs(p.x) < 1e-12 and abs(p.y - 1.0) < 1e-12

    def test_reflect_across_x_axis(self):
        axis = geom.line(Point(0, 0), Point(1, 0))
        p = transform(Point(2, 3), Reflection(axis))
        assert abs(p.x - 2.0) < 1e-12 and abs(p.y + 3.0) < 1e-12

    def test_random_isometry_preserves_distances(self):
        rng = random.Random(21)
        for _ in range(50):
            pts = [Point(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(5)]
            poly = geom.Polygon(tuple(pts[:3]) + tuple(pts[3:]))
            which = rng.choice(["t", "r", "f"])
            if which == "t":
                t = Translation(rng.uniform(-1, 1), rng.uniform(-1, 1))
            elif which == "r":
                t = Rotation(Point(rng.uniform(0, 1), rng.uniform(0, 1)), rng.uniform(0, 7))
            else:
                t = Reflection(
                    geom.line(
                        Point(rng.uniform(0, 1), rng.uniform(0, 1)),
                        Point(rng.uniform(2, 3), rng.uniform(0, 1)),
                    )
                )
            moved = transform(poly, t)
            for i in range(5):
                for j in range(i + 1, 5):
                    d0 = geom.distance(poly.vertices[i], poly.vertices[j])
                    d1 = geom.distance(moved.vertices[i], moved.vertices[j])
                    assert abs(d0 - d1) < 1e-9

    def test_uniform_scale_multiplies_distances(self):
        rng = random.Random(5)
        pts = [Point(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(4)]
        t = Scaling(Point(0.3, 0.3), 2.5)
        moved = [transform(p, t) for p in pts]
        for i in range(4):
            for j in range(i + 1, 4):
                assert abs(geom.distance(moved[i], moved[j]) - 2.5 * geom.distance(pts[i], pts[j])) < 1e-9

    def test_isometry_roundtrip(self):
        rng = random.Random(13)
        for _ in range(30):
            p = Point(rng.uniform(0, 1), rng.uniform(0, 1))
            t = Rotation(Point(rng.uniform(0, 1), rng.uniform(0, 1)), rng.uniform(0, 7))
            back = transform(transform(p, t), geom.inverse(t))
            assert geom.distance(p, back) < 1e-9

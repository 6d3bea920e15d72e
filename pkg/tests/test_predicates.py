import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planebench import geom
from planebench.geom import Circle, Point, Polygon, Tolerance
from planebench.predicates import (
    AngleArm,
    MissingRefError,
    PredicateError,
    binding_verdict,
    eval_binding,
    eval_predicate,
    point_in_polygon,
)
from planebench.scene import Scene

TOL = Tolerance()

unit_square = Polygon(
    (Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1))
)


def seg(ax, ay, bx, by):
    return geom.segment(Point(ax, ay), Point(bx, by))


class TestBasicPredicates:
    def test_parallel_horizontal_pair(self):
        assert eval_predicate("parallel", (seg(0, 0, 1, 0), seg(0, 1, 5, 1)))

    def test_parallel_symmetry(self):
        a, b = seg(0, 0, 1, 0.3), seg(2, 2, 4, 2.6)
        assert eval_predicate("parallel", (a, b)) == eval_predicate("parallel", (b, a))

    def test_orthogonal(self):
        assert eval_predicate("orthogonal", (seg(0, 0, 1, 0), seg(2, -1, 2, 5)))
        assert not eval_predicate("orthogonal", (seg(0, 0, 1, 0), seg(0, 0, 1, 1)))

    def test_tangent_line_circle(self):
        horiz = geom.line(Point(-5, 1), Point(5, 1))
        assert eval_predicate("tangent", (horiz, Circle(Point(0, 0), 1.0)))
        assert not eval_predicate("tangent", (horiz, Circle(Point(0, 0), 0.5)))

    def test_tangent_circle_circle(self):
        c1 = Circle(Point(0, 0), 1.0)
        assert eval_predicate("tangent", (c1, Circle(Point(3, 0), 2.0)))
        assert eval_predicate("tangent", (c1, Circle(Point(0.5, 0), 0.5)))
        assert not eval_predicate("tangent", (c1, Circle(Point(5, 0), 1.0)))

    def test_point_inside_square(self):
        assert eval_predicate("point_inside", (Point(0.5, 0.5), unit_square))
        assert not eval_predicate("point_inside", (Point(2, 2), unit_square))

    def test_between(self):
        assert eval_predicate("between", (Point(0.5, 0), Point(0, 0), Point(1, 0)))
        assert not eval_predicate("between", (Point(1.5, 0), Point(0, 0), Point(1, 0)))
        assert not eval_predicate("between", (Point(0.5, 0.2), Point(0, 0), Point(1, 0)))

    def test_congruent_symmetry(self):
        p = Polygon((Point(0, 0), Point(1, 0), Point(0.5, 0.8)))
        q = Polygon((Point(2, 2), Point(3, 2), Point(2.5, 2.8)))
        assert eval_predicate("congruent", (p, q)) == eval_predicate("congruent", (q, p))
        assert eval_predicate("congruent", (p, q))

    def test_congruent_rejects_different_shape(self):
        p = Polygon((Point(0, 0), Point(1, 0), Point(0.5, 0.8)))
        q = Polygon((Point(0, 0), Point(1.2, 0), Point(0.5, 0.8)))
        assert not eval_predicate("congruent", (p, q))

    def test_similar_scaled_triangle(self):
        p = Polygon((Point(0, 0), Point(1, 0), Point(0.2, 0.7)))
        q = Polygon(tuple(Point(2 * v.x + 3, 2 * v.y - 1) for v in p.vertices))
        assert eval_predicate("similar", (p, q))
        assert not eval_predicate("congruent", (p, q))

    def test_collinear(self):
        assert eval_predicate("collinear", (Point(0, 0), Point(1, 1), Point(2, 2)))
        assert not eval_predicate("collinear", (Point(0, 0), Point(1, 1), Point(2, 2.1)))

    def test_equal_angle(self):
        a1 = AngleArm(Point(1, 0), Point(0, 0), Point(0, 1))
        a2 = AngleArm(Point(2, 2), Point(2, 1), Point(1, 1))
        assert eval_predicate("equal_angle", (a1, a2))

    def test_same_side(self):
        ln = geom.line(Point(0, 0), Point(1, 0))
        assert eval_predicate("same_side", (Point(0, 1), Point(5, 2), ln))
        assert not eval_predicate("same_side", (Point(0, 1), Point(5, -2), ln))

    def test_adjacent_threshold(self):
        near = (Point(0, 0), Point(0.01, 0))
        far = (Point(0, 0), Point(0.5, 0))
        assert eval_predicate("adjacent", near)
        assert not eval_predicate("adjacent", far)

    def test_connected_shared_endpoint(self):
        s1 = seg(0, 0, 1, 0)
        s2 = seg(1, 0, 1, 1)
        s3 = seg(2, 0, 3, 0)
        assert eval_predicate("connected", (s1, s2))
        assert not eval_predicate("connected", (s1, s3))

    def test_intersects(self):
        assert eval_predicate("intersects", (seg(0, 0, 1, 1), seg(0, 1, 1, 0)))
        assert not eval_predicate("intersects", (seg(0, 0, 1, 0), seg(0, 1, 1, 1)))
        assert eval_predicate("intersects", (Circle(Point(0, 0), 1), Circle(Point(1, 0), 1)))

    def test_is_kind(self):
        tri = Polygon((Point(0, 0), Point(1, 0), Point(0.5, 1)))
        sq = Polygon((Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)))
        assert eval_predicate("is_kind", (tri, "triangle"))
        assert not eval_predicate("is_kind", (tri, "quadrilateral"))
        assert eval_predicate("is_kind", (sq, "square"))
        assert eval_predicate("is_kind", (sq, "rectangle"))

    def test_convex(self):
        assert eval_predicate("convex", (unit_square,))
        dent = Polygon((Point(0, 0), Point(1, 0), Point(0.5, 0.2), Point(0.5, 1)))
        assert not eval_predicate("convex", (dent,))

    def test_contains(self):
        big = Circle(Point(0.5, 0.5), 0.45)
        small = Circle(Point(0.5, 0.5), 0.1)
        assert eval_predicate("contains", (big, small))
        assert not eval_predicate("contains", (small, big))
        assert eval_predicate("contains", (unit_square, small))

    def test_arity_mismatch(self):
        with pytest.raises(PredicateError):
            eval_predicate("parallel", (seg(0, 0, 1, 0),))
        with pytest.raises(PredicateError):
            eval_predicate("point_inside", (unit_square, Point(0, 0)))
        with pytest.raises(PredicateError):
            eval_predicate("no_such_kind", ())


class TestPointInsideOracle:
    def ray_cast_oracle(self, p, poly, probes=720):
        # Independent check: walk a probe ray in many directions and count
        # boundary crossings; inside iff the angular winding is consistent.
        # Here: classic crossing count along +x with jittered y to dodge
        # vertex grazing.
        crossings = 0
        n = len(poly.vertices)
        y = p.y + 1e-9
        for i in range(n):
            a, b = poly.vertices[i], poly.vertices[(i + 1) % n]
            if (a.y > y) != (b.y > y):
                x_cross = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
                if x_cross > p.x:
                    crossings += 1
        return crossings % 2 == 1

    def test_random_polygons_agree_with_oracle(self):
        rng = random.Random(99)
        for _ in range(100):
            cx, cy = rng.uniform(0.3, 0.7), rng.uniform(0.3, 0.7)
            n = rng.randint(3, 8)
            verts = []
            for i in range(n):
                t = 2 * math.pi * i / n
                r = rng.uniform(0.15, 0.3)
                verts.append(Point(cx + r * math.cos(t), cy + r * math.sin(t)))
            poly = Polygon(tuple(verts))
            p = Point(rng.uniform(0, 1), rng.uniform(0, 1))
            assert point_in_polygon(p, poly) == self.ray_cast_oracle(p, poly)


coord = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(ax=coord, ay=coord, bx=coord, by=coord)
def test_midpoint_equidistant_property(ax, ay, bx, by):
    a, b = Point(ax, ay), Point(bx, by)
    m = geom.midpoint(a, b)
    assert abs(geom.distance(a, m) - geom.distance(b, m)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(
    x1=coord, y1=coord, x2=coord, y2=coord, x3=coord, y3=coord, x4=coord, y4=coord
)
def test_parallel_symmetric_property(x1, y1, x2, y2, x3, y3, x4, y4):
    if math.hypot(x2 - x1, y2 - y1) < 1e-6 or math.hypot(x4 - x3, y4 - y3) < 1e-6:
        return
    a = seg(x1, y1, x2, y2)
    b = seg(x3, y3, x4, y4)
    assert eval_predicate("parallel", (a, b)) == eval_predicate("parallel", (b, a))


class TestBindings:
    def build_scene(self):
        scene = Scene()
        scene, a = scene.add(Point(0, 0), "A")
        scene, b = scene.add(Point(1, 0), "B")
        scene, m = scene.add(Point(0.5, 0), "M")
        scene, s = scene.add(geom.segment(a, b))
        return scene

    def test_midpoint_binding_true(self):
        scene = self.build_scene()
        expr = [
            "and",
            ["atom", "between", ["pt", "M"], ["pt", "A"], ["pt", "B"]],
            ["atom", "equal_length", ["seg", "A", "M"], ["seg", "M", "B"]],
        ]
        roles = {"A": "A", "B": "B", "M": "M"}
        assert eval_binding(expr, scene, roles)
        assert binding_verdict(expr, scene, roles) == "true"

    def test_permuted_binding_false(self):
        scene = self.build_scene()
        expr = [
            "and",
            ["atom", "between", ["pt", "M"], ["pt", "A"], ["pt", "B"]],
            ["atom", "equal_length", ["seg", "A", "M"], ["seg", "M", "B"]],
        ]
        roles = {"A": "M", "M": "A", "B": "B"}  # A <-> M swapped
        assert binding_verdict(expr, scene, roles) == "false"

    def test_absent_label(self):
        scene = self.build_scene()
        expr = ["atom", "point_on", ["pt", "Z"], ["lineref", "A", "B"]]
        assert binding_verdict(expr, scene, {"Z": "Z", "A": "A", "B": "B"}) == "absent"

    def test_lineref_resolves_scene_segment(self):
        scene = self.build_scene()
        expr = ["atom", "is_kind", ["lineref", "A", "B"], ["lit", "segment"]]
        assert eval_binding(expr, scene, {"A": "A", "B": "B"})
        with pytest.raises(MissingRefError):
            eval_binding(
                ["atom", "is_kind", ["lineref", "A", "M"], ["lit", "segment"]],
                scene,
                {"A": "A", "M": "M"},
            )

    def test_not_and_or(self):
        scene = self.build_scene()
        inside = ["atom", "between", ["pt", "A"], ["pt", "M"], ["pt", "B"]]
        assert not eval_binding(inside, scene, {"A": "A", "B": "B", "M": "M"})
        assert eval_binding(["not", inside], scene, {"A": "A", "B": "B", "M": "M"})

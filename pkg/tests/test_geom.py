import math

import pytest
from hypothesis import given, strategies as st

from borsukgraph.geom import (
    Line2,
    Overlap,
    Point2,
    Tolerance,
    angular_order,
    dist,
    rotate,
    seg_line_intersection,
    seg_seg_intersection,
    side_of,
)

TOL = Tolerance()


def test_line_canonical_form():
    l = Line2.through(Point2(0, 0), Point2(0, 1))
    assert (l.a, l.b, l.c) == (1.0, 0.0, 0.0)
    l2 = Line2.through(Point2(0, 1), Point2(0, 0))
    assert l == l2
    horiz = Line2.through(Point2(0, 2), Point2(5, 2))
    assert (horiz.a, horiz.b) == (0.0, 1.0)
    assert horiz.c == pytest.approx(2.0)


def test_line_rejects_zero_normal():
    with pytest.raises(ValueError):
        Line2(0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        Line2.through(Point2(1, 1), Point2(1, 1))


def test_signed_distance_and_sides():
    l = Line2(1.0, 0.0, 0.5)
    assert l.signed_distance(Point2(0.7, 3.0)) == pytest.approx(0.2)
    assert side_of(l, Point2(0.7, 0.0), TOL) == 1
    assert side_of(l, Point2(0.2, 0.0), TOL) == -1
    assert side_of(l, Point2(0.5 + 1e-12, 9.0), TOL) == 0


def test_seg_line_crossing():
    l = Line2(1.0, 0.0, 0.5)
    p = seg_line_intersection(Point2(0, 0), Point2(1, 1), l, TOL)
    assert isinstance(p, Point2)
    assert (p.x, p.y) == (pytest.approx(0.5), pytest.approx(0.5))


def test_seg_line_endpoint_touch_counts():
    l = Line2(1.0, 0.0, 1.0)
    p = seg_line_intersection(Point2(0, 0), Point2(1, 0), l, TOL)
    assert p == Point2(1, 0)


def test_seg_line_miss_and_overlap():
    l = Line2(1.0, 0.0, 2.0)
    assert seg_line_intersection(Point2(0, 0), Point2(1, 1), l, TOL) is None
    r = seg_line_intersection(Point2(2, -1), Point2(2, 4), l, TOL)
    assert isinstance(r, Overlap)


def test_seg_line_degenerate_rejected():
    l = Line2(1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        seg_line_intersection(Point2(1, 1), Point2(1, 1), l, TOL)


def test_seg_seg_basic():
    r = seg_seg_intersection(Point2(0, 0), Point2(1, 1),
                             Point2(0, 1), Point2(1, 0), TOL)
    assert isinstance(r, Point2)
    assert (r.x, r.y) == (pytest.approx(0.5), pytest.approx(0.5))
    assert seg_seg_intersection(Point2(0, 0), Point2(1, 0),
                                Point2(0, 1), Point2(1, 1), TOL) is None
    touch = seg_seg_intersection(Point2(0, 0), Point2(1, 0),
                                 Point2(1, 0), Point2(2, 5), TOL)
    assert touch == Point2(1, 0)


def test_seg_seg_collinear():
    r = seg_seg_intersection(Point2(0, 0), Point2(2, 0),
                             Point2(1, 0), Point2(3, 0), TOL)
    assert isinstance(r, Overlap)
    # collinear but only sharing one endpoint
    r2 = seg_seg_intersection(Point2(0, 0), Point2(1, 0),
                              Point2(1, 0), Point2(2, 0), TOL)
    assert isinstance(r2, Point2)
    r3 = seg_seg_intersection(Point2(0, 0), Point2(1, 0),
                              Point2(2, 0), Point2(3, 0), TOL)
    assert r3 is None


def test_angular_order_basic():
    c = Point2(0, 0)
    pts = [Point2(0, 1), Point2(1, 0), Point2(-1, 0.0), Point2(0, -1)]
    assert angular_order(c, pts, TOL) == [1, 0, 2, 3]


def test_angular_order_tie_by_distance():
    c = Point2(0, 0)
    pts = [Point2(2, 0), Point2(1, 0)]
    assert angular_order(c, pts, TOL) == [1, 0]
    with pytest.raises(ValueError):
        angular_order(c, [Point2(0, 0)], TOL)


def test_rotate():
    p = rotate(Point2(1, 0), math.pi / 2)
    assert p.x == pytest.approx(0.0, abs=1e-15)
    assert p.y == pytest.approx(1.0)
    q = rotate(Point2(2, 1), math.pi, about=Point2(1, 1))
    assert (q.x, q.y) == (pytest.approx(0.0), pytest.approx(1.0))


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("BORSUKGRAPH_EPS", "1e-6")
    assert Tolerance.default().eps_geom == 1e-6
    monkeypatch.setenv("BORSUKGRAPH_EPS", "junk")
    with pytest.raises(ValueError):
        Tolerance.default()
    monkeypatch.setenv("BORSUKGRAPH_EPS", "5")
    with pytest.raises(ValueError):
        Tolerance.default()
    monkeypatch.delenv("BORSUKGRAPH_EPS")
    assert Tolerance.default().eps_geom == 1e-9


coords = st.floats(min_value=-50, max_value=50,
                   allow_nan=False, allow_infinity=False)


@given(coords, coords, coords)
def test_line_canonical_invariants(a, b, c):
    if math.hypot(a, b) < 1e-6:
        return
    l = Line2(a, b, c)
    assert math.hypot(l.a, l.b) == pytest.approx(1.0)
    assert l.a > 0 or (l.a == 0 and l.b > 0)
    # scaling the equation gives the same canonical line
    l2 = Line2(3 * a, 3 * b, 3 * c)
    assert l2.a == pytest.approx(l.a, abs=1e-12)
    assert l2.b == pytest.approx(l.b, abs=1e-12)
    assert l2.c == pytest.approx(l.c, abs=1e-9)


@given(coords, coords, coords, coords)
def test_seg_line_point_lies_on_both(x1, y1, x2, y2):
    p, q = Point2(x1, y1), Point2(x2, y2)
    if dist(p, q) < 1e-3:
        return
    l = Line2(1.0, 1.0, 1.0)
    r = seg_line_intersection(p, q, l, TOL)
    if isinstance(r, Point2):
        assert abs(l.signed_distance(r)) < 1e-6
        # on the segment: distances add up
        assert dist(p, r) + dist(r, q) == pytest.approx(dist(p, q), abs=1e-6)

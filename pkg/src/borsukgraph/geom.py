"""Planar geometry primitives shared by every other module.

Points are immutable float pairs.  Lines are stored in canonical normal
form ``a*x + b*y = c`` with ``(a, b)`` a unit vector and the sign fixed so
that ``a > 0``, or ``a == 0`` and ``b > 0``.  That makes equal lines compare
equal regardless of how they were constructed, and it gives ``side_of`` a
deterministic meaning for the plus/minus halfplanes.

All tolerance decisions go through a single :class:`Tolerance` object.
``eps_geom`` is an absolute snapping distance; ``eps_len`` is a relative
slack used when comparing accumulated path lengths.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

_ENV_EPS = "BORSUKGRAPH_EPS"


@dataclass(frozen=True)
class Tolerance:
    """Numeric slack; ``eps_geom`` absolute, ``eps_len`` relative."""

    eps_geom: float = 1e-9
    eps_len: float = 1e-12

    @staticmethod
    def default() -> "Tolerance":
        raw = os.environ.get(_ENV_EPS)
        if raw is None:
            return Tolerance()
        try:
            eps = float(raw)
        except ValueError as exc:
            raise ValueError(f"{_ENV_EPS} must be a float, got {raw!r}") from exc
        if not (0.0 < eps < 1.0):
            raise ValueError(f"{_ENV_EPS} out of range (0, 1): {eps}")
        return Tolerance(eps_geom=eps)


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Overlap:
    """A segment lying inside the object it was intersected with."""

    start: Point2
    end: Point2


def dist(p: Point2, q: Point2) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def lerp(p: Point2, q: Point2, t: float) -> Point2:
    return Point2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))


@dataclass(frozen=True)
class Line2:
    """Oriented line ``a*x + b*y = c`` in canonical normal form."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        n = math.hypot(self.a, self.b)
        if n == 0.0:
            raise ValueError("line normal must be nonzero")
        a, b, c = self.a / n, self.b / n, self.c / n
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        if a == 0.0:  # normalise -0.0 so tuples compare cleanly
            a = 0.0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @staticmethod
    def through(p: Point2, q: Point2) -> "Line2":
        """The line through two distinct points."""
        dx, dy = q.x - p.x, q.y - p.y
        if dx == 0.0 and dy == 0.0:
            raise ValueError("cannot build a line through coincident points")
        # normal is the direction rotated by 90 degrees
        return Line2(dy, -dx, dy * p.x - dx * p.y)

    @staticmethod
    def normal_through(n: tuple[float, float], p: Point2) -> "Line2":
        """The line with normal ``n`` passing through ``p``."""
        a, b = n
        return Line2(a, b, a * p.x + b * p.y)

    def signed_distance(self, p: Point2) -> float:
        return self.a * p.x + self.b * p.y - self.c

    def shifted(self, offset: float) -> "Line2":
        """Parallel line moved ``offset`` along the unit normal."""
        return Line2(self.a, self.b, self.c + offset)

    def direction(self) -> tuple[float, float]:
        """Unit vector along the line (normal rotated by -90 degrees)."""
        return (self.b, -self.a)

    def foot(self, p: Point2) -> Point2:
        """Orthogonal projection of ``p`` onto the line."""
        s = self.signed_distance(p)
        return Point2(p.x - s * self.a, p.y - s * self.b)


def side_of(line: Line2, p: Point2, tol: Tolerance) -> int:
    """-1, 0 or +1; within ``eps_geom`` of the line counts as 0."""
    s = line.signed_distance(p)
    if abs(s) <= tol.eps_geom:
        return 0
    return 1 if s > 0.0 else -1


def seg_line_intersection(
    p: Point2, q: Point2, line: Line2, tol: Tolerance
) -> Point2 | Overlap | None:
    """Intersect segment ``pq`` with a line.

    Endpoint touching counts as an intersection.  A segment lying along the
    line yields :class:`Overlap`.  Zero-length segments are rejected because
    the answer would be ambiguous between a point and an overlap.
    """
    if dist(p, q) <= tol.eps_geom:
        raise ValueError("degenerate segment")
    sp = line.signed_distance(p)
    sq = line.signed_distance(q)
    zp = abs(sp) <= tol.eps_geom
    zq = abs(sq) <= tol.eps_geom
    if zp and zq:
        return Overlap(p, q)
    if zp:
        return p
    if zq:
        return q
    if (sp > 0.0) == (sq > 0.0):
        return None
    t = sp / (sp - sq)
    return lerp(p, q, t)


def _orient(a: Point2, b: Point2, c: Point2) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def seg_seg_intersection(
    p1: Point2, q1: Point2, p2: Point2, q2: Point2, tol: Tolerance
) -> Point2 | Overlap | None:
    """Intersect two segments; endpoint touching counts.

    Collinear overlapping segments yield an :class:`Overlap` spanning the
    shared part.  Collinear segments that merely touch at one endpoint give
    that point.
    """
    line1 = Line2.through(p1, q1)
    hit = seg_line_intersection(p2, q2, line1, tol)
    if hit is None:
        return None
    if isinstance(hit, Overlap):
        # collinear; project all four onto the direction of line1
        ux, uy = line1.direction()

        def t(pt: Point2) -> float:
            return pt.x * ux + pt.y * uy

        lo1, hi1 = sorted((t(p1), t(q1)))
        lo2, hi2 = sorted((t(p2), t(q2)))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi + tol.eps_geom:
            return None
        pts = {t(p1): p1, t(q1): q1, t(p2): p2, t(q2): q2}
        a = pts[min(pts, key=lambda v: abs(v - lo))]
        b = pts[min(pts, key=lambda v: abs(v - hi))]
        if hi - lo <= tol.eps_geom:
            return a
        return Overlap(a, b)
    # hit is on line1; check it lies within segment p1q1
    ux, uy = line1.direction()
    th = hit.x * ux + hit.y * uy
    t1, t2 = p1.x * ux + p1.y * uy, q1.x * ux + q1.y * uy
    lo, hi = min(t1, t2), max(t1, t2)
    if lo - tol.eps_geom <= th <= hi + tol.eps_geom:
        return hit
    return None


def angular_order(
    center: Point2, points: list[Point2], tol: Tolerance
) -> list[int]:
    """Indices of ``points`` sorted by polar angle about ``center``.

    Angles live in ``[0, 2*pi)``; ties in angle are broken by distance to the
    center.  Points coinciding with the center are rejected.
    """
    keys = []
    for i, p in enumerate(points):
        d = dist(center, p)
        if d <= tol.eps_geom:
            raise ValueError(f"point {i} coincides with the center")
        ang = math.atan2(p.y - center.y, p.x - center.x)
        if ang < 0.0:
            ang += 2.0 * math.pi
        if ang >= 2.0 * math.pi:
            ang = 0.0
        keys.append((ang, d, i))
    keys.sort()
    return [i for _, _, i in keys]


def rotate(p: Point2, angle: float, about: Point2 | None = None) -> Point2:
    ca, sa = math.cos(angle), math.sin(angle)
    ox = about.x if about is not None else 0.0
    oy = about.y if about is not None else 0.0
    dx, dy = p.x - ox, p.y - oy
    return Point2(ox + ca * dx - sa * dy, oy + sa * dx + ca * dy)

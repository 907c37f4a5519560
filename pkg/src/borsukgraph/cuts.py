"""Cutting a drawn graph along straight lines.

Cutting along a line keeps, for each side, everything strictly on that side
plus the connecting segment lying on the line itself.  That segment spans
all points where the line meets the graph, is subdivided at every such
point, and belongs to both sides.  Repeated cuts give partition plans; a
plan is correct when every resulting piece has diameter strictly below the
original.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cgraph import GeometricGraph, continuous_diameter
from .geom import Line2, Overlap, Point2, Tolerance, dist, seg_line_intersection, side_of


class NoIntersection(ValueError):
    """The cutting line misses the graph entirely."""


class CollinearEdge(ValueError):
    """Some edge lies along the cutting line, so the cut is ill-defined."""


@dataclass(frozen=True)
class CutResult:
    plus: GeometricGraph
    minus: GeometricGraph
    s_ell: tuple[Point2, ...]
    new_vertices: tuple[Point2, ...]


@dataclass(frozen=True)
class PartitionStep:
    target: int
    line: Line2


@dataclass(frozen=True)
class PartitionPlan:
    steps: tuple[PartitionStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PartitionVerdict:
    correct: bool
    diameters: tuple[float, ...]
    original: float
    margin: float


def cut(g: GeometricGraph, line: Line2,
        tol: Tolerance | None = None) -> CutResult:
    tol = tol or Tolerance.default()
    sides = [side_of(line, v, tol) for v in g.vertices]
    hits: list[Point2] = []
    edge_hit: dict[int, Point2] = {}
    for k, (i, j) in enumerate(g.edges):
        r = seg_line_intersection(g.vertices[i], g.vertices[j], line, tol)
        if isinstance(r, Overlap):
            raise CollinearEdge(f"edge {k} lies along the cutting line")
        if r is not None:
            hits.append(r)
            edge_hit[k] = r
    touched = {i for e in g.edges for i in e}
    for v in range(g.n):
        if sides[v] == 0 and v not in touched:
            hits.append(g.vertices[v])
    if not hits:
        raise NoIntersection("the line does not meet the graph")

    ux, uy = line.direction()

    def along(p: Point2) -> float:
        return p.x * ux + p.y * uy

    hits.sort(key=along)
    span: list[Point2] = []
    for p in hits:
        if not span or along(p) - along(span[-1]) > tol.eps_geom:
            span.append(p)

    def build(sign: int) -> GeometricGraph:
        verts: list[Point2] = []

        def find_or_add(p: Point2) -> int:
            for idx, q in enumerate(verts):
                if dist(p, q) <= tol.eps_geom:
                    return idx
            verts.append(p)
            return len(verts) - 1

        orig_index: dict[int, int] = {}
        for v in range(g.n):
            if sides[v] == sign:
                orig_index[v] = find_or_add(g.vertices[v])
        span_index = [find_or_add(p) for p in span]
        edges: set[tuple[int, int]] = set()

        def add_edge(a: int, b: int) -> None:
            if a != b:
                edges.add((min(a, b), max(a, b)))

        for q in range(len(span) - 1):
            add_edge(span_index[q], span_index[q + 1])
        for k, (i, j) in enumerate(g.edges):
            si, sj = sides[i], sides[j]
            if si == sign and sj == sign:
                add_edge(orig_index[i], orig_index[j])
            elif si == sign and sj == 0:
                add_edge(orig_index[i], find_or_add(g.vertices[j]))
            elif si == 0 and sj == sign:
                add_edge(find_or_add(g.vertices[i]), orig_index[j])
            elif si == sign and sj == -sign:
                add_edge(orig_index[i], find_or_add(edge_hit[k]))
            elif si == -sign and sj == sign:
                add_edge(find_or_add(edge_hit[k]), orig_index[j])
        return GeometricGraph(verts, sorted(edges))

    plus = build(1)
    minus = build(-1)
    fresh = tuple(p for p in span
                  if all(dist(p, v) > tol.eps_geom for v in g.vertices))
    return CutResult(plus, minus, tuple(span), fresh)


def apply_plan(g: GeometricGraph, plan: PartitionPlan,
               tol: Tolerance | None = None) -> list[GeometricGraph]:
    """Run the steps in order; each replaces its target piece by two."""
    tol = tol or Tolerance.default()
    parts = [g]
    for step in plan.steps:
        if not (0 <= step.target < len(parts)):
            raise ValueError(f"step targets piece {step.target} "
                             f"but only {len(parts)} exist")
        res = cut(parts[step.target], step.line, tol)
        parts[step.target:step.target + 1] = [res.minus, res.plus]
    return parts


def verify_partition(g: GeometricGraph, plan: PartitionPlan,
                     tol: Tolerance | None = None) -> PartitionVerdict:
    """Check that every piece is strictly smaller in diameter than ``g``."""
    tol = tol or Tolerance.default()
    original = continuous_diameter(g, tol).value
    if not math.isfinite(original):
        raise ValueError("cannot verify a partition of a disconnected graph")
    parts = apply_plan(g, plan, tol)
    diams = tuple(continuous_diameter(p, tol).value for p in parts)
    worst = max(diams)
    margin = original - worst
    correct = margin > tol.eps_len * original
    return PartitionVerdict(correct, diams, original, margin)


def sweep_direction(g: GeometricGraph,
                    tol: Tolerance | None = None) -> tuple[float, float]:
    """A unit direction along which all vertex projections are distinct
    and no edge is perpendicular to it."""
    tol = tol or Tolerance.default()
    if g.n == 0:
        raise ValueError("empty graph")
    # deterministic low-discrepancy angle sweep
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    scale = max(1.0, max(max(abs(v.x), abs(v.y)) for v in g.vertices))
    for k in range(4096):
        theta = math.pi * ((k * golden) % 1.0)
        d = (math.cos(theta), math.sin(theta))
        if d[0] < 0.0 or (d[0] == 0.0 and d[1] < 0.0):
            # keep d equal to the canonical normal of its cut lines, so the
            # plus side of each cut is the side of larger projection
            d = (-d[0], -d[1])
        projs = sorted(v.x * d[0] + v.y * d[1] for v in g.vertices)
        gap_ok = all(b - a > 1e-7 * scale
                     for a, b in zip(projs, projs[1:]))
        if not gap_ok:
            continue
        perp_ok = True
        for (i, j) in g.edges:
            ex = g.vertices[j].x - g.vertices[i].x
            ey = g.vertices[j].y - g.vertices[i].y
            if abs(ex * d[0] + ey * d[1]) <= 1e-7 * math.hypot(ex, ey):
                perp_ok = False
                break
        if perp_ok:
            return d
    raise ValueError("no usable sweep direction found")


def strip_partition(g: GeometricGraph,
                    tol: Tolerance | None = None) -> PartitionPlan:
    """One cut through every vertex, perpendicular to a generic direction.

    The cuts run left to right, each aimed at the rightmost current piece,
    so the result is a sequence of narrow strips (plus a shaved-off single
    vertex at each end).
    """
    tol = tol or Tolerance.default()
    if g.n < 3:
        raise ValueError("need at least three vertices")
    if not g.is_connected():
        raise ValueError("need a connected graph")
    d = sweep_direction(g, tol)
    order = sorted(range(g.n),
                   key=lambda v: g.vertices[v].x * d[0] + g.vertices[v].y * d[1])
    steps = []
    for rank, v in enumerate(order):
        line = Line2.normal_through(d, g.vertices[v])
        steps.append(PartitionStep(rank, line))
    return PartitionPlan(tuple(steps))

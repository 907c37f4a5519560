"""Direction-monotone drawings and partitions driven by farthest-pair sets.

A drawing is monotone for a reference line when every perpendicular line
meets the union of the graph and its bounded faces in at most one connected
piece.  For such drawings the two diameters-seen-so-far functions (of the
left part and the right part of a sweep) move monotonically, and a small
family of perpendicular cuts, one through each group of farthest-pair
sets, partitions the graph into pieces of smaller diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cgraph import (
    DiametralSet,
    GeometricGraph,
    continuous_diameter,
    diametral_sets,
    point_of,
    CAddress,
)
from .cuts import (
    CollinearEdge,
    NoIntersection,
    PartitionPlan,
    PartitionStep,
    cut,
    verify_partition,
)
from .geom import Line2, Overlap, Point2, Tolerance, seg_line_intersection, side_of


def _face_cycles(g):
    """All face boundary walks of the drawing, as vertex index cycles."""
    nbrs = {}
    for v in range(g.n):
        out = []
        for (i, j) in g.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        p = g.vertices[v]
        out.sort(key=lambda u: math.atan2(g.vertices[u].y - p.y,
                                          g.vertices[u].x - p.x))
        nbrs[v] = out
    unused = {(a, b) for (a, b) in g.edges} | {(b, a) for (a, b) in g.edges}
    faces = []
    while unused:
        start = min(unused)
        walk = [start]
        unused.discard(start)
        cur = start
        while True:
            a, b = cur
            ring = nbrs[b]
            k = ring.index(a)
            nxt = (b, ring[(k - 1) % len(ring)])
            if nxt == start:
                break
            walk.append(nxt)
            unused.discard(nxt)
            cur = nxt
        faces.append([a for (a, _) in walk])
    return faces


def _signed_area(g, cycle):
    s = 0.0
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        pa, pb = g.vertices[a], g.vertices[b]
        s += pa.x * pb.y - pb.x * pa.y
    return 0.5 * s


def bounded_faces(g: GeometricGraph) -> list[list[int]]:
    """Vertex cycles of the interior faces (positive signed area)."""
    scale = max(1.0, max(abs(v.x) + abs(v.y) for v in g.vertices))
    out = []
    for cyc in _face_cycles(g):
        if _signed_area(g, cyc) > 1e-12 * scale * scale:
            out.append(cyc)
    return out


def _frame(line: Line2):
    """Rotated coordinates: x along the reference line, y along its normal."""
    ux, uy = line.direction()

    def to_frame(p: Point2):
        return (p.x * ux + p.y * uy, p.x * line.a + p.y * line.b)

    return (ux, uy), to_frame


def _face_slice(face_xy, x0):
    """y-intervals covered by one face polygon at vertical slice x0."""
    events = []
    m = len(face_xy)
    for i in range(m):
        (x1, y1), (x2, y2) = face_xy[i], face_xy[(i + 1) % m]
        if x1 == x2:
            continue
        if x1 <= x0 < x2:
            delta = 1
        elif x2 <= x0 < x1:
            delta = -1
        else:
            continue
        t = (x0 - x1) / (x2 - x1)
        events.append((y1 + t * (y2 - y1), delta))
    events.sort()
    out = []
    winding = 0
    for k, (y, delta) in enumerate(events):
        winding += delta
        if winding != 0 and k + 1 < len(events):
            out.append((y, events[k + 1][0]))
    return out


def _merge_count(intervals, gap):
    """Number of connected components of a union of 1d intervals."""
    if not intervals:
        return 0
    ivs = sorted((min(a, b), max(a, b)) for (a, b) in intervals)
    count = 1
    hi = ivs[0][1]
    for (a, b) in ivs[1:]:
        if a > hi + gap:
            count += 1
        hi = max(hi, b)
    return count


def _slice_intervals(g, line, to_frame, faces_xy, x0, tol):
    intervals = []
    for face in faces_xy:
        intervals.extend(_face_slice(face, x0))
    # the graph itself: crossings and collinear pieces of edges
    ux, uy = line.direction()
    perp = Line2.normal_through((ux, uy),
                               Point2(x0 * ux, x0 * uy))
    for (i, j) in g.edges:
        r = seg_line_intersection(g.vertices[i], g.vertices[j], perp, tol)
        if r is None:
            continue
        if isinstance(r, Overlap):
            intervals.append((to_frame(r.start)[1], to_frame(r.end)[1]))
        else:
            y = to_frame(r)[1]
            intervals.append((y, y))
    for v in range(g.n):
        x, y = to_frame(g.vertices[v])
        if abs(x - x0) <= tol.eps_geom:
            intervals.append((y, y))
    return intervals


def _slice_positions(xs):
    out = []
    for a, b in zip(xs, xs[1:]):
        out.append(a)
        if b - a > 1e-12:
            out.append(0.5 * (a + b))
    out.append(xs[-1])
    return out


def is_monotone(g: GeometricGraph, line: Line2,
                tol: Tolerance | None = None) -> bool:
    """Every line perpendicular to ``line`` meets the filled drawing in at
    most one piece."""
    tol = tol or Tolerance.default()
    if g.n == 0 or g.m == 0:
        return True
    _, to_frame = _frame(line)
    faces_xy = [[to_frame(g.vertices[v]) for v in cyc]
                for cyc in bounded_faces(g)]
    scale = max(1.0, max(abs(v.x) + abs(v.y) for v in g.vertices))
    gap = 1e-7 * scale
    xs = sorted({round(to_frame(v)[0], 12) for v in g.vertices})
    for x0 in _slice_positions(xs):
        ivs = _slice_intervals(g, line, to_frame, faces_xy, x0, tol)
        if _merge_count(ivs, gap) > 1:
            return False
    return True


def is_convex_monotone(g: GeometricGraph, line: Line2,
                       tol: Tolerance | None = None) -> bool:
    """Monotone, and each interior face alone is sliced into one interval."""
    tol = tol or Tolerance.default()
    if not is_monotone(g, line, tol):
        return False
    _, to_frame = _frame(line)
    scale = max(1.0, max(abs(v.x) + abs(v.y) for v in g.vertices))
    gap = 1e-7 * scale
    for cyc in bounded_faces(g):
        face_xy = [to_frame(g.vertices[v]) for v in cyc]
        xs = sorted({p[0] for p in face_xy})
        for x0 in _slice_positions(xs):
            if _merge_count(_face_slice(face_xy, x0), gap) > 1:
                return False
    return True


@dataclass(frozen=True)
class MonotoneProfile:
    direction: Line2
    samples: tuple[tuple[float, float, float], ...]
    events: tuple[float, ...]


def _oriented_direction(line: Line2) -> tuple[float, float]:
    ux, uy = line.direction()
    if ux < 0 or (ux == 0 and uy < 0):
        ux, uy = -ux, -uy
    return ux, uy


def h_profile(g: GeometricGraph, line: Line2, xs,
              tol: Tolerance | None = None) -> MonotoneProfile:
    """Diameters of the two sides of a perpendicular sweep.

    For each coordinate x (measured along the reference line) the graph is
    cut with the perpendicular at x; the sample records the diameters of
    the low side and the high side.  A perpendicular that misses the graph
    contributes the full diameter on its nonempty side and zero on the
    empty one.
    """
    tol = tol or Tolerance.default()
    d = _oriented_direction(line)
    projs = [v.x * d[0] + v.y * d[1] for v in g.vertices]
    events = tuple(sorted(projs))
    full = continuous_diameter(g, tol).value
    samples = []
    for x in xs:
        hm, hp = None, None
        for nudge in (0.0, 1e-9, -1e-9, 1e-8, -1e-8):
            perp = Line2.normal_through(d, Point2((x + nudge) * d[0],
                                                  (x + nudge) * d[1]))
            try:
                r = cut(g, perp, tol)
            except NoIntersection:
                if x <= min(projs):
                    hm, hp = 0.0, full
                else:
                    hm, hp = full, 0.0
                break
            except CollinearEdge:
                continue
            hm = continuous_diameter(r.minus, tol).value
            hp = continuous_diameter(r.plus, tol).value
            break
        if hm is None:
            raise CollinearEdge(f"no usable perpendicular near x={x}")
        samples.append((float(x), hm, hp))
    return MonotoneProfile(line, tuple(samples), events)


@dataclass(frozen=True)
class DiametralFamily:
    sets: tuple[DiametralSet, ...]
    disjoint: tuple[tuple[bool, ...], ...]
    max_disjoint: int
    chosen: tuple[int, ...]


def _sets_disjoint(g, s1: DiametralSet, s2: DiametralSet, tol) -> bool:
    if s1.vertices & s2.vertices:
        return False
    if s1.whole_edges & s2.whole_edges:
        return False
    eps = tol.eps_geom

    def spans(s):
        for k in s.whole_edges:
            yield (k, 0.0, g.edge_length(k))
        for f in s.fragments:
            yield (f.edge, f.lo, f.hi)

    for (e1, lo1, hi1) in spans(s1):
        for (e2, lo2, hi2) in spans(s2):
            if e1 == e2 and min(hi1, hi2) - max(lo1, lo2) >= -eps:
                return False
    # a vertex of one set lying inside a fragment of the other
    for (sa, sb) in ((s1, s2), (s2, s1)):
        for (e, lo, hi) in spans(sa):
            i, j = g.edges[e]
            if lo <= eps and i in sb.vertices:
                return False
            if hi >= g.edge_length(e) - eps and j in sb.vertices:
                return False
    return True


def _max_independent(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    best: list[int] = []

    def rec(cands: set[int], picked: list[int]):
        nonlocal best
        if len(picked) + len(cands) <= len(best):
            return
        if not cands:
            if len(picked) > len(best):
                best = list(picked)
            return
        v = max(cands, key=lambda u: (len(adj[u] & cands), -u))
        rec(cands - adj[v] - {v}, picked + [v])
        rec(cands - {v}, picked)

    rec(set(range(n)), [])
    return sorted(best)


def max_disjoint_family(g: GeometricGraph,
                        tol: Tolerance | None = None) -> DiametralFamily:
    """All farthest-pair sets with the largest pairwise disjoint subfamily."""
    tol = tol or Tolerance.default()
    sets = tuple(diametral_sets(g, tol))
    n = len(sets)
    disj = [[True] * n for _ in range(n)]
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ok = _sets_disjoint(g, sets[i], sets[j], tol)
            disj[i][j] = disj[j][i] = ok
            if not ok:
                adj[i].add(j)
                adj[j].add(i)
    chosen = _max_independent(adj) if n else []
    return DiametralFamily(sets, tuple(tuple(r) for r in disj),
                           len(chosen), tuple(chosen))


def line_crosses_set(g: GeometricGraph, ds: DiametralSet, line: Line2,
                     tol: Tolerance | None = None) -> bool:
    """Does the line meet any point of the farthest-pair set?"""
    tol = tol or Tolerance.default()
    for v in ds.vertices:
        if side_of(line, g.vertices[v], tol) == 0:
            return True

    def hit(pa, pb):
        return seg_line_intersection(pa, pb, line, tol) is not None

    for k in ds.whole_edges:
        i, j = g.edges[k]
        if hit(g.vertices[i], g.vertices[j]):
            return True
    for f in ds.fragments:
        if f.hi - f.lo <= tol.eps_geom:
            continue
        pa = point_of(g, CAddress(f.edge, f.anchor, f.lo))
        pb = point_of(g, CAddress(f.edge, f.anchor, f.hi))
        if hit(pa, pb):
            return True
    return False


def _set_projection(g, ds: DiametralSet, d):
    lo, hi = math.inf, -math.inf

    def feed(p: Point2):
        nonlocal lo, hi
        s = p.x * d[0] + p.y * d[1]
        lo, hi = min(lo, s), max(hi, s)

    for v in ds.vertices:
        feed(g.vertices[v])
    for k in ds.whole_edges:
        i, j = g.edges[k]
        feed(g.vertices[i])
        feed(g.vertices[j])
    for f in ds.fragments:
        feed(point_of(g, CAddress(f.edge, f.anchor, f.lo)))
        feed(point_of(g, CAddress(f.edge, f.anchor, f.hi)))
    return lo, hi


def _general_position_direction(g, line: Line2, tol):
    """Rotate the reference direction a little until vertex projections
    are pairwise distinct; keep the original if nothing helps."""
    base = _oriented_direction(line)
    scale = max(1.0, max(abs(v.x) + abs(v.y) for v in g.vertices))

    def distinct(d):
        projs = sorted(v.x * d[0] + v.y * d[1] for v in g.vertices)
        return all(b - a > 1e-9 * scale for a, b in zip(projs, projs[1:]))

    theta0 = math.atan2(base[1], base[0])
    for k in range(400):
        step = (k + 1) // 2 * 1e-4
        theta = theta0 + (step if k % 2 == 0 else -step) if k else theta0
        d = (math.cos(theta), math.sin(theta))
        if d[0] < 0 or (d[0] == 0 and d[1] < 0):
            d = (-d[0], -d[1])
        if distinct(d):
            return d
    return base


def _stab_coordinates(intervals):
    """Greedy right-endpoint stabbing; returns coordinates hitting all."""
    order = sorted(intervals, key=lambda iv: iv[1])
    endpoints = sorted({e for iv in intervals for e in iv})
    gaps = [b - a for a, b in zip(endpoints, endpoints[1:]) if b - a > 1e-12]
    eps = min(gaps) / 2 if gaps else 1e-6
    stabs = []
    covered_to = -math.inf
    for (lo, hi) in order:
        if lo > covered_to:
            covered_to = hi - eps
            if covered_to < lo:
                covered_to = 0.5 * (lo + hi)
            stabs.append(covered_to)
    return stabs


def _plan_from_coordinates(d, coords) -> PartitionPlan:
    steps = []
    for rank, c in enumerate(sorted(coords)):
        line = Line2.normal_through(d, Point2(c * d[0], c * d[1]))
        steps.append(PartitionStep(rank, line))
    return PartitionPlan(tuple(steps))


def monotone_partition(g: GeometricGraph, line: Line2,
                       tol: Tolerance | None = None) -> PartitionPlan:
    """Perpendicular cuts through every farthest-pair set, verified.

    Projects all farthest-pair sets onto the reference direction, stabs
    the resulting intervals greedily, and cuts perpendicular to the
    reference at the stab coordinates.  If verification fails, single
    stabs are widened into close parallel pairs (still within one extra
    cut over the number of disjoint sets) until the partition checks out.
    """
    tol = tol or Tolerance.default()
    fam = max_disjoint_family(g, tol)
    if not fam.sets:
        raise ValueError("graph has no farthest-pair sets to cut")
    d = _general_position_direction(g, line, tol)
    intervals = [_set_projection(g, ds, d) for ds in fam.sets]
    stabs = _stab_coordinates(intervals)
    plan = _plan_from_coordinates(d, stabs)
    if verify_partition(g, plan, tol).correct:
        return plan
    # Widen one stab into a parallel pair straddling the common core of its
    # group of intervals; the budget allows a single extra cut beyond the
    # number of disjoint sets.  Every interval of the group contains the
    # core, so it still meets at least one line of the pair.
    for idx, c in enumerate(stabs):
        group = [(lo, hi) for (lo, hi) in intervals if lo - 1e-12 <= c <= hi + 1e-12]
        if not group:
            continue
        mid = 0.5 * (max(lo for lo, _ in group) + min(hi for _, hi in group))
        margins = [x for (lo, hi) in group
                   for x in (mid - lo, hi - mid) if x > 1e-12]
        delta = min(margins) / 2 if margins else 1e-4
        for _ in range(14):
            coords = stabs[:idx] + [mid - delta, mid + delta] + stabs[idx + 1:]
            candidate = _plan_from_coordinates(d, coords)
            try:
                if verify_partition(g, candidate, tol).correct:
                    return candidate
            except (NoIntersection, CollinearEdge):
                pass
            delta /= 2
    raise RuntimeError("could not repair the stabbing into a correct plan")

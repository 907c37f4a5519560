"""Graphs drawn in the plane and the path metric on their points.

A :class:`GeometricGraph` is a straight-line drawing: vertices are points,
edges are segments between them, and edge weight equals Euclidean length.
Points in edge interiors are addressed by :class:`CAddress` triples
``(edge, anchor, offset)``: the point ``offset`` away from vertex ``anchor``
along that edge.  ``(e, u, t)`` and ``(e, v, length - t)`` are the same
point; the canonical form anchors at the smaller endpoint id, and points
sitting on a vertex are re-addressed to the smallest incident edge.

An :class:`AbstractGraph` is just a simple graph with hop distances; the
discrete partition machinery lives elsewhere and only needs the metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import dijkstra

from .geom import (
    Overlap,
    Point2,
    Tolerance,
    dist,
    lerp,
    seg_seg_intersection,
)

_INF = math.inf


class GeometricGraph:
    """Straight-line drawing; vertices are Point2, edges index pairs."""

    def __init__(self, vertices, edges):
        vs = []
        for v in vertices:
            if isinstance(v, Point2):
                vs.append(v)
            else:
                x, y = v
                vs.append(Point2(float(x), float(y)))
        self.vertices: tuple[Point2, ...] = tuple(vs)
        es = []
        for (i, j) in edges:
            if not (0 <= i < len(vs) and 0 <= j < len(vs)):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            es.append((min(i, j), max(i, j)))
        self.edges: tuple[tuple[int, int], ...] = tuple(es)
        self._vdist: np.ndarray | None = None
        self._around: dict[int, float] = {}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_length(self, k: int) -> float:
        i, j = self.edges[k]
        return dist(self.vertices[i], self.vertices[j])

    def total_length(self) -> float:
        return sum(self.edge_length(k) for k in range(self.m))

    def incident_edges(self, v: int) -> list[int]:
        return [k for k, (i, j) in enumerate(self.edges) if v in (i, j)]

    def weight_matrix(self) -> np.ndarray:
        w = np.zeros((self.n, self.n))
        for k, (i, j) in enumerate(self.edges):
            length = self.edge_length(k)
            if w[i, j] == 0.0 or length < w[i, j]:
                w[i, j] = length
                w[j, i] = length
        return w

    def vertex_distances(self) -> np.ndarray:
        """All-pairs shortest path lengths between vertices; inf if apart."""
        if self._vdist is None:
            if self.n == 0:
                self._vdist = np.zeros((0, 0))
            else:
                self._vdist = dijkstra(self.weight_matrix(), directed=False)
        return self._vdist

    def detour_distance(self, k: int) -> float:
        """Shortest path between the endpoints of edge k avoiding its interior."""
        if k not in self._around:
            i, j = self.edges[k]
            w = self.weight_matrix()
            w[i, j] = 0.0
            w[j, i] = 0.0
            for k2, (a, b) in enumerate(self.edges):
                if k2 != k and {a, b} == {i, j}:
                    # parallel edge would survive removal; validate rejects
                    # those, but stay safe
                    w[a, b] = self.edge_length(k2)
                    w[b, a] = self.edge_length(k2)
            row = dijkstra(w, directed=False, indices=i)
            self._around[k] = float(row[j])
        return self._around[k]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return bool(np.isfinite(self.vertex_distances()).all())


class AbstractGraph:
    """Simple undirected graph on vertices 0..n-1 with hop distances."""

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        seen = set()
        es = []
        for (i, j) in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            es.append(e)
        self.edges: tuple[tuple[int, int], ...] = tuple(es)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for (i, j) in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def hop_matrix(self) -> np.ndarray:
        w = np.zeros((self.n, self.n))
        for (i, j) in self.edges:
            w[i, j] = 1.0
            w[j, i] = 1.0
        return dijkstra(w, directed=False, unweighted=True)


def discrete_diameter(g: AbstractGraph):
    """Hop diameter; inf when disconnected."""
    dm = g.hop_matrix()
    if not np.isfinite(dm).all():
        return _INF
    return int(dm.max())


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate(g: GeometricGraph, tol: Tolerance | None = None) -> ValidationReport:
    """Check that a drawing is geometrically sound.

    Rejects coincident vertices, zero-length or duplicate edges, vertices
    sitting in the interior of a non-incident edge, and any two edges that
    meet outside a shared endpoint.
    """
    tol = tol or Tolerance.default()
    bad: list[Violation] = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if dist(g.vertices[i], g.vertices[j]) <= tol.eps_geom:
                bad.append(Violation("duplicate-vertex", (i, j),
                                     f"vertices {i} and {j} coincide"))
    seen: dict[tuple[int, int], int] = {}
    for k, e in enumerate(g.edges):
        if e in seen:
            bad.append(Violation("duplicate-edge", (seen[e], k),
                                 f"edges {seen[e]} and {k} join the same vertices"))
        seen[e] = k
        if g.edge_length(k) <= tol.eps_geom:
            bad.append(Violation("degenerate-edge", (k,),
                                 f"edge {k} has zero length"))
    for w in range(g.n):
        p = g.vertices[w]
        for k, (i, j) in enumerate(g.edges):
            if w in (i, j):
                continue
            a, b = g.vertices[i], g.vertices[j]
            if _point_segment_distance(p, a, b) <= tol.eps_geom:
                bad.append(Violation("vertex-on-edge", (w, k),
                                     f"vertex {w} lies on edge {k}"))
    for k1 in range(g.m):
        i1, j1 = g.edges[k1]
        if g.edge_length(k1) <= tol.eps_geom:
            continue
        for k2 in range(k1 + 1, g.m):
            i2, j2 = g.edges[k2]
            if g.edge_length(k2) <= tol.eps_geom:
                continue
            shared = {i1, j1} & {i2, j2}
            hit = seg_seg_intersection(
                g.vertices[i1], g.vertices[j1],
                g.vertices[i2], g.vertices[j2], tol)
            if hit is None:
                continue
            if isinstance(hit, Overlap):
                bad.append(Violation("edge-overlap", (k1, k2),
                                     f"edges {k1} and {k2} overlap"))
            elif shared:
                v = g.vertices[next(iter(shared))]
                if dist(hit, v) > tol.eps_geom:
                    bad.append(Violation("edge-crossing", (k1, k2),
                                         f"adjacent edges {k1} and {k2} "
                                         "meet away from the shared vertex"))
            else:
                bad.append(Violation("edge-crossing", (k1, k2),
                                     f"edges {k1} and {k2} cross"))
    return ValidationReport(not bad, tuple(bad))


def _point_segment_distance(p: Point2, a: Point2, b: Point2) -> float:
    ax, ay = b.x - a.x, b.y - a.y
    den = ax * ax + ay * ay
    if den == 0.0:
        return dist(p, a)
    t = ((p.x - a.x) * ax + (p.y - a.y) * ay) / den
    t = min(1.0, max(0.0, t))
    return dist(p, Point2(a.x + t * ax, a.y + t * ay))


@dataclass(frozen=True, order=True)
class CAddress:
    """Point on the graph: ``offset`` along edge ``edge`` from ``anchor``."""

    edge: int
    anchor: int
    offset: float


def point_of(g: GeometricGraph, a: CAddress) -> Point2:
    i, j = g.edges[a.edge]
    length = g.edge_length(a.edge)
    if a.anchor == i:
        t = a.offset / length
    elif a.anchor == j:
        t = 1.0 - a.offset / length
    else:
        raise ValueError(f"anchor {a.anchor} is not an endpoint of edge {a.edge}")
    return lerp(g.vertices[i], g.vertices[j], t)


def vertex_address(g: GeometricGraph, v: int) -> CAddress:
    """Canonical address of a vertex: smallest incident edge."""
    ks = g.incident_edges(v)
    if not ks:
        raise ValueError(f"vertex {v} is isolated and has no edge address")
    k = min(ks)
    i, j = g.edges[k]
    if v == i:
        return CAddress(k, i, 0.0)
    return CAddress(k, i, g.edge_length(k))


def canonical_address(g: GeometricGraph, a: CAddress,
                      tol: Tolerance | None = None) -> CAddress:
    """Anchor at the smaller endpoint; snap and re-address vertex hits."""
    tol = tol or Tolerance.default()
    if not (0 <= a.edge < g.m):
        raise ValueError(f"edge index {a.edge} out of range")
    i, j = g.edges[a.edge]
    length = g.edge_length(a.edge)
    if a.anchor == i:
        off = a.offset
    elif a.anchor == j:
        off = length - a.offset
    else:
        raise ValueError(f"anchor {a.anchor} is not an endpoint of edge {a.edge}")
    if off < -tol.eps_geom or off > length + tol.eps_geom:
        raise ValueError(f"offset {a.offset} outside edge {a.edge}")
    off = min(length, max(0.0, off))
    if off <= tol.eps_geom:
        return vertex_address(g, i)
    if length - off <= tol.eps_geom:
        return vertex_address(g, j)
    return CAddress(a.edge, i, off)


def _exit_costs(g: GeometricGraph, a: CAddress) -> tuple[int, int, float, float]:
    """Endpoints of the point's edge and the distance to each along it."""
    i, j = g.edges[a.edge]
    length = g.edge_length(a.edge)
    if a.anchor == i:
        off = a.offset
    else:
        off = length - a.offset
    return i, j, off, length - off


def distances_to_vertices(g: GeometricGraph, a: CAddress) -> np.ndarray:
    """Continuous distance from the addressed point to every vertex."""
    i, j, di, dj = _exit_costs(g, a)
    vd = g.vertex_distances()
    return np.minimum(di + vd[i], dj + vd[j])


def continuous_distance(g: GeometricGraph, a: CAddress, b: CAddress,
                        tol: Tolerance | None = None) -> float:
    """Shortest path length between two addressed points."""
    tol = tol or Tolerance.default()
    a = canonical_address(g, a, tol)
    b = canonical_address(g, b, tol)
    ai, aj, dai, daj = _exit_costs(g, a)
    bi, bj, dbi, dbj = _exit_costs(g, b)
    vd = g.vertex_distances()
    best = min(
        dai + vd[ai, bi] + dbi,
        dai + vd[ai, bj] + dbj,
        daj + vd[aj, bi] + dbi,
        daj + vd[aj, bj] + dbj,
    )
    if a.edge == b.edge:
        direct = abs(dai - dbi)
        best = min(best, direct)
        # going around the rest of the graph instead of along the edge
        around = g.detour_distance(a.edge)
        lo, hi = min(dai, dbi), max(dai, dbi)
        length = g.edge_length(a.edge)
        best = min(best, lo + around + (length - hi))
    return float(best)


@dataclass(frozen=True)
class DiameterResult:
    value: float
    witness: tuple[CAddress, CAddress] | None


def _equal_lines(P, Q, alpha, beta, gamma, delta):
    # pairwise ties of the four exit-combination lengths, as a*x + b*y = c
    return [
        (0.0, 2.0, beta - alpha + Q),
        (2.0, 0.0, gamma - alpha + P),
        (2.0, 2.0, delta - alpha + P + Q),
        (2.0, -2.0, gamma - beta + P - Q),
        (2.0, 0.0, delta - beta + P),
        (0.0, 2.0, delta - gamma + Q),
    ]


def _cross_pair_candidates(P, Q, alpha, beta, gamma, delta):
    """Points of the unit-gradient arrangement that can carry the max."""
    pts = [(0.0, 0.0), (0.0, Q), (P, 0.0), (P, Q)]
    lines = _equal_lines(P, Q, alpha, beta, gamma, delta)
    for (a, b, c) in lines:
        if b != 0.0:
            pts.append((0.0, c / b))
            pts.append((P, (c - a * P) / b))
        if a != 0.0:
            pts.append((c / a, 0.0))
            pts.append(((c - b * Q) / a, Q))
    for s in range(len(lines)):
        a1, b1, c1 = lines[s]
        for t in range(s + 1, len(lines)):
            a2, b2, c2 = lines[t]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-12:
                continue
            pts.append(((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det))
    out = []
    for (x, y) in pts:
        if -1e-9 <= x <= P + 1e-9 and -1e-9 <= y <= Q + 1e-9:
            out.append((min(P, max(0.0, x)), min(Q, max(0.0, y))))
    return out


def _pair_value(P, Q, alpha, beta, gamma, delta, lam, mu):
    return min(alpha + lam + mu,
               beta + lam + Q - mu,
               gamma + P - lam + mu,
               delta + P - lam + Q - mu)


def _iter_pair_maxima(g: GeometricGraph):
    """Yield (value, address, address) local maxima for every edge pair."""
    vd = g.vertex_distances()
    for ke in range(g.m):
        u, v = g.edges[ke]
        L = g.edge_length(ke)
        A = g.detour_distance(ke)
        if A >= L or A == _INF:
            yield L, CAddress(ke, u, 0.0), CAddress(ke, u, L)
        else:
            s = 0.5 * (A + L)
            yield s, CAddress(ke, u, 0.0), CAddress(ke, u, s)
            yield s, CAddress(ke, u, L - s), CAddress(ke, u, L)
        for kf in range(ke + 1, g.m):
            u2, v2 = g.edges[kf]
            P, Q = L, g.edge_length(kf)
            alpha = float(vd[u, u2])
            beta = float(vd[u, v2])
            gamma = float(vd[v, u2])
            delta = float(vd[v, v2])
            best = -1.0
            arg = (0.0, 0.0)
            for (lam, mu) in _cross_pair_candidates(P, Q, alpha, beta,
                                                    gamma, delta):
                val = _pair_value(P, Q, alpha, beta, gamma, delta, lam, mu)
                if val > best:
                    best = val
                    arg = (lam, mu)
            yield best, CAddress(ke, u, arg[0]), CAddress(kf, u2, arg[1])


def continuous_diameter(g: GeometricGraph,
                        tol: Tolerance | None = None) -> DiameterResult:
    """Largest distance between any two points, with a realizing pair.

    The witness is the lexicographically smallest canonical address pair
    among all maximizers that tie within tolerance.  Disconnected graphs
    have infinite diameter and no witness.
    """
    tol = tol or Tolerance.default()
    if g.n == 0:
        raise ValueError("empty graph has no diameter")
    if not g.is_connected():
        return DiameterResult(_INF, None)
    if g.m == 0:
        return DiameterResult(0.0, None)
    records = list(_iter_pair_maxima(g))
    best = max(r[0] for r in records)
    thr = best - max(tol.eps_geom, tol.eps_len * best)
    tied = []
    for val, a, b in records:
        if val >= thr:
            ca = canonical_address(g, a, tol)
            cb = canonical_address(g, b, tol)
            if cb < ca:
                ca, cb = cb, ca
            tied.append((ca, cb))
    witness = min(tied)
    return DiameterResult(float(best), witness)


@dataclass(frozen=True)
class Fragment:
    """Part of an edge from ``lo`` to ``hi``, measured from the anchor."""

    edge: int
    anchor: int
    lo: float
    hi: float


@dataclass(frozen=True)
class DiametralSet:
    """Everything lying on some shortest path between a farthest pair."""

    pair: tuple[CAddress, CAddress]
    kind: str
    vertices: frozenset[int]
    whole_edges: frozenset[int]
    fragments: tuple[Fragment, ...]


def _is_vertex_addr(g: GeometricGraph, a: CAddress, tol: Tolerance) -> bool:
    return a.offset <= tol.eps_geom or \
        a.offset >= g.edge_length(a.edge) - tol.eps_geom


def _set_for_pair(g: GeometricGraph, a: CAddress, b: CAddress,
                  value: float, tol: Tolerance) -> DiametralSet:
    slack = max(tol.eps_geom, tol.eps_len * value) * 4.0
    dp = distances_to_vertices(g, a)
    dq = distances_to_vertices(g, b)
    verts = frozenset(int(w) for w in range(g.n)
                      if dp[w] + dq[w] <= value + slack)
    whole = set()
    for k in range(g.m):
        i, j = g.edges[k]
        L = g.edge_length(k)
        if dp[i] + L + dq[j] <= value + slack or \
           dp[j] + L + dq[i] <= value + slack:
            whole.add(k)
    fragments: list[Fragment] = []

    def endpoint_fragments(addr, d_other):
        # pieces of the addressed point's own edge reachable on tight routes
        if _is_vertex_addr(g, addr, tol):
            return
        if addr.edge in whole:
            return
        i, j, di, dj = _exit_costs(g, addr)
        L = g.edge_length(addr.edge)
        via_i = di + d_other[i] <= value + slack
        via_j = dj + d_other[j] <= value + slack
        if via_i and via_j:
            whole.add(addr.edge)
        elif via_i:
            fragments.append(Fragment(addr.edge, min(i, j), 0.0, addr.offset))
        elif via_j:
            fragments.append(Fragment(addr.edge, min(i, j), addr.offset, L))

    if a.edge == b.edge and a.edge not in whole:
        lo, hi = min(a.offset, b.offset), max(a.offset, b.offset)
        if hi - lo <= value + slack and hi - lo >= value - slack:
            fragments.append(Fragment(a.edge, g.edges[a.edge][0], lo, hi))
        endpoint_fragments(a, dq)
        endpoint_fragments(b, dp)
    else:
        endpoint_fragments(a, dq)
        endpoint_fragments(b, dp)

    a_vert = _is_vertex_addr(g, a, tol)
    b_vert = _is_vertex_addr(g, b, tol)
    if a_vert and b_vert:
        kind = "vertex-vertex"
    elif a_vert or b_vert:
        kind = "vertex-edge"
    else:
        kind = "edge-edge"
    return DiametralSet((a, b), kind, verts, frozenset(whole),
                        tuple(sorted(fragments,
                                     key=lambda f: (f.edge, f.lo, f.hi))))


def diametral_sets(g: GeometricGraph,
                   tol: Tolerance | None = None) -> list[DiametralSet]:
    """All distinct farthest-pair sets, one per realizing pair shape.

    Pairs tying the diameter within tolerance are collected from the same
    candidate enumeration that the diameter uses; sets with identical
    content are merged (the first pair in canonical order is kept).
    """
    tol = tol or Tolerance.default()
    result = continuous_diameter(g, tol)
    if result.witness is None:
        return []
    value = result.value
    thr = value - max(tol.eps_geom, tol.eps_len * value) * 2.0
    pairs = set()
    for val, a, b in _iter_pair_maxima(g):
        if val >= thr:
            ca = canonical_address(g, a, tol)
            cb = canonical_address(g, b, tol)
            if cb < ca:
                ca, cb = cb, ca
            pairs.add((ca, cb))
    out: list[DiametralSet] = []
    seen_keys = set()
    for (ca, cb) in sorted(pairs):
        ds = _set_for_pair(g, ca, cb, value, tol)
        key = (ds.vertices, ds.whole_edges,
               tuple((f.edge, round(f.lo, 9), round(f.hi, 9))
                     for f in ds.fragments))
        if key in seen_keys:
            continue
        seen_keys.add(key)
        out.append(ds)
    return out

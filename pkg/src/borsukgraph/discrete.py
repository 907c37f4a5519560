"""Partitioning abstract graphs into connected blocks of smaller diameter.

A block partition splits the vertex set into groups, each inducing a
connected subgraph whose diameter (in the induced subgraph) is strictly
below the diameter of the whole graph.  The minimum number of blocks is
computed exactly by dynamic programming over vertex subsets, with closed
forms for trees.  Clique covers come along for free from the same subset
machinery, since a diameter-two graph needs exactly one block per clique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cgraph import AbstractGraph, discrete_diameter


@dataclass(frozen=True)
class DiscretePartition:
    blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[tuple[int, ...], ...]
    mode: str

    @property
    def size(self) -> int:
        return len(self.cliques)


def _require_partitionable(g: AbstractGraph) -> int:
    if g.n < 2:
        raise ValueError("a single vertex has nothing to partition")
    d = discrete_diameter(g)
    if d is math.inf:
        raise ValueError("graph must be connected")
    return d


def _mask_vertices(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def _induced_diameter_ok(g: AbstractGraph, mask: int, limit: int,
                         adj_masks: list[int]) -> bool:
    """Is the induced subgraph on `mask` connected with diameter < limit?"""
    verts = _mask_vertices(mask, g.n)
    if len(verts) == 1:
        return True
    # BFS from each vertex, restricted to the mask
    for s in verts:
        seen = 1 << s
        frontier = 1 << s
        depth = 0
        while seen != mask:
            nxt = 0
            for v in verts:
                if frontier >> v & 1:
                    nxt |= adj_masks[v]
            nxt &= mask & ~seen
            if not nxt:
                return False  # disconnected inside the mask
            depth += 1
            if depth >= limit:
                return False  # somebody sits at distance >= limit
            seen |= nxt
            frontier = nxt
    return True


def _adj_masks(g: AbstractGraph) -> list[int]:
    masks = [0] * g.n
    for (i, j) in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def _min_cover_dp(n: int, blocks: list[int]) -> list[int] | None:
    """Partition {0..n-1} into the fewest given subsets (as bitmasks)."""
    full = (1 << n) - 1
    by_low: list[list[int]] = [[] for _ in range(n)]
    for b in blocks:
        low = (b & -b).bit_length() - 1
        by_low[low].append(b)
    INF = n + 1
    dp = [INF] * (full + 1)
    choice = [0] * (full + 1)
    dp[0] = 0
    for mask in range(1, full + 1):
        low = (mask & -mask).bit_length() - 1
        best = INF
        pick = 0
        for b in by_low[low]:
            if b & mask == b:
                c = dp[mask & ~b] + 1
                if c < best:
                    best = c
                    pick = b
        dp[mask] = best
        choice[mask] = pick
    if dp[full] >= INF:
        return None
    out = []
    mask = full
    while mask:
        b = choice[mask]
        out.append(b)
        mask &= ~b
    return out


def borsuk_discrete_exact(g: AbstractGraph) -> tuple[int, DiscretePartition]:
    """Minimum block count and an optimal partition, by subset DP.

    Exponential in the number of vertices; meant for n up to a dozen or so.
    """
    d = _require_partitionable(g)
    adj = _adj_masks(g)
    feasible = [mask for mask in range(1, 1 << g.n)
                if _induced_diameter_ok(g, mask, d, adj)]
    picked = _min_cover_dp(g.n, feasible)
    assert picked is not None  # singletons are always feasible
    blocks = tuple(sorted(_mask_vertices(b, g.n) for b in picked))
    return len(blocks), DiscretePartition(blocks)


def is_tree(g: AbstractGraph) -> bool:
    if len(g.edges) != g.n - 1:
        return False
    return discrete_diameter(g) is not math.inf


def borsuk_discrete_tree(g: AbstractGraph) -> tuple[int, DiscretePartition]:
    """Closed-form block count for trees.

    Odd diameter: drop the central edge, two blocks.  Even diameter: one
    block per deepest branch at the center vertex, with the center and all
    shallow branches folded into the first.
    """
    if not is_tree(g):
        raise ValueError("not a tree")
    if g.n < 2:
        raise ValueError("a single vertex has nothing to partition")
    d = discrete_diameter(g)
    hm = g.hop_matrix()
    ecc = hm.max(axis=1)
    adj = g.adjacency()
    if d % 2 == 1:
        r = (d + 1) // 2
        centers = [v for v in range(g.n) if ecc[v] == r]
        assert len(centers) == 2
        u, v = centers
        blocks = (_component_without(g, u, v), _component_without(g, v, u))
        return 2, DiscretePartition(tuple(sorted(blocks)))
    r = d // 2
    center = min(v for v in range(g.n) if ecc[v] == r)
    branches = []
    for nb in sorted(adj[center]):
        comp = _component_without(g, nb, center)
        depth = max(hm[center][list(comp)])
        branches.append((comp, depth))
    deep = [comp for comp, depth in branches if depth == r]
    shallow = [comp for comp, depth in branches if depth < r]
    first = tuple(sorted(
        {center} | set(deep[0]) | {v for comp in shallow for v in comp}))
    blocks = [first] + [comp for comp in deep[1:]]
    return len(deep), DiscretePartition(tuple(sorted(blocks)))


def _component_without(g: AbstractGraph, start: int, banned: int) -> tuple[int, ...]:
    adj = g.adjacency()
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u != banned and u not in seen:
                seen.add(u)
                stack.append(u)
    return tuple(sorted(seen))


def check_partition(g: AbstractGraph, part: DiscretePartition) -> bool:
    """Does the partition cover every vertex once with valid blocks?"""
    d = discrete_diameter(g)
    seen: set[int] = set()
    adj = _adj_masks(g)
    for block in part.blocks:
        if seen & set(block):
            return False
        seen |= set(block)
        mask = 0
        for v in block:
            mask |= 1 << v
        if not _induced_diameter_ok(g, mask, d, adj):
            return False
    return seen == set(range(g.n))


def _is_clique(g_adj: list[int], mask: int, n: int) -> bool:
    for v in range(n):
        if mask >> v & 1:
            rest = mask & ~(1 << v)
            if rest & ~g_adj[v]:
                return False
    return True


def clique_cover(g: AbstractGraph, mode: str = "exact") -> CliqueCover:
    """Partition the vertices into cliques.

    ``exact`` minimizes the number of cliques by subset DP; ``greedy``
    peels maximal cliques in a fixed vertex order and may use more.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    adj = _adj_masks(g)
    if mode == "exact":
        cliques = [mask for mask in range(1, 1 << g.n)
                   if _is_clique(adj, mask, g.n)]
        picked = _min_cover_dp(g.n, cliques)
        assert picked is not None
        return CliqueCover(tuple(sorted(_mask_vertices(b, g.n)
                                        for b in picked)), "exact")
    remaining = set(range(g.n))
    out = []
    while remaining:
        order = sorted(remaining,
                       key=lambda v: (-len(set(_neighbors(adj, v)) & remaining), v))
        v = order[0]
        clique = [v]
        for u in order[1:]:
            if all(adj[w] >> u & 1 for w in clique):
                clique.append(u)
        out.append(tuple(sorted(clique)))
        remaining -= set(clique)
    return CliqueCover(tuple(sorted(out)), "greedy")


def _neighbors(adj: list[int], v: int) -> list[int]:
    return [u for u in range(len(adj)) if adj[v] >> u & 1]


def cone(g: AbstractGraph) -> AbstractGraph:
    """Add one vertex adjacent to everything."""
    apex = g.n
    return AbstractGraph(g.n + 1,
                         list(g.edges) + [(v, apex) for v in range(g.n)])

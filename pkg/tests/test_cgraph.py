import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from borsukgraph.cgraph import (
    AbstractGraph,
    CAddress,
    GeometricGraph,
    canonical_address,
    continuous_diameter,
    continuous_distance,
    diametral_sets,
    discrete_diameter,
    point_of,
    validate,
    vertex_address,
)
from borsukgraph.geom import Point2, Tolerance

import builders
import oracles

TOL = Tolerance()
OMEGA = 2 * math.sin(math.pi / 32)


# ---------------------------------------------------------------- validation

def test_validate_square_ok():
    rep = validate(builders.unit_square())
    assert rep.ok and rep.violations == ()


def test_validate_crossing():
    g = GeometricGraph([(0, 0), (1, 1), (0, 1), (1, 0)], [(0, 1), (2, 3)])
    rep = validate(g)
    assert not rep.ok
    assert any(v.kind == "edge-crossing" and v.where == (0, 1)
               for v in rep.violations)


def test_validate_duplicate_vertex():
    g = GeometricGraph([(0, 0), (0, 0), (1, 0)], [(0, 2)])
    rep = validate(g)
    assert any(v.kind == "duplicate-vertex" and v.where == (0, 1)
               for v in rep.violations)


def test_validate_vertex_on_edge():
    g = GeometricGraph([(0, 0), (2, 0), (1, 0)], [(0, 1)])
    rep = validate(g)
    assert any(v.kind == "vertex-on-edge" and v.where == (2, 0)
               for v in rep.violations)


def test_validate_duplicate_edge():
    g = GeometricGraph([(0, 0), (1, 0)], [(0, 1), (1, 0)])
    rep = validate(g)
    assert any(v.kind == "duplicate-edge" for v in rep.violations)


def test_validate_overlapping_edges():
    g = GeometricGraph([(0, 0), (2, 0), (1, 0), (3, 0)], [(0, 1), (2, 3)])
    rep = validate(g)
    assert any(v.kind == "edge-overlap" for v in rep.violations)


def test_constructor_rejects_junk():
    with pytest.raises(ValueError):
        GeometricGraph([(0, 0)], [(0, 0)])
    with pytest.raises(ValueError):
        GeometricGraph([(0, 0)], [(0, 1)])
    with pytest.raises(ValueError):
        AbstractGraph(2, [(0, 1), (1, 0)])


# ---------------------------------------------------------------- distances

def test_vertex_distances_square():
    g = builders.unit_square()
    d = g.vertex_distances()
    assert d[0, 2] == pytest.approx(2.0)
    assert d[0, 1] == pytest.approx(1.0)


def test_vertex_distances_disconnected():
    g = GeometricGraph([(0, 0), (1, 0), (5, 5), (6, 5)], [(0, 1), (2, 3)])
    d = g.vertex_distances()
    assert math.isinf(d[0, 2])
    assert not g.is_connected()


def test_continuous_distance_opposite_midpoints():
    g = builders.unit_square()
    p = CAddress(0, 0, 0.5)   # midpoint of the bottom edge
    q = CAddress(2, 2, 0.5)   # midpoint of the top edge
    assert continuous_distance(g, p, q) == pytest.approx(2.0)


def test_continuous_distance_same_edge():
    g = builders.unit_square()
    p = CAddress(0, 0, 0.1)
    q = CAddress(0, 0, 0.9)
    assert continuous_distance(g, p, q) == pytest.approx(0.8)
    # anchored from the other endpoint means the same point
    q2 = CAddress(0, 1, 0.1)
    assert continuous_distance(g, p, q2) == pytest.approx(0.8)


def test_continuous_distance_bad_address():
    g = builders.unit_square()
    with pytest.raises(ValueError):
        continuous_distance(g, CAddress(0, 2, 0.5), CAddress(1, 1, 0.0))
    with pytest.raises(ValueError):
        continuous_distance(g, CAddress(0, 0, 7.0), CAddress(1, 1, 0.0))


def test_canonical_address_vertex_snap():
    g = builders.unit_square()
    a = canonical_address(g, CAddress(2, 2, 1.0 - 1e-12))
    # lands on vertex 3, whose smallest incident edge is edge 2 anchored at 2
    assert a == vertex_address(g, 3)
    assert point_of(g, a) == Point2(0.0, 1.0)


# ----------------------------------------------------------------- diameter

def test_square_diameter_and_witness():
    g = builders.unit_square()
    r = continuous_diameter(g)
    assert r.value == pytest.approx(2.0, abs=1e-9)
    assert r.witness == (CAddress(0, 0, 0.0), CAddress(1, 1, 1.0))


def test_pentagon_diameter_half_perimeter():
    g = builders.pentagon()
    r = continuous_diameter(g)
    want = oracles.cycle_diameter([g.edge_length(k) for k in range(g.m)])
    assert r.value == pytest.approx(want, abs=1e-9)


def test_star4_diameter():
    g = builders.star4()
    r = continuous_diameter(g)
    assert r.value == pytest.approx(2.0, abs=1e-9)


def test_single_edge_diameter():
    g = GeometricGraph([(0, 0), (3, 4)], [(0, 1)])
    r = continuous_diameter(g)
    assert r.value == pytest.approx(5.0)
    assert r.witness == (CAddress(0, 0, 0.0), CAddress(0, 0, 5.0))


def test_disconnected_diameter_is_infinite():
    g = GeometricGraph([(0, 0), (1, 0), (5, 5), (6, 5)], [(0, 1), (2, 3)])
    r = continuous_diameter(g)
    assert math.isinf(r.value) and r.witness is None


def test_single_vertex_piece():
    g = GeometricGraph([(2, 3)], [])
    r = continuous_diameter(g)
    assert r.value == 0.0 and r.witness is None


def test_wheel_diameter_exact():
    g = builders.wheel33()
    r = continuous_diameter(g)
    assert r.value == pytest.approx(2.0 + OMEGA, abs=1e-9)
    a, b = r.witness
    # both ends sit at the midpoint of a rim edge
    assert a.offset == pytest.approx(OMEGA / 2, abs=1e-9)
    assert b.offset == pytest.approx(OMEGA / 2, abs=1e-9)


def test_diameter_matches_grid_oracle_on_random_graphs():
    rng = random.Random(20260821)
    for _ in range(12):
        n = rng.randrange(3, 9)
        g = builders.random_connected_geometric(rng, n)
        exact = continuous_diameter(g).value
        k = 48
        step = max(g.edge_length(i) for i in range(g.m)) / k
        approx = oracles.grid_diameter(
            [(v.x, v.y) for v in g.vertices], g.edges, k)
        assert abs(exact - approx) <= step + 1e-9
        assert exact >= approx - 1e-9


def test_witness_distance_equals_diameter():
    rng = random.Random(7)
    for _ in range(8):
        g = builders.random_connected_geometric(rng, rng.randrange(3, 8))
        r = continuous_diameter(g)
        a, b = r.witness
        assert continuous_distance(g, a, b) == pytest.approx(r.value, abs=1e-9)


# ------------------------------------------------------------ farthest sets

def test_square_single_diametral_set():
    g = builders.unit_square()
    sets = diametral_sets(g)
    assert len(sets) == 1
    s = sets[0]
    assert s.vertices == frozenset({0, 1, 2, 3})
    assert s.whole_edges == frozenset({0, 1, 2, 3})
    assert s.fragments == ()
    assert s.kind == "vertex-vertex"


def test_pentagon_single_set_covers_cycle():
    sets = diametral_sets(builders.pentagon())
    assert len(sets) == 1
    assert sets[0].whole_edges == frozenset(range(5))


def test_star4_sets():
    sets = diametral_sets(builders.star4())
    # leaf pairs are the farthest pairs; each set is two spokes plus hub
    assert len(sets) == 6
    for s in sets:
        assert 0 in s.vertices
        assert len(s.whole_edges) == 2
        assert s.kind == "vertex-vertex"


def test_wheel_sets_all_contain_hub():
    g = builders.wheel33()
    sets = diametral_sets(g)
    assert len(sets) == 144
    assert all(0 in s.vertices for s in sets)
    assert all(s.kind == "edge-edge" for s in sets)
    # every set: two rim edges whole, four spokes whole
    for s in sets:
        assert len(s.whole_edges) == 6


def test_wheel_nine_partners_per_midpoint():
    g = builders.wheel33()
    sets = diametral_sets(g)
    by_edge: dict[int, int] = {}
    for s in sets:
        for addr in s.pair:
            by_edge[addr.edge] = by_edge.get(addr.edge, 0) + 1
    rim = [k for k in range(g.m) if 0 not in g.edges[k]]
    assert all(by_edge.get(k, 0) == 9 for k in rim)


def test_path_fragment_set():
    # two collinear-free unit edges bent at a right angle; the diameter runs
    # leaf to leaf and the whole path is the single farthest set
    g = GeometricGraph([(0, 0), (1, 0), (1, 1)], [(0, 1), (1, 2)])
    sets = diametral_sets(g)
    assert len(sets) == 1
    assert sets[0].whole_edges == frozenset({0, 1})


# ----------------------------------------------------------- abstract graphs

def test_discrete_diameter_values():
    assert discrete_diameter(builders.path_graph(5)) == 4
    assert discrete_diameter(builders.cycle_graph(6)) == 3
    assert discrete_diameter(builders.star_graph(4)) == 2
    assert discrete_diameter(builders.complete_graph(4)) == 1
    assert discrete_diameter(AbstractGraph(3, [(0, 1)])) == math.inf


def test_discrete_diameter_matches_oracle():
    rng = random.Random(99)
    for _ in range(20):
        n = rng.randrange(2, 9)
        g = builders.random_connected_abstract(rng, n)
        assert discrete_diameter(g) == oracles.hop_diameter(g.n, g.edges)


# ------------------------------------------------------------- metric laws

@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=0, max_value=10 ** 6),
       st.floats(min_value=0, max_value=1),
       st.floats(min_value=0, max_value=1),
       st.floats(min_value=0, max_value=1))
def test_metric_properties(seed, t1, t2, t3):
    rng = random.Random(seed)
    g = builders.random_connected_geometric(rng, rng.randrange(3, 7))
    ks = [rng.randrange(g.m) for _ in range(3)]
    addrs = []
    for k, t in zip(ks, (t1, t2, t3)):
        u = g.edges[k][0]
        addrs.append(CAddress(k, u, t * g.edge_length(k)))
    a, b, c = addrs
    dab = continuous_distance(g, a, b)
    dba = continuous_distance(g, b, a)
    assert dab == pytest.approx(dba, abs=1e-9)
    assert continuous_distance(g, a, a) == pytest.approx(0.0, abs=1e-9)
    dac = continuous_distance(g, a, c)
    dcb = continuous_distance(g, c, b)
    assert dab <= dac + dcb + 1e-9


@settings(deadline=None, max_examples=20)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_diameter_dominates_point_pairs(seed):
    rng = random.Random(seed)
    g = builders.random_connected_geometric(rng, rng.randrange(3, 7))
    diam = continuous_diameter(g).value
    for _ in range(10):
        k1, k2 = rng.randrange(g.m), rng.randrange(g.m)
        a = CAddress(k1, g.edges[k1][0], rng.uniform(0, g.edge_length(k1)))
        b = CAddress(k2, g.edges[k2][0], rng.uniform(0, g.edge_length(k2)))
        assert continuous_distance(g, a, b) <= diam + 1e-9

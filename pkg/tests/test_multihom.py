"""Tests for multihomomorphism posets, the flip and edge-flip witnesses"""
import itertools

import networkx as nx
import numpy as np
import pytest

from graphs.graph import Graph, has_loop, is_bipartite
from mhom.multihom import (
    Multihom,
    bits,
    build_mhom,
    compose_multihoms,
    edge_flip_witness,
    flip_fixed_elements,
    flip_map,
    to_mask,
)
from posets.poset import connected_components
from utils.errors import BudgetExceeded, GuardExceeded

K2 = Graph.complete(2)


def test_bit_helpers():
    assert bits(0b1011) == [0, 1, 3]
    assert to_mask([0, 1, 3]) == 0b1011
    assert bits(0) == []


def test_multihom_sets_and_order():
    small = Multihom.from_sets([[0], [1]])
    big = Multihom.from_sets([[0], [1, 2]])
    assert small.le(big)
    assert not big.le(small)
    assert big.sets == ((0,), (1, 2))
    assert big.flipped() == Multihom.from_sets([[1, 2], [0]])
    assert repr(big) == "({0}, {1,2})"


@pytest.mark.parametrize("h, size", [
    (Graph.complete(2), 2),
    (Graph.complete(3), 12),
    (Graph.cycle(4), 18),
    (Graph.cycle(6), 24),
    (Graph.loop_vertex(), 1),
    (Graph(3, frozenset()), 0),
])
def test_mhom_k2_sizes(h, size):
    assert len(build_mhom(K2, h)) == size


def test_elements_are_valid_and_sorted():
    h = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 3)])
    mp = build_mhom(K2, h)
    assert list(mp.elements) == sorted(mp.elements)
    assert all(m.is_valid(K2, h) for m in mp.elements)


def test_enumeration_is_complete():
    """Brute force over all pairs of nonempty subsets agrees"""
    h = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    subsets = [m for m in range(1, 1 << h.n)]
    expected = {Multihom((a, b)) for a, b in itertools.product(subsets, subsets)
                if Multihom((a, b)).is_valid(K2, h)}
    assert set(build_mhom(K2, h).elements) == expected


def test_order_is_pointwise_inclusion():
    mp = build_mhom(K2, Graph.complete(3))
    for i, a in enumerate(mp.elements):
        for j, b in enumerate(mp.elements):
            assert mp.poset.le(i, j) == a.le(b)


def test_dodecagon_components():
    """mhom(K2, K3) is one cycle of length 12: every element has two neighbours"""
    mp = build_mhom(K2, Graph.complete(3))
    p = mp.poset
    assert connected_components(p) == [list(range(12))]
    for x in range(12):
        assert len(p.upper_covers(x)) + len(p.lower_covers(x)) == 2


def test_longer_source_graph():
    path = Graph.path(3)
    mp = build_mhom(path, Graph.complete(2))
    assert [m.sets for m in mp.elements] == [((0,), (1,), (0,)), ((1,), (0,), (1,))]


def test_guards():
    with pytest.raises(GuardExceeded):
        build_mhom(Graph.complete(4), Graph.complete(3))
    with pytest.raises(ValueError):
        build_mhom(Graph(2, frozenset()), Graph.complete(3))
    with pytest.raises(BudgetExceeded):
        build_mhom(K2, Graph.complete(3), max_elements=5)


def test_loop_on_source_vertex():
    """A looped source vertex needs a value that is a clique with loops"""
    g = Graph.from_edges(2, [(0, 1), (1, 1)])
    h = Graph.from_edges(3, [(0, 1), (1, 1), (1, 2)])
    mp = build_mhom(g, h)
    assert all(m.masks[1] == 0b010 for m in mp.elements)


def test_edge_element_lookup():
    mp = build_mhom(K2, Graph.complete(3))
    assert mp.elements[mp.edge_element(0, 2)] == Multihom((0b001, 0b100))


def test_compose_multihoms():
    identity_like = Multihom.from_sets([[0], [1]])
    into_k3 = Multihom.from_sets([[0, 1], [2]])
    assert compose_multihoms(identity_like, into_k3) == Multihom.from_sets([[0, 1], [2]])


def test_flip_is_an_involution():
    mp = build_mhom(K2, Graph.cycle(5))
    flip = flip_map(mp)
    assert flip.compose(flip).values == tuple(range(len(mp)))
    assert flip.is_bijective()


def test_flip_only_on_k2_source():
    mp = build_mhom(Graph.path(3), Graph.complete(3))
    with pytest.raises(ValueError):
        flip_map(mp)
    with pytest.raises(ValueError):
        flip_fixed_elements(mp)


def test_edge_flip_witness_on_odd_cycle():
    h = Graph.cycle(5)
    witness = edge_flip_witness(h)
    mp = build_mhom(K2, h)
    assert witness is not None
    u, v = witness.edge
    assert witness.path[0] == mp.edge_element(u, v)
    assert witness.path[-1] == mp.edge_element(v, u)
    for (a, b), relation in zip(zip(witness.path, witness.path[1:]), witness.relations):
        assert mp.poset.le(a, b) if relation == "<=" else mp.poset.le(b, a)


@pytest.mark.parametrize("h", [Graph.cycle(4), Graph.cycle(6), Graph.path(4)])
def test_no_edge_flip_witness_when_bipartite(h):
    assert is_bipartite(h).is_bipartite
    assert edge_flip_witness(h) is None


def test_edge_flip_witness_needs_an_edge():
    with pytest.raises(ValueError):
        edge_flip_witness(Graph(2, frozenset()))


def test_mhom_to_dict_carries_flip_pairing():
    data = build_mhom(K2, Graph.complete(2)).to_dict()
    assert data["element_count"] == 2
    assert data["flip"] == [[0, 1], [1, 0]]
    assert data["relations"] == []


def test_long_cycle_is_polynomial_in_the_target():
    """mhom(K2, C_n) for n >= 5: 3n singleton-led elements and n of the form ({a, a+2}, {a+1})"""
    c70 = Graph.cycle(70)
    mp = build_mhom(K2, c70)
    assert len(mp) == 280
    assert all(m.is_valid(K2, c70) for m in mp.elements)
    assert Multihom((1 << 0 | 1 << 68, 1 << 69)) in mp.index
    p = mp.poset
    rng = np.random.default_rng(2)
    for i, j in rng.integers(0, len(mp), size=(2000, 2)):
        assert p.le(int(i), int(j)) == mp.elements[i].le(mp.elements[j])
    assert len(connected_components(p)) == 2


def test_search_budget_on_dense_target():
    with pytest.raises(BudgetExceeded):
        build_mhom(K2, Graph.complete(20), max_elements=100)


def atlas_graphs(max_vertices: int):
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() > max_vertices:
            break
        if nxg.number_of_nodes() > 0:
            yield Graph.from_networkx(nxg)


def test_flip_fixed_iff_loop_on_small_graphs():
    """Every atlas graph up to 4 vertices under every loop pattern, and loopless ones up to 5"""
    cases = [g.with_loops(loops) for g in atlas_graphs(4)
             for size in range(g.n + 1) for loops in itertools.combinations(range(g.n), size)]
    cases += [g for g in atlas_graphs(5) if g.n == 5]
    for h in cases:
        mp = build_mhom(K2, h)
        fixed = flip_fixed_elements(mp)
        assert bool(fixed) == (has_loop(h) is not None), h.edges
        assert fixed == flip_map(mp).fixed_points()


def test_composition_is_monotone():
    """f <= f' and g <= g' give g o f <= g' o f'; compositions land in mhom(A, C)"""
    path, c4 = Graph.path(3), Graph.cycle(4)
    first = build_mhom(K2, path).elements
    second = build_mhom(path, c4).elements
    for f, f2 in itertools.product(first, first):
        if not f.le(f2):
            continue
        for g in second:
            assert compose_multihoms(f, g).le(compose_multihoms(f2, g))
    rng = np.random.default_rng(4)
    for _ in range(500):
        f = first[int(rng.integers(len(first)))]
        g, g2 = (second[int(i)] for i in rng.integers(len(second), size=2))
        composed = compose_multihoms(f, g)
        assert composed.is_valid(K2, c4)
        if g.le(g2):
            assert composed.le(compose_multihoms(f, g2))

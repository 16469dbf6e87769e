"""Tests for graphs, certificates and cores"""
import networkx as nx
import pytest

from graphs.core import compute_core, endomorphisms, find_homomorphism, is_homomorphism, iter_homomorphisms
from graphs.graph import BipartiteCertificate, Graph, has_loop, is_bipartite
from utils.errors import GuardExceeded


def test_edges_are_normalized():
    """Edges are stored as sorted pairs, duplicates collapse"""
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.neighbors(1) == [0, 2]
    assert g.degree(0) == 1


def test_edge_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_named_families():
    assert len(Graph.complete(4).edges) == 6
    assert len(Graph.cycle(5).edges) == 5
    assert len(Graph.path(4).edges) == 3
    assert Graph.loop_vertex().loops == [0]
    with pytest.raises(ValueError):
        Graph.cycle(2)


def test_oriented_edges_list_loops_once():
    g = Graph.from_edges(2, [(0, 1), (1, 1)])
    assert g.oriented_edges == ((0, 1), (1, 0), (1, 1))


def test_networkx_round_trip():
    """Relabelling through networkx keeps the edge set"""
    g = Graph.cycle(6)
    assert Graph.from_networkx(g.to_networkx()) == g


def test_has_loop_returns_smallest_looped_vertex():
    g = Graph.from_edges(4, [(0, 1), (3, 3), (2, 2)])
    assert has_loop(g) == 2
    assert has_loop(Graph.complete(3)) is None


def test_bipartite_certificates_validate():
    """Every certificate checks out against its own graph"""
    for g in [Graph.cycle(6), Graph.path(5), Graph.complete(2), Graph(3, frozenset())]:
        cert = is_bipartite(g)
        assert cert.is_bipartite
        assert cert.validate(g)
    for g in [Graph.cycle(5), Graph.complete(4), Graph.loop_vertex()]:
        cert = is_bipartite(g)
        assert not cert.is_bipartite
        assert cert.validate(g)
        walk = cert.odd_closed_walk
        assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1


def test_isolated_vertices_go_to_first_part():
    cert = is_bipartite(Graph.from_edges(3, [(1, 2)]))
    assert 0 in cert.partition[0]


def test_certificate_needs_exactly_one_witness():
    with pytest.raises(ValueError):
        BipartiteCertificate()


def test_bipartite_agrees_with_networkx_on_atlas():
    for g in nx.graph_atlas_g()[1:120]:
        h = Graph.from_networkx(g)
        assert is_bipartite(h).is_bipartite == nx.is_bipartite(g)


def test_homomorphisms_into_k2_are_two_colourings():
    assert len(list(iter_homomorphisms(Graph.path(3), Graph.complete(2)))) == 2
    assert find_homomorphism(Graph.cycle(5), Graph.complete(2)) is None
    hom = find_homomorphism(Graph.cycle(5), Graph.complete(3))
    assert is_homomorphism(Graph.cycle(5), Graph.complete(3), hom)


def test_fixed_and_allowed_images():
    homs = list(iter_homomorphisms(Graph.complete(2), Graph.complete(3), fixed={0: 2}, allowed=[1, 2]))
    assert homs == [(2, 1)]


def test_looped_vertex_must_map_to_loop():
    g = Graph.loop_vertex()
    h = Graph.from_edges(2, [(0, 1), (1, 1)])
    assert list(iter_homomorphisms(g, h)) == [(1,)]


def test_endomorphisms_of_k3_are_permutations():
    assert sorted(endomorphisms(Graph.complete(3))) == sorted(
        [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    )


@pytest.mark.parametrize("g, core_n", [
    (Graph.cycle(6), 2),
    (Graph.cycle(5), 5),
    (Graph.complete(4), 4),
    (Graph.path(4), 2),
    (Graph.from_edges(3, [(0, 1), (1, 2), (2, 2)]), 1),
    (Graph(3, frozenset()), 1),
])
def test_core_sizes(g, core_n):
    result = compute_core(g)
    assert result.core.n == core_n


def test_core_retraction_fixes_core_vertices():
    """The retraction is a homomorphism onto the core and the identity on it"""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    result = compute_core(g)
    assert result.core.n == 3
    assert is_homomorphism(g, result.core, result.retraction)
    for new, old in enumerate(result.core_vertices):
        assert result.retraction[old] == new


def test_core_guard():
    with pytest.raises(GuardExceeded):
        compute_core(Graph.cycle(9), max_vertices=8)


def test_core_endomorphisms_are_automorphisms():
    """A core has no proper retract, so every endomorphism is a bijection; checked on all atlas graphs up to 5 vertices"""
    for index, nxg in enumerate(nx.graph_atlas_g()):
        if nxg.number_of_nodes() > 5:
            break
        if nxg.number_of_nodes() == 0:
            continue
        core = compute_core(Graph.from_networkx(nxg)).core
        for f in endomorphisms(core):
            assert sorted(f) == list(range(core.n)), f"atlas:{index}"

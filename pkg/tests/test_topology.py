"""Tests for complexes, homology, Lefschetz numbers and contractibility verdicts"""
import itertools

import networkx as nx
import numpy as np
import pytest

from graphs.graph import Graph, has_loop
from mhom.multihom import build_mhom, flip_map
from posets.dismantle import dismantle
from posets.poset import Poset, random_poset
from topology.complex import SimplicialComplex, euler_characteristic, order_complex
from topology.homology import (
    betti_numbers,
    boundary_matrix,
    check_chain_complex,
    homology,
    is_point_profile,
    reduced_betti,
)
from topology.lefschetz import chain_traces, lefschetz_number, validate_simplicial
from topology.verdict import Verdict, contractibility_verdict
from utils.errors import BudgetExceeded, NotSimplicialError

K2 = Graph.complete(2)


def sphere(dim: int) -> SimplicialComplex:
    """Boundary of the (dim + 1)-simplex"""
    vertices = range(dim + 2)
    return SimplicialComplex.from_maximal_faces(dim + 2, itertools.combinations(vertices, dim + 1))


def projective_plane() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane"""
    triangles = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
        (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
    ]
    return SimplicialComplex.from_maximal_faces(6, triangles)


def test_complex_closure_and_counts():
    c = sphere(1)
    assert c.face_counts() == [3, 3]
    assert c.is_closed()
    assert c.is_face((2, 0))
    assert not c.is_face((0, 1, 2))
    assert euler_characteristic(c) == 0


def test_complex_validation():
    with pytest.raises(ValueError):
        SimplicialComplex(3, [[(0,)], [(0, 1, 2)]])
    with pytest.raises(ValueError):
        SimplicialComplex(2, [[(0,), (5,)]])


def test_order_complex_of_chain_is_a_simplex():
    c = order_complex(Poset.chain(3))
    assert c.face_counts() == [3, 3, 1]


def test_order_complex_truncation_and_budget():
    c = order_complex(Poset.chain(4), max_dim=1)
    assert c.face_counts() == [4, 6]
    with pytest.raises(BudgetExceeded):
        order_complex(Poset.chain(6), max_faces=10)


def test_boundary_signs():
    c = SimplicialComplex.from_maximal_faces(3, [(0, 1, 2)])
    d2 = boundary_matrix(c, 2)
    # faces (0,1), (0,2), (1,2): boundary of (0,1,2) is (1,2) - (0,2) + (0,1)
    assert d2.to_dense() == [[1], [-1], [1]]


@pytest.mark.parametrize("c, betti, torsion", [
    (sphere(1), [1, 1], [(), ()]),
    (sphere(2), [1, 0, 1], [(), (), ()]),
    (SimplicialComplex.from_maximal_faces(4, [(0, 1, 2, 3)]), [1, 0, 0, 0], [()] * 4),
    (projective_plane(), [1, 0, 0], [(), (2,), ()]),
])
def test_known_homology(c, betti, torsion):
    groups = homology(c)
    assert betti_numbers(groups) == betti
    assert [g.torsion for g in groups] == torsion


def test_homology_group_text():
    groups = homology(projective_plane())
    assert [str(g) for g in groups] == ["Z^1", "Z/2", "0"]


def test_homology_above_dimension_rejected():
    with pytest.raises(ValueError):
        homology(sphere(1), up_to=3)


def test_reduced_betti_and_point_profile():
    point = homology(order_complex(Poset.chain(1)))
    assert reduced_betti(point) == [0]
    assert is_point_profile(point)
    assert not is_point_profile(homology(sphere(1)))


def test_dodecagon_homology():
    mp = build_mhom(K2, Graph.complete(3))
    c = order_complex(mp.poset)
    assert c.face_counts() == [12, 12]
    assert betti_numbers(homology(c)) == [1, 1]


def test_boundary_composites_vanish_on_random_order_complexes():
    rng = np.random.default_rng(21)
    for _ in range(50):
        p = random_poset(int(rng.integers(1, 8)), float(rng.uniform(0.2, 0.8)), rng)
        check_chain_complex(order_complex(p))


def test_euler_characteristic_matches_betti():
    rng = np.random.default_rng(4)
    for _ in range(40):
        c = order_complex(random_poset(int(rng.integers(1, 8)), 0.4, rng))
        groups = homology(c)
        assert euler_characteristic(c) == sum((-1) ** g.dimension * g.betti for g in groups)


def test_homology_invariant_under_dismantling():
    """Removing irreducible elements never changes homology"""
    rng = np.random.default_rng(8)
    for _ in range(200):
        p = random_poset(int(rng.integers(1, 8)), float(rng.uniform(0.1, 0.7)), rng)
        residual = dismantle(p).residual
        full, small = homology(order_complex(p)), homology(order_complex(residual))
        top = max(len(full), len(small))
        pad = [(0, ())] * top
        as_pairs = [(g.betti, g.torsion) for g in full] + pad[len(full):]
        assert as_pairs == [(g.betti, g.torsion) for g in small] + pad[len(small):]


def test_lefschetz_of_identity_is_euler_characteristic():
    rng = np.random.default_rng(13)
    complexes = [sphere(1), sphere(2), projective_plane()]
    complexes += [order_complex(random_poset(int(rng.integers(1, 7)), 0.5, rng)) for _ in range(20)]
    for c in complexes:
        assert lefschetz_number(c, list(range(c.vertex_count))) == euler_characteristic(c)


def test_lefschetz_of_rotation_and_reflection():
    circle = sphere(1)
    assert chain_traces(circle, [1, 2, 0]) == [0, 0]
    assert lefschetz_number(circle, [1, 2, 0]) == 0
    # reflection through vertex 0 reverses the edge (1, 2)
    assert chain_traces(circle, [0, 2, 1]) == [1, -1]
    assert lefschetz_number(circle, [0, 2, 1]) == 2


def test_constant_map_has_lefschetz_one():
    c = sphere(2)
    assert lefschetz_number(c, [0] * c.vertex_count) == 1


def test_non_simplicial_map_rejected():
    c = SimplicialComplex.from_maximal_faces(3, [(0, 1), (1, 2)])
    with pytest.raises(NotSimplicialError):
        validate_simplicial(c, [0, 2, 0])
    with pytest.raises(ValueError):
        lefschetz_number(c, [0, 1])


def test_flip_lefschetz_vanishes_without_loops():
    """A fixed-point-free flip has Lefschetz number zero"""
    for h in [Graph.complete(3), Graph.cycle(5), Graph.cycle(4)]:
        mp = build_mhom(K2, h)
        c = order_complex(mp.poset)
        flip = flip_map(mp)
        assert flip.fixed_points() == []
        assert lefschetz_number(c, flip.values) == 0


def test_verdicts_on_small_posets():
    chain = contractibility_verdict(Poset.chain(3))
    assert [v.verdict for v in chain] == [Verdict.CONTRACTIBLE]

    crown = Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    verdict = contractibility_verdict(crown)[0]
    assert verdict.verdict is Verdict.NOT_CONTRACTIBLE
    assert verdict.reason == "H_1 = Z^1"


def test_verdicts_on_mhom_components():
    """mhom(K2, C6) splits into two 12-cycles; mhom(K2, C4) into two contractible pieces"""
    c6 = contractibility_verdict(build_mhom(K2, Graph.cycle(6)).poset)
    assert [v.verdict for v in c6] == [Verdict.NOT_CONTRACTIBLE] * 2
    assert [len(v.elements) for v in c6] == [12, 12]

    c4 = contractibility_verdict(build_mhom(K2, Graph.cycle(4)).poset)
    assert [v.verdict for v in c4] == [Verdict.CONTRACTIBLE] * 2


def test_verdict_budget_falls_back_to_dismantling():
    chain = contractibility_verdict(Poset.chain(8), max_faces=5)
    assert chain[0].verdict is Verdict.CONTRACTIBLE
    assert chain[0].homology is None

    crown = Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert contractibility_verdict(crown, max_faces=3)[0].verdict is Verdict.UNKNOWN


def test_flip_lefschetz_is_one_on_contractible_components():
    """On flip-invariant contractible components of mhom(K2, H) for looped H, the restricted flip has L = 1"""
    checked = 0
    for nxg in nx.graph_atlas_g()[1:8]:
        base = Graph.from_networkx(nxg)
        for size in range(1, base.n + 1):
            for loops in itertools.combinations(range(base.n), size):
                h = base.with_loops(loops)
                assert has_loop(h) is not None
                mp = build_mhom(K2, h)
                flip = flip_map(mp)
                for component in contractibility_verdict(mp.poset):
                    members = list(component.elements)
                    if component.verdict is not Verdict.CONTRACTIBLE or len(members) > 30:
                        continue
                    if sorted(flip(x) for x in members) != members:
                        continue
                    position = {x: i for i, x in enumerate(members)}
                    c = order_complex(mp.poset.subposet(members))
                    assert lefschetz_number(c, [position[flip(x)] for x in members]) == 1, h.edges
                    checked += 1
    assert checked > 0

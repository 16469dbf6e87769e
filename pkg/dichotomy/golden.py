"""
Golden checks: fixed expected values for small graphs, run by verify-paper
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from config.run_config import RunConfig
from data.atlas_provider import AtlasProvider
from graphs.graph import Graph, has_loop, is_bipartite
from identities.identity_factory import get_system
from mhom.multihom import build_mhom, edge_flip_witness, flip_fixed_elements, flip_map
from mhom.operations import verify_sub_taylor
from polysearch.search import SearchStatus, search_polymorphism
from polysearch.taylor import derive_taylor_witness
from polysearch.verify import verify_polymorphism
from posets.poset import irreducible_elements
from topology.complex import euler_characteristic, order_complex
from topology.homology import homology
from topology.lefschetz import lefschetz_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    passed: bool
    expected: Any
    observed: Any

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "observed": self.observed}


def check_dodecagon(config: RunConfig) -> GoldenCheck:
    """mhom(K2, K3): 12 elements forming a 12-cycle"""
    mp = build_mhom(Graph.complete(2), Graph.complete(3), config.max_elements)
    c = order_complex(mp.poset, max_faces=config.max_faces)
    flip = flip_map(mp)
    groups = homology(c)
    observed = {
        "elements": len(mp),
        "face_counts": c.face_counts(),
        "betti": [g.betti for g in groups],
        "torsion": [list(g.torsion) for g in groups],
        "euler_characteristic": euler_characteristic(c),
        "flip_fixed_elements": flip.fixed_points(),
        "flip_lefschetz": lefschetz_number(c, flip.values),
        "irreducible_elements": len(irreducible_elements(mp.poset)),
    }
    expected = {
        "elements": 12,
        "face_counts": [12, 12],
        "betti": [1, 1],
        "torsion": [[], []],
        "euler_characteristic": 0,
        "flip_fixed_elements": [],
        "flip_lefschetz": 0,
        "irreducible_elements": 0,
    }
    return GoldenCheck("mhom(K2,K3) is a 12-cycle", observed == expected, expected, observed)


def check_flip_fixed_iff_loop(config: RunConfig, max_vertices: int = 4) -> GoldenCheck:
    """Every atlas graph up to max_vertices with every subset of its vertices looped"""
    mismatches: List[str] = []
    checked = 0
    for entry in AtlasProvider(max_vertices).iter_entries():
        g = entry.graph
        for size in range(g.n + 1):
            for loops in itertools.combinations(range(g.n), size):
                h = g.with_loops(loops)
                fixed = flip_fixed_elements(build_mhom(Graph.complete(2), h, config.max_elements))
                checked += 1
                if bool(fixed) != (has_loop(h) is not None):
                    mismatches.append(f"{entry.graph_id} loops={list(loops)}")
    return GoldenCheck(f"flip fixed element iff loop ({checked} graphs)", not mismatches, [], mismatches)


def check_edge_flip_witness(config: RunConfig, max_vertices: int = 5) -> GoldenCheck:
    """Connected graphs with an edge: witness present iff non-bipartite"""
    mismatches: List[str] = []
    checked = 0
    for entry in AtlasProvider(max_vertices, connected_only=True).iter_entries():
        h = entry.graph
        if not h.edges:
            continue
        checked += 1
        present = edge_flip_witness(h, config.max_elements) is not None
        if present == is_bipartite(h).is_bipartite:
            mismatches.append(entry.graph_id)
    return GoldenCheck(f"edge-flip witness iff non-bipartite ({checked} graphs)", not mismatches, [], mismatches)


def check_taylor_patterns(config: RunConfig) -> GoldenCheck:
    """Coordinates at which each preset fails to separate"""
    observed = {name: list(derive_taylor_witness(get_system(name)).failed_coordinates)
                for name in ("siggers4", "siggers6-corrected", "siggers6-paper")}
    expected = {"siggers4": [], "siggers6-corrected": [], "siggers6-paper": [3, 4]}
    return GoldenCheck("Taylor patterns of the Siggers presets", observed == expected, expected, observed)


def check_search_outcomes(config: RunConfig) -> GoldenCheck:
    system = get_system("siggers4", True)
    graphs = {
        "K2": Graph.complete(2),
        "K3": Graph.complete(3),
        "C5": Graph.cycle(5),
        "loop": Graph.loop_vertex(),
    }
    expected = {"K2": "SAT", "K3": "UNSAT", "C5": "UNSAT", "loop": "SAT"}
    observed: Dict[str, str] = {}
    for name, h in graphs.items():
        outcome = search_polymorphism(h, system, config.max_nodes, config.budget_ms, config.max_classes, config.seed)
        status = outcome.status.value
        if outcome.status is SearchStatus.SAT and not verify_polymorphism(h, outcome.table, system):
            status = "SAT-unverified"
        observed[name] = status
    return GoldenCheck("siggers4 search outcomes", observed == expected, expected, observed)


def check_sub_taylor(config: RunConfig) -> GoldenCheck:
    """
    Siggers tables of K2 and C4 lift to sub-Taylor operations on mhom(K2, K2)
    (exhaustive) and mhom(K2, C4) (18^4 tuples, sampled at the default budget)
    """
    system = get_system("siggers4", True)
    k2 = Graph.complete(2)
    observed: Dict[str, Any] = {}
    for name, h in (("K2", k2), ("C4", Graph.cycle(4))):
        outcome = search_polymorphism(h, system, config.max_nodes, config.budget_ms, config.max_classes, config.seed)
        if outcome.status is not SearchStatus.SAT:
            observed[name] = {"search": outcome.status.value}
            continue
        witness = derive_taylor_witness(system, outcome.table).witness
        report = verify_sub_taylor(witness, build_mhom(k2, h, config.max_elements), config.samples, config.seed)
        observed[name] = {"passed": report.passed, "violations": len(report.violations)}
    expected = {name: {"passed": True, "violations": 0} for name in ("K2", "C4")}
    return GoldenCheck("sub-Taylor lift", observed == expected, expected, observed)


GOLDEN_CHECKS: Dict[str, Callable[[RunConfig], GoldenCheck]] = {
    "dodecagon": check_dodecagon,
    "flip-loop": check_flip_fixed_iff_loop,
    "edge-flip": check_edge_flip_witness,
    "taylor-patterns": check_taylor_patterns,
    "search": check_search_outcomes,
    "sub-taylor": check_sub_taylor,
}


def run_golden_checks(config: Optional[RunConfig] = None, names: Optional[List[str]] = None) -> List[GoldenCheck]:
    config = config or RunConfig()
    results = []
    for name in names or list(GOLDEN_CHECKS):
        check = GOLDEN_CHECKS[name](config)
        level = logging.INFO if check.passed else logging.ERROR
        logger.log(level, f"golden check {check.name}: {'pass' if check.passed else 'FAIL'}")
        results.append(check)
    return results

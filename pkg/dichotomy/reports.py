"""
Per-input reports behind the classify, complex, poly and poset commands
"""
import logging
from typing import Any, Dict

from config.run_config import RunConfig
from graphs.core import compute_core
from graphs.graph import Graph
from identities.identity_factory import get_system
from mhom.multihom import build_mhom, edge_flip_witness, flip_map
from polysearch.search import SearchStatus, search_polymorphism
from polysearch.taylor import derive_taylor_witness
from polysearch.verify import verify_polymorphism
from posets.dismantle import dismantle
from posets.poset import Poset, connected_components, irreducible_elements, is_ramified_certified
from topology.complex import SimplicialComplex, euler_characteristic, order_complex
from topology.homology import homology
from topology.lefschetz import lefschetz_number
from topology.verdict import contractibility_verdict
from utils.errors import GuardExceeded
from utils.helpers import Stopwatch

from .classify import classify

logger = logging.getLogger(__name__)


def _homology_payload(c: SimplicialComplex, max_hom_dim: int) -> Dict[str, Any]:
    groups = homology(c, min(max_hom_dim, c.max_dim))
    return {
        "face_counts": c.face_counts(),
        "euler_characteristic": euler_characteristic(c),
        "homology": [g.to_dict() for g in groups],
        "betti": [g.betti for g in groups],
    }


def classify_report(h: Graph, graph_id: str, config: RunConfig) -> Dict[str, Any]:
    result = classify(h, graph_id).to_dict()
    try:
        core = compute_core(h, config.max_core_vertices)
        result["core"] = core.to_dict()
    except GuardExceeded as e:
        logger.warning(f"{graph_id}: core skipped, {e}")
        result["core"] = None
    return result


def complex_report(h: Graph, graph_id: str, config: RunConfig) -> Dict[str, Any]:
    """mhom(K2, h) with its order complex, the flip and per-component verdicts"""
    stopwatch = Stopwatch()
    mp = build_mhom(Graph.complete(2), h, config.max_elements)
    c = order_complex(mp.poset, max_faces=config.max_faces)
    flip = flip_map(mp)
    witness = edge_flip_witness(h, config.max_elements, mp=mp) if h.edges else None
    verdicts = contractibility_verdict(mp.poset, config.max_hom_dim, config.max_faces)

    report: Dict[str, Any] = {
        "graph": graph_id,
        "mhom": mp.to_dict(include_relations=False),
        "elements": len(mp),
        "components": [v.to_dict() for v in verdicts],
        "flip": {
            "fixed_elements": flip.fixed_points(),
            "lefschetz": lefschetz_number(c, flip.values),
        },
        "edge_flip_witness": None if witness is None else witness.to_dict(),
    }
    report.update(_homology_payload(c, config.max_hom_dim))
    logger.info(f"{graph_id}: mhom(K2, H) has {len(mp)} elements, "
                f"{sum(c.face_counts())} faces ({stopwatch.elapsed_ms:.0f} ms)")
    return report


def poly_report(h: Graph, graph_id: str, config: RunConfig) -> Dict[str, Any]:
    """Polymorphism search, independent verification and the Taylor derivation"""
    system = get_system(config.identity, config.idempotent)
    outcome = search_polymorphism(h, system, config.max_nodes, config.budget_ms, config.max_classes, config.seed)
    verification = None
    table = None
    if outcome.status is SearchStatus.SAT:
        verification = verify_polymorphism(h, outcome.table, system).to_dict()
        table = outcome.table
    return {
        "graph": graph_id,
        "system": system.to_dict(),
        "search": outcome.to_dict(),
        "verification": verification,
        "taylor": derive_taylor_witness(system, table).to_dict(),
    }


def poset_report(p: Poset, poset_id: str, config: RunConfig) -> Dict[str, Any]:
    """Dismantling trace, irreducibles, components, homology and the ramified check"""
    trace = dismantle(p)
    c = order_complex(p, max_faces=config.max_faces)
    try:
        ramified = is_ramified_certified(p).to_dict()
    except GuardExceeded as e:
        logger.info(f"{poset_id}: ramified certificate skipped, {e}")
        ramified = None

    report: Dict[str, Any] = {
        "poset": poset_id,
        "size": p.k,
        "irreducible_elements": [
            {"element": r.element, "kind": r.kind.value, "witness": r.witness} for r in irreducible_elements(p)
        ],
        "dismantling": trace.to_dict(),
        "dismantles_to_point": trace.is_point,
        "component_count": len(connected_components(p)),
        "components": [v.to_dict() for v in contractibility_verdict(p, config.max_hom_dim, config.max_faces)],
        "ramified": ramified,
    }
    report.update(_homology_payload(c, config.max_hom_dim))
    return report

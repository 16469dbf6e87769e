"""
Cross-validation of the classification against polymorphism search, the
flip action and the topology of mhom(K2, core)
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from config.run_config import RunConfig
from graphs.core import CoreResult, compute_core
from graphs.graph import Graph, has_loop
from identities.identity_factory import get_system
from mhom.multihom import build_mhom, flip_fixed_elements
from polysearch.search import SearchOutcome, SearchStatus, search_polymorphism
from topology.verdict import ComponentVerdict, Verdict, contractibility_verdict
from utils.errors import BudgetExceeded

from .classify import ClassificationResult, Complexity, classify

logger = logging.getLogger(__name__)


class ImplicationStatus(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    UNCHECKED = "UNCHECKED"


# Statements checked per graph
HARDNESS = "a non-bipartite loopless core has no polymorphism satisfying the Siggers identity"
CONTRACTIBILITY = ("a polymorphism satisfying the Siggers identity makes every component "
                   "of mhom(K2, core) contractible")
FLIP_LOOP = "the flip on mhom(K2, H) has a fixed element exactly when H has a loop"
TRACTABILITY = "a core classified as polynomial has a polymorphism satisfying the Siggers identity"


@dataclass(frozen=True)
class ImplicationCheck:
    name: str
    statement: str
    status: ImplicationStatus
    detail: str

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name, "statement": self.statement, "status": self.status.value, "detail": self.detail}


@dataclass(frozen=True)
class CrossValidationReport:
    graph_id: str
    classification: ClassificationResult
    core: Optional[CoreResult]
    search: Optional[SearchOutcome]
    mhom_size: Optional[int]
    component_verdicts: Optional[Tuple[ComponentVerdict, ...]]
    flip_fixed: Optional[Tuple[int, ...]]
    implications: Tuple[ImplicationCheck, ...]
    errors: Tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return all(c.status is not ImplicationStatus.REFUTED for c in self.implications)

    @property
    def fully_checked(self) -> bool:
        return all(c.status is ImplicationStatus.VERIFIED for c in self.implications)

    def to_dict(self) -> Dict[str, object]:
        return {
            "graph": self.graph_id,
            "classification": self.classification.to_dict(),
            "core_size": None if self.core is None else self.core.core.n,
            "core": None if self.core is None else self.core.to_dict(),
            "search": None if self.search is None else self.search.to_dict(include_table=False),
            "mhom_elements": self.mhom_size,
            "component_verdicts": None if self.component_verdicts is None
            else [v.verdict.value for v in self.component_verdicts],
            "flip_fixed_elements": None if self.flip_fixed is None else list(self.flip_fixed),
            "implications": [c.to_dict() for c in self.implications],
            "consistent": self.consistent,
            "errors": list(self.errors),
        }


def _hardness(classification: ClassificationResult, search: Optional[SearchOutcome]) -> ImplicationCheck:
    if classification.verdict is not Complexity.NP_COMPLETE:
        return ImplicationCheck("hardness", HARDNESS, ImplicationStatus.VERIFIED, "premise does not hold")
    if search is None or search.status is SearchStatus.TIMEOUT:
        return ImplicationCheck("hardness", HARDNESS, ImplicationStatus.UNCHECKED, "search did not finish")
    if search.status is SearchStatus.UNSAT:
        return ImplicationCheck("hardness", HARDNESS, ImplicationStatus.VERIFIED, "search UNSAT")
    return ImplicationCheck("hardness", HARDNESS, ImplicationStatus.REFUTED, "search found a table")


def _contractibility(search: Optional[SearchOutcome],
                     verdicts: Optional[Tuple[ComponentVerdict, ...]]) -> ImplicationCheck:
    if verdicts is None:
        return ImplicationCheck("contractibility", CONTRACTIBILITY, ImplicationStatus.UNCHECKED,
                                "component verdicts unavailable")
    bad = [i for i, v in enumerate(verdicts) if v.verdict is Verdict.NOT_CONTRACTIBLE]
    if not bad:
        return ImplicationCheck("contractibility", CONTRACTIBILITY, ImplicationStatus.VERIFIED,
                                "no component refutes contractibility")
    if search is not None and search.status is SearchStatus.UNSAT:
        return ImplicationCheck("contractibility", CONTRACTIBILITY, ImplicationStatus.VERIFIED,
                                f"premise does not hold; components {bad} not contractible")
    if search is not None and search.status is SearchStatus.SAT:
        return ImplicationCheck("contractibility", CONTRACTIBILITY, ImplicationStatus.REFUTED,
                                f"search SAT but components {bad} not contractible")
    return ImplicationCheck("contractibility", CONTRACTIBILITY, ImplicationStatus.UNCHECKED,
                            f"search did not finish; components {bad} not contractible")


def _flip_loop(core: Optional[Graph], fixed: Optional[Tuple[int, ...]]) -> ImplicationCheck:
    if core is None or fixed is None:
        return ImplicationCheck("flip-loop", FLIP_LOOP, ImplicationStatus.UNCHECKED, "mhom unavailable")
    looped = has_loop(core) is not None
    if looped == bool(fixed):
        return ImplicationCheck("flip-loop", FLIP_LOOP, ImplicationStatus.VERIFIED,
                                f"loop={looped}, fixed elements={len(fixed)}")
    return ImplicationCheck("flip-loop", FLIP_LOOP, ImplicationStatus.REFUTED,
                            f"loop={looped} but fixed elements={len(fixed)}")


def _tractability(classification: ClassificationResult, search: Optional[SearchOutcome]) -> ImplicationCheck:
    if classification.verdict is not Complexity.P:
        return ImplicationCheck("tractability", TRACTABILITY, ImplicationStatus.VERIFIED, "premise does not hold")
    if search is None or search.status is SearchStatus.TIMEOUT:
        return ImplicationCheck("tractability", TRACTABILITY, ImplicationStatus.UNCHECKED, "search did not finish")
    if search.status is SearchStatus.SAT:
        return ImplicationCheck("tractability", TRACTABILITY, ImplicationStatus.VERIFIED, "search SAT")
    return ImplicationCheck("tractability", TRACTABILITY, ImplicationStatus.REFUTED, "search UNSAT")


def cross_validate(h: Graph, config: Optional[RunConfig] = None,
                   graph_id: Optional[str] = None) -> CrossValidationReport:
    """
    Core, Siggers search on the core, mhom(K2, core) with flip and
    contractibility analysis, then the four implications. Budget or guard
    exhaustion in a sub-check leaves its implications UNCHECKED.
    """
    config = config or RunConfig()
    graph_id = graph_id or h.label()
    classification = classify(h, graph_id)
    errors: List[str] = []

    core: Optional[CoreResult] = None
    search: Optional[SearchOutcome] = None
    verdicts: Optional[Tuple[ComponentVerdict, ...]] = None
    fixed: Optional[Tuple[int, ...]] = None
    mhom_size: Optional[int] = None

    try:
        core = compute_core(h, config.max_core_vertices)
    except BudgetExceeded as e:
        errors.append(f"core: {e}")

    if core is not None:
        system = get_system(config.identity, config.idempotent)
        try:
            search = search_polymorphism(core.core, system, config.max_nodes, config.budget_ms,
                                         config.max_classes, config.seed)
        except BudgetExceeded as e:
            errors.append(f"search: {e}")
        try:
            mp = build_mhom(Graph.complete(2), core.core, config.max_elements)
            mhom_size = len(mp)
            fixed = tuple(flip_fixed_elements(mp))
            verdicts = tuple(contractibility_verdict(mp.poset, config.max_hom_dim, config.max_faces))
        except BudgetExceeded as e:
            errors.append(f"mhom: {e}")

    implications = (
        _hardness(classification, search),
        _contractibility(search, verdicts),
        _flip_loop(None if core is None else core.core, fixed),
        _tractability(classification, search),
    )
    report = CrossValidationReport(graph_id, classification, core, search, mhom_size, verdicts, fixed,
                                   implications, tuple(errors))
    for check in implications:
        if check.status is ImplicationStatus.REFUTED:
            logger.error(f"{graph_id}: {check.name} refuted ({check.detail})")
    return report

"""
Per-component contractibility verdicts for finite posets
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from config.settings import Config
from posets.dismantle import dismantle
from posets.poset import Poset, connected_components
from utils.errors import BudgetExceeded, ChainComplexError

from .complex import euler_characteristic, order_complex
from .homology import HomologyGroup, homology, is_point_profile

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    CONTRACTIBLE = "CONTRACTIBLE"
    NOT_CONTRACTIBLE = "NOT_CONTRACTIBLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ComponentVerdict:
    elements: Tuple[int, ...]
    verdict: Verdict
    reason: str
    dismantle_steps: int
    residual_size: int
    homology: Optional[Tuple[HomologyGroup, ...]] = None
    face_counts: Tuple[int, ...] = field(default=())
    euler: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "elements": list(self.elements),
            "verdict": self.verdict.value,
            "reason": self.reason,
            "dismantle_steps": self.dismantle_steps,
            "residual_size": self.residual_size,
            "homology": None if self.homology is None else [g.to_dict() for g in self.homology],
            "face_counts": list(self.face_counts),
            "euler_characteristic": self.euler,
        }


def component_verdict(p: Poset, elements: List[int], max_hom_dim: int, max_faces: int) -> ComponentVerdict:
    sub = p.subposet(elements)
    trace = dismantle(sub)
    steps, residual = len(trace.removed), trace.residual.k
    try:
        c = order_complex(sub, max_dim=max_hom_dim + 1, max_faces=max_faces)
        groups = tuple(homology(c, up_to=min(max_hom_dim, c.max_dim)))
    except BudgetExceeded as e:
        if trace.is_point:
            return ComponentVerdict(tuple(elements), Verdict.CONTRACTIBLE,
                                    f"dismantles to a point; homology skipped ({e})", steps, residual)
        logger.warning(f"component {elements[:5]}...: {e}")
        return ComponentVerdict(tuple(elements), Verdict.UNKNOWN, str(e), steps, residual)

    counts = tuple(c.face_counts())
    chi = euler_characteristic(c) if c.max_dim <= max_hom_dim else None
    point_like = is_point_profile(groups)
    if trace.is_point:
        if not point_like:
            raise ChainComplexError(f"component {list(elements)} dismantles to a point but has homology "
                                    f"{[str(g) for g in groups]}")
        return ComponentVerdict(tuple(elements), Verdict.CONTRACTIBLE, "dismantles to a point",
                                steps, residual, groups, counts, chi)
    if not point_like:
        witness = next(g for g in groups if (g.dimension == 0 and (g.betti != 1 or g.torsion))
                       or (g.dimension > 0 and not g.is_trivial()))
        return ComponentVerdict(tuple(elements), Verdict.NOT_CONTRACTIBLE,
                                f"H_{witness.dimension} = {witness}", steps, residual, groups, counts, chi)
    return ComponentVerdict(tuple(elements), Verdict.UNKNOWN,
                            f"ramified residual of {residual} elements with trivial homology "
                            f"up to dimension {groups[-1].dimension}",
                            steps, residual, groups, counts, chi)


def contractibility_verdict(p: Poset, max_hom_dim: Optional[int] = None,
                            max_faces: Optional[int] = None) -> List[ComponentVerdict]:
    """
    CONTRACTIBLE when a component dismantles to a point, NOT_CONTRACTIBLE
    when its homology differs from a point's in some dimension up to
    max_hom_dim, UNKNOWN otherwise or when the face budget runs out.
    """
    max_hom_dim = Config.TOPOLOGY_CONFIG["max_hom_dim"] if max_hom_dim is None else max_hom_dim
    max_faces = max_faces or Config.TOPOLOGY_CONFIG["max_faces"]
    verdicts = [component_verdict(p, comp, max_hom_dim, max_faces) for comp in connected_components(p)]
    logger.info(f"contractibility: {[v.verdict.value for v in verdicts]}")
    return verdicts

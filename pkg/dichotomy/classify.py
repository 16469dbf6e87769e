"""
H-colouring complexity by the loop / bipartite case split
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from graphs.graph import BipartiteCertificate, Graph, has_loop, is_bipartite

logger = logging.getLogger(__name__)


class Complexity(str, Enum):
    P = "P"
    NP_COMPLETE = "NP-complete"


class Rationale(str, Enum):
    LOOP = "loop"
    BIPARTITE = "bipartite"
    NON_BIPARTITE_LOOPLESS = "non-bipartite-loopless"


@dataclass(frozen=True)
class ClassificationResult:
    graph_id: str
    loop: Optional[int]
    bipartite: BipartiteCertificate
    verdict: Complexity
    rationale: Rationale

    def to_dict(self) -> Dict[str, object]:
        return {
            "graph": self.graph_id,
            "loop": self.loop,
            "certificate": self.bipartite.to_dict(),
            "verdict": self.verdict.value,
            "rationale": self.rationale.value,
        }


def classify(h: Graph, graph_id: Optional[str] = None) -> ClassificationResult:
    """Loop first, then bipartiteness; anything else is NP-complete"""
    loop = has_loop(h)
    certificate = is_bipartite(h)
    if loop is not None:
        verdict, rationale = Complexity.P, Rationale.LOOP
    elif certificate.is_bipartite:
        verdict, rationale = Complexity.P, Rationale.BIPARTITE
    else:
        verdict, rationale = Complexity.NP_COMPLETE, Rationale.NON_BIPARTITE_LOOPLESS
    result = ClassificationResult(graph_id or h.label(), loop, certificate, verdict, rationale)
    logger.info(f"classify {result.graph_id}: {verdict.value} ({rationale.value})")
    return result

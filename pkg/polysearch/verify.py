"""
Checking operation tables against edge preservation and identity systems
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from graphs.graph import Graph
from identities.identity_system import IdentitySystem

from .table import PolymorphismTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationResult:
    passed: bool
    failed_check: Optional[str] = None
    counterexample: Dict[str, object] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, object]:
        return {"passed": self.passed, "failed_check": self.failed_check, "counterexample": self.counterexample}


def verify_polymorphism(h: Graph, table: PolymorphismTable, sys: IdentitySystem) -> VerificationResult:
    """Edge preservation, then idempotence if required, then every identity instance"""
    if table.graph.n != h.n or table.graph.edges != h.edges:
        return VerificationResult(False, "graph", {"reason": "table is defined on a different graph"})
    if table.arity != sys.arity:
        return VerificationResult(False, "arity", {"table": table.arity, "system": sys.arity})

    violation = table.edge_violation()
    if violation is not None:
        (x, y), (fx, fy) = violation
        return VerificationResult(False, "edge", {"tuples": [list(x), list(y)], "images": [fx, fy]})

    if sys.idempotent:
        for v in range(h.n):
            value = table(*(v,) * table.arity)
            if value != v:
                return VerificationResult(False, "idempotence", {"vertex": v, "image": value})

    for lhs, rhs in sys.instantiate(h.n):
        left, right = table(*lhs), table(*rhs)
        if left != right:
            logger.debug(f"{sys.name} fails at {lhs} / {rhs}")
            return VerificationResult(False, "identity", {
                "lhs": list(lhs), "rhs": list(rhs), "values": [left, right],
            })
    return VerificationResult(True)

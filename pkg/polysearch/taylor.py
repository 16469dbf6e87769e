"""
Taylor patterns of identity systems and sub-Taylor witnesses from tables
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from identities.identity_system import IdentitySystem
from mhom.operations import Pattern, SubTaylorWitness

from .table import PolymorphismTable

logger = logging.getLogger(__name__)


def separating_pattern(sys: IdentitySystem, i: int) -> Optional[Tuple[Pattern, Pattern]]:
    """
    First identity and substitution of its variables into {x1, x2} whose
    two sides differ at coordinate i, as (alpha, beta) 0/1 tuples.
    """
    for lhs, rhs in sys.identities:
        for values in itertools.product((0, 1), repeat=len(sys.variables)):
            sub = dict(zip(sys.variables, values))
            alpha = tuple(sub[v] for v in lhs)
            beta = tuple(sub[v] for v in rhs)
            if alpha[i] != beta[i]:
                return alpha, beta
    return None


def derive_taylor_patterns(sys: IdentitySystem) -> Tuple[Dict[int, Tuple[Pattern, Pattern]], List[int]]:
    """Patterns per separable coordinate and the 1-based coordinates with none"""
    patterns: Dict[int, Tuple[Pattern, Pattern]] = {}
    failed: List[int] = []
    for i in range(sys.arity):
        found = separating_pattern(sys, i)
        if found is None:
            failed.append(i + 1)
        else:
            patterns[i] = found
    return patterns, failed


@dataclass(frozen=True)
class TaylorDerivation:
    identity: str
    witness: Optional[SubTaylorWitness]
    patterns: Dict[int, Tuple[Pattern, Pattern]]
    failed_coordinates: Tuple[int, ...]

    @property
    def succeeded(self) -> bool:
        return not self.failed_coordinates

    def to_dict(self) -> Dict[str, object]:
        return {
            "identity": self.identity,
            "succeeded": self.succeeded,
            "failed_coordinates": list(self.failed_coordinates),
            "patterns": {
                str(i + 1): {"alpha": list(a), "beta": list(b)} for i, (a, b) in sorted(self.patterns.items())
            },
        }


def derive_taylor_witness(sys: IdentitySystem, table: Optional[PolymorphismTable] = None) -> TaylorDerivation:
    """
    Patterns for every coordinate; with a table satisfying sys, also the
    sub-Taylor witness with s_i(x1, x2) = t(x_alpha_i).
    """
    patterns, failed = derive_taylor_patterns(sys)
    if failed:
        logger.info(f"{sys.name}: no separating identity at coordinates {failed}")
        return TaylorDerivation(sys.name, None, patterns, tuple(failed))
    witness = None
    if table is not None:
        if table.arity != sys.arity:
            raise ValueError(f"table arity {table.arity} does not match {sys.name} arity {sys.arity}")
        ordered = tuple(patterns[i] for i in range(sys.arity))
        s_tables = tuple(
            PolymorphismTable.from_function(table.graph, 2, lambda x1, x2, a=alpha: table(*[(x1, x2)[j] for j in a]))
            for alpha, _ in ordered
        )
        witness = SubTaylorWitness(sys.arity, ordered, table, s_tables)
    return TaylorDerivation(sys.name, witness, patterns, ())

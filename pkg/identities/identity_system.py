"""
Finite systems of height-one term identities for a single n-ary symbol
"""
import itertools
import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, Iterator, Mapping, Sequence, Tuple

logger = logging.getLogger(__name__)

Term = Tuple[str, ...]
Identity = Tuple[Term, Term]


@dataclass(frozen=True)
class IdentitySystem:
    """
    identities: pairs of n-tuples of variable symbols, each read as
    t(lhs) = t(rhs) for every assignment of the variables.
    """
    name: str
    arity: int
    variables: Tuple[str, ...]
    identities: Tuple[Identity, ...]
    idempotent: bool = True
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "identities", tuple((tuple(lhs), tuple(rhs)) for lhs, rhs in self.identities))
        if self.arity < 1:
            raise ValueError(f"arity must be at least 1, got {self.arity}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable symbols")
        if not self.identities and not self.idempotent:
            raise ValueError("identity system needs at least one identity or idempotence")
        declared = set(self.variables)
        for lhs, rhs in self.identities:
            for term in (lhs, rhs):
                if len(term) != self.arity:
                    raise ValueError(f"term {term} does not have arity {self.arity}")
                unknown = set(term) - declared
                if unknown:
                    raise ValueError(f"undeclared variables {sorted(unknown)} in {term}")

    def assignments(self, k: int) -> Iterator[Dict[str, int]]:
        """Every map from the variables into 0..k-1"""
        for values in itertools.product(range(k), repeat=len(self.variables)):
            yield dict(zip(self.variables, values))

    def instantiate(self, k: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Ground pairs of tuples over 0..k-1 that every solution must equate"""
        for assignment in self.assignments(k):
            for lhs, rhs in self.identities:
                yield tuple(assignment[v] for v in lhs), tuple(assignment[v] for v in rhs)

    def with_idempotent(self, idempotent: bool) -> "IdentitySystem":
        return replace(self, idempotent=idempotent)

    def describe(self) -> str:
        parts = [f"t({','.join(lhs)}) = t({','.join(rhs)})" for lhs, rhs in self.identities]
        if self.idempotent:
            parts.append("t(x,...,x) = x")
        return "; ".join(parts)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], name: str = "") -> "IdentitySystem":
        return cls(
            name=str(data.get("name", name)),
            arity=int(data["arity"]),
            variables=tuple(str(v) for v in data["variables"]),
            identities=tuple((tuple(map(str, lhs)), tuple(map(str, rhs))) for lhs, rhs in data["identities"]),
            idempotent=bool(data.get("idempotent", True)),
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "arity": self.arity,
            "variables": list(self.variables),
            "identities": [[list(lhs), list(rhs)] for lhs, rhs in self.identities],
            "idempotent": self.idempotent,
        }


def substitute(term: Sequence[str], assignment: Mapping[str, Any]) -> Tuple[Any, ...]:
    return tuple(assignment[v] for v in term)

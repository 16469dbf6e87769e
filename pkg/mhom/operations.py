"""
Operations on mhom(G, H) induced by polymorphisms of H, and the sub-Taylor
verifier
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import Config
from polysearch.table import PolymorphismTable
from utils.errors import NotAPolymorphismError
from utils.helpers import make_rng

from .multihom import MhomPoset, Multihom, bits, to_mask

logger = logging.getLogger(__name__)

Pattern = Tuple[int, ...]


class InducedOperation:
    """
    f'(m_1, ..., m_n)(v) = { f(h_1, ..., h_n) : h_i in m_i(v) }, evaluated on
    element indices of mp. Set images are cached per tuple of vertex masks.
    """

    def __init__(self, table: PolymorphismTable, mp: MhomPoset):
        self.table = table
        self.mp = mp
        self._images: Dict[Tuple[int, ...], int] = {}

    @property
    def arity(self) -> int:
        return self.table.arity

    def image_mask(self, masks: Sequence[int]) -> int:
        key = tuple(masks)
        if key not in self._images:
            block = self.table.array[np.ix_(*[bits(m) for m in key])]
            self._images[key] = to_mask(np.unique(block).tolist())
        return self._images[key]

    def apply(self, args: Sequence[Multihom]) -> Multihom:
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        return Multihom(tuple(
            self.image_mask([m.masks[u] for m in args]) for u in range(self.mp.g.n)
        ))

    def __call__(self, *elements: int) -> int:
        result = self.apply([self.mp.elements[e] for e in elements])
        try:
            return self.mp.index[result]
        except KeyError:
            raise ValueError(f"image {result!r} is not a multihomomorphism") from None


def induce_on_mhom(table: PolymorphismTable, mp: MhomPoset) -> InducedOperation:
    """Validate table as a polymorphism of mp's target and lift it"""
    if table.graph.n != mp.h.n or table.graph.edges != mp.h.edges:
        raise ValueError("operation table is defined on a different graph than the mhom target")
    violation = table.edge_violation()
    if violation is not None:
        pair, images = violation
        raise NotAPolymorphismError(pair, images)
    return InducedOperation(table, mp)


@dataclass(frozen=True)
class SubTaylorWitness:
    """
    t with binary s_i and patterns (alpha_i, beta_i), each a 0/1 tuple
    choosing x1 or x2 per coordinate, alpha_i[i] != beta_i[i].
    """
    arity: int
    patterns: Tuple[Tuple[Pattern, Pattern], ...]
    t_table: PolymorphismTable
    s_tables: Tuple[PolymorphismTable, ...]

    def __post_init__(self):
        n = self.arity
        if self.t_table.arity != n or len(self.patterns) != n or len(self.s_tables) != n:
            raise ValueError(f"witness of arity {n} needs {n} patterns and {n} binary tables")
        for i, (alpha, beta) in enumerate(self.patterns):
            if len(alpha) != n or len(beta) != n or not set(alpha) | set(beta) <= {0, 1}:
                raise ValueError(f"pattern {i} must map {n} coordinates into {{0, 1}}")
            if alpha[i] == beta[i]:
                raise ValueError(f"pattern {i} does not separate coordinate {i}")
        if any(s.arity != 2 for s in self.s_tables):
            raise ValueError("s tables must be binary")

    def table_mismatch(self) -> Optional[Tuple[int, int, int]]:
        """First (i, x1, x2) with s_i(x1, x2) != t(x_alpha) or != t(x_beta)"""
        t = self.t_table
        for i, ((alpha, beta), s) in enumerate(zip(self.patterns, self.s_tables)):
            for x in range(t.k):
                for y in range(t.k):
                    pick = (x, y)
                    value = s(x, y)
                    if t(*[pick[a] for a in alpha]) != value or t(*[pick[b] for b in beta]) != value:
                        return i, x, y
        return None

    def to_dict(self) -> Dict[str, object]:
        return {
            "arity": self.arity,
            "patterns": [{"alpha": list(a), "beta": list(b)} for a, b in self.patterns],
            "t_table": self.t_table.to_dict(),
            "s_tables": [s.to_dict() for s in self.s_tables],
        }


@dataclass(frozen=True)
class SubTaylorReport:
    passed: bool
    exhaustive: bool
    element_count: int
    arity: int
    checked_tuples: int
    checked_pairs: int
    seed: int
    violations: Tuple[Dict[str, object], ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "exhaustive": self.exhaustive,
            "element_count": self.element_count,
            "arity": self.arity,
            "checked_tuples": self.checked_tuples,
            "checked_pairs": self.checked_pairs,
            "seed": self.seed,
            "violations": list(self.violations),
        }


def _tuple_space(count: int, arity: int, budget: int, rng: np.random.Generator) -> Tuple[bool, np.ndarray]:
    """All tuples when count**arity <= budget, else budget samples plus diagonals"""
    if count ** arity <= budget:
        grid = np.indices((count,) * arity).reshape(arity, -1).T
        return True, grid
    sampled = rng.integers(0, count, size=(budget, arity))
    diagonals = np.repeat(np.arange(count)[:, None], arity, axis=1)
    return False, np.vstack([diagonals, sampled])


def verify_sub_taylor(witness: SubTaylorWitness, mp: MhomPoset, budget: Optional[int] = None,
                      seed: int = 0) -> SubTaylorReport:
    """
    Check the induced t' and s'_i on mp: t'(m, ..., m) >= m for every m;
    t'(x_alpha_i) >= s'_i(x1, x2) and t'(x_beta_i) >= s'_i(x1, x2) over
    pairs; and monotonicity of t' by raising one coordinate of each tuple to
    an upper cover.
    """
    budget = budget or Config.MHOM_CONFIG["samples"]
    t_op = induce_on_mhom(witness.t_table, mp)
    s_ops = [induce_on_mhom(s, mp) for s in witness.s_tables]
    poset = mp.poset
    n, count = witness.arity, len(mp)
    rng = make_rng(seed)
    violations: List[Dict[str, object]] = []

    for m in range(count):
        if not poset.le(m, t_op(*(m,) * n)):
            violations.append({"check": "diagonal", "inputs": [m]})

    _, pairs = _tuple_space(count, 2, budget, rng)
    for x, y in pairs.tolist():
        pick = (x, y)
        for i, (alpha, beta) in enumerate(witness.patterns):
            s_value = s_ops[i](x, y)
            for name, pattern in (("alpha", alpha), ("beta", beta)):
                if not poset.le(s_value, t_op(*[pick[a] for a in pattern])):
                    violations.append({"check": name, "coordinate": i, "inputs": [x, y]})

    exhaustive, tuples = _tuple_space(count, n, budget, rng)
    covers = [poset.upper_covers(x) for x in range(count)]
    for row in tuples.tolist():
        base = t_op(*row)
        if exhaustive:
            bumps = [(j, c) for j in range(n) for c in covers[row[j]]]
        else:
            j = int(rng.integers(0, n))
            bumps = [(j, covers[row[j]][int(rng.integers(0, len(covers[row[j]])))])] if covers[row[j]] else []
        for j, c in bumps:
            raised = list(row)
            raised[j] = c
            if not poset.le(base, t_op(*raised)):
                violations.append({"check": "monotone", "coordinate": j, "inputs": row, "raised_to": c})

    report = SubTaylorReport(
        passed=not violations,
        exhaustive=exhaustive,
        element_count=count,
        arity=n,
        checked_tuples=len(tuples),
        checked_pairs=len(pairs),
        seed=seed,
        violations=tuple(violations),
    )
    logger.info(f"sub-Taylor check on {count} elements: "
                f"{'exhaustive' if exhaustive else 'sampled'}, {len(violations)} violations")
    return report

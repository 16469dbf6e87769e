"""
Polymorphism search: identity instances merge tuples of H^n into classes,
then backtracking with maintained arc consistency assigns a vertex per class
"""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.settings import Config
from graphs.graph import Graph
from identities.identity_system import IdentitySystem
from utils.errors import GuardExceeded
from utils.helpers import Stopwatch, make_rng

from .table import PolymorphismTable, tuple_index
from .verify import verify_polymorphism

logger = logging.getLogger(__name__)


class SearchStatus(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    propagations: int
    classes: int
    constraints: int
    wall_ms: float

    def to_dict(self) -> Dict[str, int]:
        # wall time is logged, not reported
        return {
            "nodes": self.nodes,
            "propagations": self.propagations,
            "classes": self.classes,
            "constraints": self.constraints,
        }


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    table: Optional[PolymorphismTable]
    stats: SearchStats
    seed: int
    identity: str
    reason: str = ""

    def to_dict(self, include_table: bool = True) -> Dict[str, object]:
        data: Dict[str, object] = {
            "status": self.status.value,
            "identity": self.identity,
            "seed": self.seed,
            "stats": self.stats.to_dict(),
        }
        if self.reason:
            data["reason"] = self.reason
        if include_table and self.table is not None:
            data["table"] = self.table.to_dict()
        return data


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index stays the root
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class _Timeout(Exception):
    pass


class PolymorphismSearch:
    """One search instance; run() is deterministic for a given seed"""

    def __init__(self, h: Graph, sys: IdentitySystem, max_nodes: Optional[int] = None,
                 budget_ms: Optional[int] = None, max_classes: Optional[int] = None, seed: int = 0):
        self.h = h
        self.sys = sys
        self.max_nodes = max_nodes or Config.SEARCH_CONFIG["max_nodes"]
        self.budget_ms = budget_ms or Config.SEARCH_CONFIG["budget_ms"]
        self.max_classes = max_classes or Config.SEARCH_CONFIG["max_classes"]
        self.seed = seed
        self.rng = make_rng(seed)
        self.nodes = 0
        self.propagations = 0
        self._support: Dict[int, int] = {}

    # Model

    def _classes(self) -> Tuple[np.ndarray, int]:
        """Class id per tuple index, classes numbered by smallest member"""
        k, n = self.h.n, self.sys.arity
        uf = _UnionFind(k ** n)
        for lhs, rhs in self.sys.instantiate(k):
            uf.union(tuple_index(lhs, k), tuple_index(rhs, k))
        roots = [uf.find(i) for i in range(k ** n)]
        ids: Dict[int, int] = {}
        class_of = np.empty(k ** n, dtype=np.int64)
        for i, r in enumerate(roots):
            class_of[i] = ids.setdefault(r, len(ids))
        return class_of, len(ids)

    def _adjacent_class_pairs(self, class_of: np.ndarray) -> np.ndarray:
        """Distinct (a, b), a <= b, of classes holding componentwise-adjacent tuples"""
        k, n = self.h.n, self.sys.arity
        arcs = np.asarray(self.h.oriented_edges, dtype=np.int64).reshape(-1, 2)
        src = np.zeros((1,), dtype=np.int64)
        dst = np.zeros((1,), dtype=np.int64)
        for _ in range(n):
            src = (src[:, None] * k + arcs[None, :, 0]).reshape(-1)
            dst = (dst[:, None] * k + arcs[None, :, 1]).reshape(-1)
        pairs = np.stack([class_of[src], class_of[dst]], axis=1) if len(src) else np.zeros((0, 2), dtype=np.int64)
        pairs.sort(axis=1)
        return np.unique(pairs, axis=0) if len(pairs) else pairs

    def _support_of(self, mask: int) -> int:
        """Vertices adjacent to some vertex of mask"""
        if mask not in self._support:
            out = 0
            m = mask
            while m:
                low = m & -m
                out |= self.h.neighbor_masks[low.bit_length() - 1]
                m ^= low
            self._support[mask] = out
        return self._support[mask]

    # Solving

    def _propagate(self, doms: List[int], changed: List[int]) -> bool:
        queue = deque((c, v) for v in changed for c in self.neighbors[v])
        while queue:
            c, v = queue.popleft()
            narrowed = doms[c] & self._support_of(doms[v])
            if narrowed == doms[c]:
                continue
            self.propagations += 1
            if not narrowed:
                return False
            doms[c] = narrowed
            queue.extend((d, c) for d in self.neighbors[c] if d != v)
        return True

    def _select(self, doms: List[int]) -> Optional[int]:
        best, best_key = None, None
        for c, d in enumerate(doms):
            size = bin(d).count("1")
            if size > 1:
                key = (size, -len(self.neighbors[c]), c)
                if best_key is None or key < best_key:
                    best, best_key = c, key
        return best

    def _ordered_values(self, mask: int) -> List[int]:
        values = [v for v in range(self.h.n) if mask >> v & 1]
        return [values[i] for i in self.rng.permutation(len(values))]

    def _tick(self, stopwatch: Stopwatch):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Timeout(f"node budget of {self.max_nodes} exhausted")
        if self.nodes % 256 == 0 and stopwatch.expired():
            raise _Timeout(f"time budget of {self.budget_ms} ms exhausted")

    def _backtrack(self, doms: List[int], stopwatch: Stopwatch) -> Optional[List[int]]:
        stack: List[Tuple[List[int], int, List[int]]] = []
        while True:
            var = self._select(doms)
            if var is None:
                return doms
            stack.append((doms, var, self._ordered_values(doms[var])))
            doms = None
            while stack and doms is None:
                base, var, values = stack[-1]
                if not values:
                    stack.pop()
                    continue
                value = values.pop(0)
                self._tick(stopwatch)
                trial = list(base)
                trial[var] = 1 << value
                if self._propagate(trial, [var]):
                    doms = trial
            if doms is None:
                return None

    def run(self) -> SearchOutcome:
        stopwatch = Stopwatch(self.budget_ms)
        k, n = self.h.n, self.sys.arity
        class_of, count = self._classes()
        if count > self.max_classes:
            raise GuardExceeded("search classes", self.max_classes,
                                f"{count} tuple classes exceed the guard of {self.max_classes}")

        full = (1 << k) - 1
        doms = [full] * count
        if self.sys.idempotent:
            for v in range(k):
                doms[int(class_of[tuple_index((v,) * n, k)])] &= 1 << v

        looped = sum(1 << v for v in self.h.loops)
        self.neighbors: List[List[int]] = [[] for _ in range(count)]
        pairs = self._adjacent_class_pairs(class_of)
        for a, b in pairs.tolist():
            if a == b:
                doms[a] &= looped
            else:
                self.neighbors[a].append(b)
                self.neighbors[b].append(a)

        def finish(status: SearchStatus, table=None, reason: str = "") -> SearchOutcome:
            stats = SearchStats(self.nodes, self.propagations, count, len(pairs), stopwatch.elapsed_ms)
            logger.info(f"{self.sys.name} on {self.h.label()}: {status.value} "
                        f"({stats.nodes} nodes, {stats.wall_ms:.0f} ms)")
            return SearchOutcome(status, table, stats, self.seed, self.sys.name, reason)

        if any(d == 0 for d in doms) or not self._propagate(doms, list(range(count))):
            return finish(SearchStatus.UNSAT, reason="inconsistent before search")
        try:
            solution = self._backtrack(doms, stopwatch)
        except _Timeout as e:
            logger.warning(f"{self.sys.name} on {self.h.label()}: {e}")
            return finish(SearchStatus.TIMEOUT, reason=str(e))
        if solution is None:
            return finish(SearchStatus.UNSAT)

        values = [solution[int(c)].bit_length() - 1 for c in class_of]
        table = PolymorphismTable(self.h, n, tuple(values))
        check = verify_polymorphism(self.h, table, self.sys)
        if not check:
            raise RuntimeError(f"search produced a table failing {check.failed_check}: {check.counterexample}")
        return finish(SearchStatus.SAT, table)


def search_polymorphism(h: Graph, sys: IdentitySystem, max_nodes: Optional[int] = None,
                        budget_ms: Optional[int] = None, max_classes: Optional[int] = None,
                        seed: int = 0) -> SearchOutcome:
    return PolymorphismSearch(h, sys, max_nodes, budget_ms, max_classes, seed).run()

"""
Operation tables H^n -> H stored row-major (first coordinate most significant)
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from graphs.graph import Graph

logger = logging.getLogger(__name__)

TuplePair = Tuple[Tuple[int, ...], Tuple[int, ...]]


def tuple_index(values: Sequence[int], k: int) -> int:
    index = 0
    for v in values:
        index = index * k + v
    return index


def index_tuple(index: int, k: int, n: int) -> Tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        index, out[i] = divmod(index, k)
    return tuple(out)


@dataclass(frozen=True)
class PolymorphismTable:
    """Total map H^n -> V(H); values[tuple_index(x)] is the image of x"""
    graph: Graph
    arity: int
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.arity < 1:
            raise ValueError(f"arity must be at least 1, got {self.arity}")
        expected = self.graph.n ** self.arity
        if len(values) != expected:
            raise ValueError(f"table needs {expected} entries, got {len(values)}")
        if any(not 0 <= v < self.graph.n for v in values):
            raise ValueError("table values out of range")

    # Construction

    @classmethod
    def from_function(cls, h: Graph, n: int, fn: Callable[..., int]) -> "PolymorphismTable":
        values = [fn(*x) for x in itertools.product(range(h.n), repeat=n)]
        return cls(h, n, tuple(values))

    @classmethod
    def projection(cls, h: Graph, n: int, i: int) -> "PolymorphismTable":
        """Projection onto coordinate i (0-based)"""
        return cls.from_function(h, n, lambda *x: x[i])

    @classmethod
    def constant(cls, h: Graph, n: int, v: int) -> "PolymorphismTable":
        return cls(h, n, (v,) * (h.n ** n))

    # Evaluation

    @property
    def k(self) -> int:
        return self.graph.n

    def __call__(self, *args: int) -> int:
        return self.values[tuple_index(args, self.k)]

    def tuples(self) -> Iterator[Tuple[int, ...]]:
        return itertools.product(range(self.k), repeat=self.arity)

    @cached_property
    def array(self) -> np.ndarray:
        """Values as an n-dimensional array indexed by the tuple"""
        out = np.asarray(self.values, dtype=np.int64).reshape((self.k,) * self.arity)
        out.flags.writeable = False
        return out

    def is_idempotent(self) -> bool:
        return all(self(*(v,) * self.arity) == v for v in range(self.k))

    def edge_violation(self) -> Optional[Tuple[TuplePair, Tuple[int, int]]]:
        """
        First pair of componentwise-adjacent tuples whose images are not
        adjacent, with those images; None when every edge is preserved.
        """
        arcs = np.asarray(self.graph.oriented_edges, dtype=np.int64).reshape(-1, 2)
        if len(arcs) == 0:
            return None
        adjacency = np.zeros((self.k, self.k), dtype=bool)
        adjacency[arcs[:, 0], arcs[:, 1]] = True
        flat = np.asarray(self.values, dtype=np.int64)
        n = self.arity
        # one coordinate at a time keeps memory at m^n
        src = np.zeros((1,), dtype=np.int64)
        dst = np.zeros((1,), dtype=np.int64)
        for _ in range(n):
            src = (src[:, None] * self.k + arcs[None, :, 0]).reshape(-1)
            dst = (dst[:, None] * self.k + arcs[None, :, 1]).reshape(-1)
        ok = adjacency[flat[src], flat[dst]]
        if ok.all():
            return None
        bad = int(np.argmin(ok))
        x, y = index_tuple(int(src[bad]), self.k, n), index_tuple(int(dst[bad]), self.k, n)
        return (x, y), (self(*x), self(*y))

    def is_polymorphism(self) -> bool:
        return self.edge_violation() is None

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.k, "arity": self.arity, "table": list(self.values)}

"""
Finite graphs with loops, bipartiteness certificates and loop detection
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Finite symmetric relation on vertices 0..n-1. Edges are stored as
    unordered pairs (u <= v); u == v is a self-loop.
    """
    n: int
    edges: FrozenSet[Edge]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            normalized.add(_normalize_edge(int(u), int(v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    # Construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> "Graph":
        return cls(n, frozenset((e[0], e[1]) for e in edges), name)

    @classmethod
    def complete(cls, k: int) -> "Graph":
        return cls.from_edges(k, [(u, v) for u in range(k) for v in range(u + 1, k)], f"K{k}")

    @classmethod
    def cycle(cls, k: int) -> "Graph":
        if k < 3:
            raise ValueError("cycles need at least 3 vertices")
        return cls.from_edges(k, [(i, (i + 1) % k) for i in range(k)], f"C{k}")

    @classmethod
    def path(cls, k: int) -> "Graph":
        """Path on k vertices (k - 1 edges)"""
        return cls.from_edges(k, [(i, i + 1) for i in range(k - 1)], f"P{k}")

    @classmethod
    def loop_vertex(cls) -> "Graph":
        return cls.from_edges(1, [(0, 0)], "loop")

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "") -> "Graph":
        """Relabel a networkx graph onto 0..n-1 in sorted node order"""
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), [(index[u], index[v]) for u, v in g.edges()], name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def with_loops(self, vertices: Iterable[int]) -> "Graph":
        extra = [(v, v) for v in vertices]
        return Graph.from_edges(self.n, list(self.edges) + extra, self.name)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError("relabel needs a permutation of the vertices")
        return Graph.from_edges(self.n, [(permutation[u], permutation[v]) for u, v in self.edges], self.name)

    def induced_subgraph(self, vertices: Sequence[int]) -> Tuple["Graph", Dict[int, int]]:
        """Induced subgraph renumbered in ascending order, with old -> new map"""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(keep), sub, self.name), index

    # Queries

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Bitmask of neighbours per vertex (bit w set iff adj(v, w))"""
        return tuple(sum(1 << w for w in s) for s in self.neighbor_sets)

    @cached_property
    def oriented_edges(self) -> Tuple[Edge, ...]:
        """Every (u, v) with adj(u, v), sorted; a loop appears once"""
        arcs = set()
        for u, v in self.edges:
            arcs.add((u, v))
            arcs.add((v, u))
        return tuple(sorted(arcs))

    def adj(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def neighbors(self, v: int) -> List[int]:
        return sorted(self.neighbor_sets[v])

    def degree(self, v: int) -> int:
        return len(self.neighbor_sets[v])

    @property
    def loops(self) -> List[int]:
        return sorted(u for u, v in self.edges if u == v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def label(self) -> str:
        return self.name or f"graph(n={self.n}, m={len(self.edges)})"

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)}, name={self.name!r})"


@dataclass(frozen=True)
class BipartiteCertificate:
    """Either a 2-colouring (partition) or an odd closed walk"""
    partition: Optional[Tuple[FrozenSet[int], FrozenSet[int]]] = None
    odd_closed_walk: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if (self.partition is None) == (self.odd_closed_walk is None):
            raise ValueError("certificate needs exactly one of partition / odd_closed_walk")

    @property
    def is_bipartite(self) -> bool:
        return self.partition is not None

    def validate(self, g: Graph) -> bool:
        """Re-check the certificate against the edge set of g"""
        if self.partition is not None:
            left, right = self.partition
            if left & right or (left | right) != frozenset(range(g.n)):
                return False
            return all(not ({u, v} <= left or {u, v} <= right) for u, v in g.edges)
        walk = self.odd_closed_walk
        if len(walk) < 2 or walk[0] != walk[-1]:
            return False
        steps = len(walk) - 1
        return steps % 2 == 1 and all(g.adj(a, b) for a, b in zip(walk, walk[1:]))

    def to_dict(self) -> Dict[str, object]:
        if self.partition is not None:
            return {"bipartite": True, "partition": [sorted(self.partition[0]), sorted(self.partition[1])]}
        return {"bipartite": False, "odd_closed_walk": list(self.odd_closed_walk)}


def has_loop(g: Graph) -> Optional[int]:
    """Smallest vertex carrying a self-loop, or None"""
    loops = g.loops
    return loops[0] if loops else None


def is_bipartite(g: Graph) -> BipartiteCertificate:
    """
    BFS 2-colouring per component. A loop is an odd closed walk of length 1,
    so looped graphs are reported non-bipartite.
    """
    loop = has_loop(g)
    if loop is not None:
        return BipartiteCertificate(odd_closed_walk=(loop, loop))

    colour: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    for root in range(g.n):
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    walk = _odd_walk(parent, u, w)
                    logger.debug(f"odd closed walk {walk} found in {g.label()}")
                    return BipartiteCertificate(odd_closed_walk=walk)

    left = frozenset(v for v, c in colour.items() if c == 0)
    right = frozenset(v for v, c in colour.items() if c == 1)
    return BipartiteCertificate(partition=(left, right))


def _odd_walk(parent: Dict[int, Optional[int]], u: int, w: int) -> Tuple[int, ...]:
    """root -> u, edge u-w, w -> root; both tree paths have equal parity"""
    def to_root(v: int) -> List[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    down = list(reversed(to_root(u)))
    up = to_root(w)
    return tuple(down + up)

"""
Multihomomorphism posets mhom(G, H), the flip on mhom(K2, H) and edge-flip
witnesses
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import Config
from graphs.graph import Graph
from posets.poset import MonotoneMap, Poset, connected_components
from utils.errors import BudgetExceeded, GuardExceeded

logger = logging.getLogger(__name__)


def bits(mask: int) -> List[int]:
    """Members of a subset bitmask in ascending order"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, order=True)
class Multihom:
    """Nonempty vertex subset of H per vertex of G, stored as bitmasks"""
    masks: Tuple[int, ...]

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]]) -> "Multihom":
        return cls(tuple(to_mask(s) for s in sets))

    @property
    def sets(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(bits(m)) for m in self.masks)

    def le(self, other: "Multihom") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.masks, other.masks))

    def is_valid(self, g: Graph, h: Graph) -> bool:
        """Every value nonempty and f(u) x f(v) inside E(H) for each edge uv"""
        if len(self.masks) != g.n or any(m == 0 for m in self.masks):
            return False
        for u, v in g.edges:
            for a in bits(self.masks[u]):
                if self.masks[v] & ~h.neighbor_masks[a]:
                    return False
        return True

    def flipped(self) -> "Multihom":
        return Multihom(tuple(reversed(self.masks)))

    def to_list(self) -> List[List[int]]:
        return [list(s) for s in self.sets]

    def __repr__(self):
        return "(" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets) + ")"


def is_k2(g: Graph) -> bool:
    return g.n == 2 and g.edges == frozenset({(0, 1)})


class MhomPoset:
    """
    Canonically sorted multihomomorphisms with their pointwise inclusion
    order. The relation matrix is built on first use.
    """

    def __init__(self, g: Graph, h: Graph, elements: Sequence[Multihom]):
        self.g = g
        self.h = h
        self.elements: Tuple[Multihom, ...] = tuple(sorted(elements))
        self.index: Dict[Multihom, int] = {m: i for i, m in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def poset(self) -> Poset:
        n = len(self.elements)
        if n == 0:
            return Poset(np.zeros((0, 0), dtype=bool), validate=False)
        # one 0/1 membership matrix per source vertex; a <= b iff no member of a is missing from b
        members = [self.membership(i) for i in range(self.g.n)]
        leq = np.ones((n, n), dtype=bool)
        block = 512
        for inside in members:
            outside = 1 - inside
            for start in range(0, n, block):
                leq[start:start + block] &= (inside[start:start + block] @ outside.T) == 0
        return Poset(leq, validate=False)

    def membership(self, vertex: int) -> np.ndarray:
        """elements x |V(H)| matrix, 1 where the target vertex lies in the element's value at vertex"""
        out = np.zeros((len(self.elements), self.h.n), dtype=np.int32)
        for row, m in enumerate(self.elements):
            out[row, bits(m.masks[vertex])] = 1
        return out

    def index_of(self, m: Multihom) -> int:
        return self.index[m]

    def edge_element(self, u: int, v: int) -> int:
        """Index of the edge (u, v) of H viewed as ({u}, {v})"""
        return self.index[Multihom((1 << u, 1 << v))]

    def to_dict(self, include_relations: bool = True) -> Dict[str, object]:
        data: Dict[str, object] = {
            "source": {"n": self.g.n, "edges": [list(e) for e in sorted(self.g.edges)]},
            "target": {"n": self.h.n, "edges": [list(e) for e in sorted(self.h.edges)], "name": self.h.name},
            "element_count": len(self.elements),
            "elements": [m.to_list() for m in self.elements],
        }
        if include_relations:
            data["relations"] = [list(p) for p in self.poset.relation_pairs()]
        if is_k2(self.g):
            data["flip"] = [[i, self.index[m.flipped()]] for i, m in enumerate(self.elements)]
        return data


def build_mhom(g: Graph, h: Graph, max_elements: Optional[int] = None,
               max_source_vertices: Optional[int] = None) -> MhomPoset:
    """
    Enumerate mhom(g, h) by per-vertex backtracking. A vertex's value set is
    grown one target vertex at a time in ascending order, keeping the running
    common neighbourhood. A branch is cut as soon as some later neighbour
    would be left without candidates, or, for a looped source vertex, the set
    leaves its own common neighbourhood; both conditions persist under
    adding vertices. Every search step counts against a work budget of
    max_elements * (|V(H)| + 1) * |V(G)|.
    """
    max_elements = max_elements or Config.MHOM_CONFIG["max_elements"]
    max_source_vertices = max_source_vertices or Config.MHOM_CONFIG["max_source_vertices"]
    if g.n > max_source_vertices:
        raise GuardExceeded("source vertices", max_source_vertices,
                            f"mhom source graph limited to {max_source_vertices} vertices, got {g.n}")
    if not g.is_connected():
        raise ValueError("mhom source graph must be connected")

    full = (1 << h.n) - 1
    nbr = h.neighbor_masks
    max_steps = max_elements * (h.n + 1) * max(g.n, 1)
    steps = 0
    values: List[int] = [0] * g.n
    commons: List[int] = [0] * g.n
    found: List[Multihom] = []

    def tick():
        nonlocal steps
        steps += 1
        if steps > max_steps:
            raise BudgetExceeded("mhom search steps", max_steps)

    def candidates(w: int, before: int) -> int:
        """Vertices allowed for w by its neighbours among 0..before-1"""
        allowed = full
        for x in g.neighbor_sets[w]:
            if x < before:
                allowed &= commons[x]
        return allowed

    def extend(u: int):
        if u == g.n:
            found.append(Multihom(tuple(values)))
            if len(found) > max_elements:
                raise BudgetExceeded("mhom elements", max_elements)
            return
        allowed = candidates(u, u)
        later = [(w, candidates(w, u)) for w in g.neighbor_sets[u] if w > u]
        looped = g.adj(u, u)

        def grow(pool: int, chosen: int, common: int):
            tick()
            while pool:
                low = pool & -pool
                pool ^= low
                a = low.bit_length() - 1
                grown, narrowed = chosen | low, common & nbr[a]
                if any(narrowed & pending == 0 for _, pending in later):
                    continue
                if looped and grown & ~narrowed:
                    continue
                values[u], commons[u] = grown, narrowed
                extend(u + 1)
                grow(pool, grown, narrowed)
            values[u], commons[u] = 0, 0

        grow(allowed, 0, full)

    if g.n > 0:
        extend(0)
    mp = MhomPoset(g, h, found)
    logger.info(f"mhom({g.label()}, {h.label()}): {len(mp)} elements in {steps} steps")
    return mp


def compose_multihoms(f: Multihom, g: Multihom) -> Multihom:
    """(g o f)(a) = union of g(b) over b in f(a); f in mhom(A, B), g in mhom(B, C)"""
    out = []
    for mask in f.masks:
        image = 0
        for b in bits(mask):
            image |= g.masks[b]
        out.append(image)
    return Multihom(tuple(out))


def flip_map(mp: MhomPoset) -> MonotoneMap:
    """
    The involution m -> m o nu swapping the two coordinates; fixed elements
    are exposed through MonotoneMap.fixed_points().
    """
    if not is_k2(mp.g):
        raise ValueError("flip is defined on mhom(K2, H) only")
    values = tuple(mp.index[m.flipped()] for m in mp.elements)
    return MonotoneMap(mp.poset, mp.poset, values)


def flip_fixed_elements(mp: MhomPoset) -> List[int]:
    """Fixed elements of the flip without building the order"""
    if not is_k2(mp.g):
        raise ValueError("flip is defined on mhom(K2, H) only")
    return [i for i, m in enumerate(mp.elements) if m.masks[0] == m.masks[1]]


@dataclass(frozen=True)
class EdgeFlipWitness:
    """Edge (u, v) joined to (v, u) by a path of comparable elements"""
    edge: Tuple[int, int]
    path: Tuple[int, ...]
    relations: Tuple[str, ...]
    elements: Tuple[Multihom, ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "edge": list(self.edge),
            "path": list(self.path),
            "relations": list(self.relations),
            "elements": [m.to_list() for m in self.elements],
        }


def edge_flip_witness(h: Graph, max_elements: Optional[int] = None,
                      mp: Optional[MhomPoset] = None) -> Optional[EdgeFlipWitness]:
    """
    First oriented edge (u, v) of h lying in the same component of
    mhom(K2, h) as its flip, with a shortest comparability path, or None.
    """
    if not h.edges:
        raise ValueError("edge-flip witness needs a graph with at least one edge")
    mp = mp or build_mhom(Graph.complete(2), h, max_elements)
    poset = mp.poset
    component_of: Dict[int, int] = {}
    for c, members in enumerate(connected_components(poset)):
        for x in members:
            component_of[x] = c

    for u, v in h.oriented_edges:
        a, b = mp.edge_element(u, v), mp.edge_element(v, u)
        if component_of[a] != component_of[b]:
            continue
        comparability = nx.Graph()
        comparability.add_nodes_from(range(len(mp)))
        comparability.add_edges_from(poset.relation_pairs())
        path = nx.shortest_path(comparability, a, b)
        relations = tuple("<=" if poset.le(x, y) else ">=" for x, y in zip(path, path[1:]))
        logger.debug(f"edge ({u}, {v}) reaches its flip in {len(path) - 1} steps")
        return EdgeFlipWitness((u, v), tuple(path), relations, tuple(mp.elements[i] for i in path))
    return None

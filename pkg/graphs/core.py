"""
Homomorphism search and cores of small graphs
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from config.settings import Config
from utils.errors import GuardExceeded

from .graph import Graph

logger = logging.getLogger(__name__)


def _search_order(g: Graph) -> List[int]:
    """
    Vertex order maximising adjacency to already ordered vertices, ties by
    degree then index, so each new vertex is constrained as early as possible.
    """
    remaining = set(range(g.n))
    order: List[int] = []
    placed: set = set()
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-len(g.neighbor_sets[v] & placed), -g.degree(v), v),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def iter_homomorphisms(g: Graph, h: Graph, fixed: Optional[Mapping[int, int]] = None,
                       allowed: Optional[Sequence[int]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Yield every homomorphism g -> h as a tuple of images.

    fixed pins some vertices of g; allowed restricts the image to a vertex
    subset of h. Candidates are tried in ascending order and are pruned by
    adjacency to already assigned neighbours.
    """
    fixed = dict(fixed or {})
    allowed_mask = (1 << h.n) - 1 if allowed is None else sum(1 << v for v in allowed)
    looped_mask = sum(1 << v for v in h.loops)
    order = _search_order(g)
    images: List[Optional[int]] = [None] * g.n

    def candidates(u: int) -> int:
        mask = allowed_mask
        if u in fixed:
            mask &= 1 << fixed[u]
        if g.adj(u, u):
            mask &= looped_mask
        for w in g.neighbor_sets[u]:
            if w != u and images[w] is not None:
                mask &= h.neighbor_masks[images[w]]
        return mask

    def extend(depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == len(order):
            yield tuple(images)
            return
        u = order[depth]
        mask = candidates(u)
        while mask:
            low = mask & -mask
            images[u] = low.bit_length() - 1
            yield from extend(depth + 1)
            mask ^= low
        images[u] = None

    yield from extend(0)


def find_homomorphism(g: Graph, h: Graph, fixed: Optional[Mapping[int, int]] = None,
                      allowed: Optional[Sequence[int]] = None) -> Optional[Tuple[int, ...]]:
    return next(iter_homomorphisms(g, h, fixed, allowed), None)


def is_homomorphism(g: Graph, h: Graph, images: Sequence[int]) -> bool:
    return all(h.adj(images[u], images[v]) for u, v in g.edges)


def endomorphisms(g: Graph) -> Iterator[Tuple[int, ...]]:
    return iter_homomorphisms(g, g)


@dataclass(frozen=True)
class CoreResult:
    """A core of the input graph and a retraction onto it"""
    core: Graph
    retraction: Tuple[int, ...]
    core_vertices: Tuple[int, ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "core_n": self.core.n,
            "core_edges": [list(e) for e in sorted(self.core.edges)],
            "core_vertices": list(self.core_vertices),
            "retraction": list(self.retraction),
        }


def compute_core(g: Graph, max_vertices: Optional[int] = None) -> CoreResult:
    """
    Shrink g by non-surjective endomorphisms until none exists.

    Each round tries to map the current graph into itself minus one vertex
    (vertices tried in ascending order, images in ascending order); the image
    becomes the new vertex set. The final hom g -> core is corrected by the
    inverse of its restriction to the core, which is an automorphism, so the
    result is a retraction.
    """
    max_vertices = max_vertices or Config.GRAPH_CONFIG["max_core_vertices"]
    if g.n > max_vertices:
        raise GuardExceeded("core vertices", max_vertices,
                            f"core computation limited to {max_vertices} vertices, got {g.n}")

    current = list(range(g.n))
    hom: Tuple[int, ...] = tuple(range(g.n))
    while True:
        shrink = None
        for v in current:
            shrink = find_homomorphism(g, g, allowed=[w for w in current if w != v])
            if shrink is not None:
                break
        if shrink is None:
            break
        image = sorted(set(shrink))
        logger.debug(f"core step: {len(current)} -> {len(image)} vertices")
        current, hom = image, shrink

    core, index = g.induced_subgraph(current)
    # hom restricted to the core permutes it; undo that permutation
    restricted = {v: hom[v] for v in current}
    inverse = {image: v for v, image in restricted.items()}
    retraction = tuple(index[inverse[hom[w]]] for w in range(g.n))
    logger.info(f"core of {g.label()}: {core.n} vertices")
    return CoreResult(core=core, retraction=retraction, core_vertices=tuple(current))

"""
Simplicial complexes stored face by face, and order complexes of posets
"""
import itertools
import logging
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import Config
from posets.poset import Poset
from utils.errors import BudgetExceeded

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


class SimplicialComplex:
    """
    faces[d] holds the d-dimensional faces, each an ascending vertex tuple,
    sorted and deduplicated.
    """

    def __init__(self, vertex_count: int, faces: Sequence[Iterable[Sequence[int]]]):
        self.vertex_count = vertex_count
        by_dim: List[Tuple[Face, ...]] = []
        for d, layer in enumerate(faces):
            clean = sorted({tuple(sorted(f)) for f in layer})
            for f in clean:
                if len(f) != d + 1 or len(set(f)) != d + 1:
                    raise ValueError(f"face {f} does not have dimension {d}")
                if not all(0 <= v < vertex_count for v in f):
                    raise ValueError(f"face {f} has a vertex out of range")
            by_dim.append(tuple(clean))
        while by_dim and not by_dim[-1]:
            by_dim.pop()
        self.faces: Tuple[Tuple[Face, ...], ...] = tuple(by_dim)

    @classmethod
    def from_maximal_faces(cls, vertex_count: int, maximal: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Downward closure of the given faces"""
        layers: Dict[int, set] = {}
        for face in maximal:
            face = tuple(sorted(set(face)))
            for size in range(1, len(face) + 1):
                layers.setdefault(size - 1, set()).update(itertools.combinations(face, size))
        top = max(layers) if layers else -1
        return cls(vertex_count, [layers.get(d, ()) for d in range(top + 1)])

    @property
    def max_dim(self) -> int:
        return len(self.faces) - 1

    def face_counts(self) -> List[int]:
        return [len(layer) for layer in self.faces]

    def dimension_faces(self, d: int) -> Tuple[Face, ...]:
        return self.faces[d] if 0 <= d < len(self.faces) else ()

    @cached_property
    def face_index(self) -> Tuple[Dict[Face, int], ...]:
        return tuple({f: i for i, f in enumerate(layer)} for layer in self.faces)

    def is_face(self, face: Sequence[int]) -> bool:
        f = tuple(sorted(set(face)))
        d = len(f) - 1
        return 0 <= d < len(self.faces) and f in self.face_index[d]

    def is_closed(self) -> bool:
        """Every codimension-one face of every face is present"""
        for d in range(1, len(self.faces)):
            lower = self.face_index[d - 1]
            for f in self.faces[d]:
                if any(f[:i] + f[i + 1:] not in lower for i in range(len(f))):
                    return False
        return True

    def __len__(self) -> int:
        return sum(self.face_counts())

    def __repr__(self):
        return f"SimplicialComplex(vertices={self.vertex_count}, faces={self.face_counts()})"

    def to_dict(self) -> Dict[str, object]:
        return {"vertex_count": self.vertex_count, "max_dim": self.max_dim, "face_counts": self.face_counts()}


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(c.face_counts()))


def order_complex(p: Poset, max_dim: Optional[int] = None, max_faces: Optional[int] = None) -> SimplicialComplex:
    """
    Faces are the chains of p; a d-face is a chain of d + 1 elements.
    Chains are grown depth first along the strict order, at most
    max_dim + 1 elements long.
    """
    max_faces = max_faces or Config.TOPOLOGY_CONFIG["max_faces"]
    limit = p.k if max_dim is None else max_dim + 1
    above = [p.strictly_above(x) for x in range(p.k)]
    layers: List[List[Face]] = [[] for _ in range(min(limit, p.k))]
    count = 0

    stack: List[Tuple[int, ...]] = [(x,) for x in range(p.k - 1, -1, -1)]
    while stack:
        chain = stack.pop()
        count += 1
        if count > max_faces:
            raise BudgetExceeded("faces", max_faces)
        layers[len(chain) - 1].append(tuple(sorted(chain)))
        if len(chain) < limit:
            stack.extend(chain + (y,) for y in reversed(above[chain[-1]]))

    c = SimplicialComplex(p.k, layers)
    logger.debug(f"order complex of {p.k}-element poset: faces {c.face_counts()}")
    return c

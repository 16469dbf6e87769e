"""
Finite posets over elements 0..k-1 with a boolean relation matrix
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import Config
from utils.errors import GuardExceeded

logger = logging.getLogger(__name__)


class PosetError(ValueError):
    pass


class Poset:
    """
    Immutable finite partial order. leq[i, j] is True iff i <= j.

    Conventions:
        - covers[i, j] is True iff j covers i (i < j, nothing in between)
        - upper_covers(i) are the j covering i, lower_covers(j) the i covered by j
    """

    def __init__(self, leq: np.ndarray, validate: bool = True):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError(f"leq must be square, got shape {leq.shape}")
        leq.flags.writeable = False
        self.leq = leq
        if validate:
            self._validate()

    def _validate(self):
        leq = self.leq
        if not np.all(np.diag(leq)):
            raise PosetError("relation is not reflexive")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise PosetError(f"relation is not antisymmetric: {i} <= {j} <= {i}")
        closed = np.matmul(leq, leq)
        if (closed & ~leq).any():
            i, j = np.argwhere(closed & ~leq)[0]
            raise PosetError(f"relation is not transitive: {i} <= ... <= {j} missing")

    # Construction

    @classmethod
    def from_relations(cls, k: int, pairs: Iterable[Tuple[int, int]]) -> "Poset":
        """Reflexive-transitive closure of the given strict pairs i < j"""
        leq = np.eye(k, dtype=bool)
        for i, j in pairs:
            if not (0 <= i < k and 0 <= j < k):
                raise PosetError(f"relation {i} < {j} out of range for {k} elements")
            leq[i, j] = True
        for m in range(k):
            leq |= np.outer(leq[:, m], leq[m, :])
        return cls(leq)

    @classmethod
    def chain(cls, k: int) -> "Poset":
        return cls(np.triu(np.ones((k, k), dtype=bool)))

    @classmethod
    def antichain(cls, k: int) -> "Poset":
        return cls(np.eye(k, dtype=bool))

    # Representation

    @property
    def k(self) -> int:
        return self.leq.shape[0]

    def __len__(self) -> int:
        return self.k

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.k, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset(k={self.k}, relations={self.relation_pairs()})"

    @cached_property
    def lt(self) -> np.ndarray:
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        lt.flags.writeable = False
        return lt

    @cached_property
    def covers(self) -> np.ndarray:
        """Transitive reduction of the strict order"""
        lt = self.lt
        out = lt & ~np.matmul(lt, lt)
        out.flags.writeable = False
        return out

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j] or self.leq[j, i])

    def upper_covers(self, i: int) -> List[int]:
        return np.flatnonzero(self.covers[i, :]).tolist()

    def lower_covers(self, j: int) -> List[int]:
        return np.flatnonzero(self.covers[:, j]).tolist()

    def strictly_above(self, i: int) -> List[int]:
        return np.flatnonzero(self.lt[i, :]).tolist()

    def relation_pairs(self) -> List[Tuple[int, int]]:
        """All strict pairs i < j in index order"""
        return [(int(i), int(j)) for i, j in np.argwhere(self.lt)]

    def cover_pairs(self) -> List[Tuple[int, int]]:
        return [(int(i), int(j)) for i, j in np.argwhere(self.covers)]

    def subposet(self, elements: Sequence[int]) -> "Poset":
        idx = np.asarray(list(elements), dtype=int)
        return Poset(self.leq[np.ix_(idx, idx)], validate=False)

    def linear_extension(self) -> List[int]:
        """Elements sorted by the number of elements below them, then index"""
        below = self.leq.sum(axis=0)
        return sorted(range(self.k), key=lambda i: (int(below[i]), i))

    def to_dict(self) -> Dict[str, object]:
        return {"k": self.k, "relations": [list(p) for p in self.relation_pairs()]}


@dataclass(frozen=True)
class MonotoneMap:
    """Order-preserving map source -> target given by its value table"""
    source: Poset
    target: Poset
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.source.k:
            raise PosetError(f"map has {len(values)} values for {self.source.k} elements")
        if values and not all(0 <= v < self.target.k for v in values):
            raise PosetError("map values out of range")
        if values:
            v = np.asarray(values, dtype=int)
            image = self.target.leq[np.ix_(v, v)]
            bad = self.source.leq & ~image
            if bad.any():
                i, j = np.argwhere(bad)[0]
                raise PosetError(f"map is not monotone: {i} <= {j} but f({i}) !<= f({j})")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def fixed_points(self) -> List[int]:
        return [x for x, v in enumerate(self.values) if x == v]

    def is_bijective(self) -> bool:
        return sorted(self.values) == list(range(self.target.k))

    def compose(self, inner: "MonotoneMap") -> "MonotoneMap":
        """self after inner"""
        return MonotoneMap(inner.source, self.target, tuple(self.values[v] for v in inner.values))

    def pointwise_le(self, other: "MonotoneMap") -> bool:
        return all(self.target.le(a, b) for a, b in zip(self.values, other.values))


class IrreducibleKind(str, Enum):
    UPPER = "unique-upper-cover"
    LOWER = "unique-lower-cover"


class Irreducible(NamedTuple):
    element: int
    kind: IrreducibleKind
    witness: int


def irreducible_elements(p: Poset) -> List[Irreducible]:
    """Elements with exactly one upper cover or exactly one lower cover.

    An element irreducible on both sides is listed once, by its upper cover.
    """
    found = []
    up_counts = p.covers.sum(axis=1)
    down_counts = p.covers.sum(axis=0)
    for x in range(p.k):
        if up_counts[x] == 1:
            found.append(Irreducible(x, IrreducibleKind.UPPER, p.upper_covers(x)[0]))
        elif down_counts[x] == 1:
            found.append(Irreducible(x, IrreducibleKind.LOWER, p.lower_covers(x)[0]))
    return found


def connected_components(p: Poset) -> List[List[int]]:
    """Components of the comparability graph, ordered by smallest element"""
    g = nx.Graph()
    g.add_nodes_from(range(p.k))
    g.add_edges_from(p.cover_pairs())
    return sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])


def monotone_self_maps(p: Poset) -> Iterator[Tuple[int, ...]]:
    """
    Every monotone map p -> p. Elements are assigned along a linear
    extension, so only lower neighbours constrain each choice.
    """
    order = p.linear_extension()
    below = [np.flatnonzero(p.lt[:, x]).tolist() for x in range(p.k)]
    values: List[Optional[int]] = [None] * p.k

    def extend(depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == p.k:
            yield tuple(values)
            return
        x = order[depth]
        lower = [values[z] for z in below[x]]
        if lower:
            allowed = np.all(p.leq[lower, :], axis=0)
        else:
            allowed = np.ones(p.k, dtype=bool)
        for y in np.flatnonzero(allowed).tolist():
            values[x] = y
            yield from extend(depth + 1)
        values[x] = None

    yield from extend(0)


def is_order_automorphism(p: Poset, values: Sequence[int]) -> bool:
    v = np.asarray(values, dtype=int)
    if len(set(values)) != p.k:
        return False
    return bool(np.array_equal(p.leq, p.leq[np.ix_(v, v)]))


@dataclass(frozen=True)
class RamifiedCertificate:
    ramified: bool
    lemma2_agreement: bool
    self_map_count: int
    automorphism_count: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "ramified": self.ramified,
            "automorphisms_alone_agreement": self.lemma2_agreement,
            "self_map_count": self.self_map_count,
            "automorphism_count": self.automorphism_count,
        }


def is_ramified_certified(p: Poset, max_size: Optional[int] = None) -> RamifiedCertificate:
    """
    Ramified-ness from covers, cross-checked against monotone self-maps:
    a poset is ramified iff no monotone self-map other than an automorphism
    itself is comparable to an automorphism.
    """
    max_size = max_size or Config.POSET_CONFIG["max_ramified_certificate_size"]
    if p.k > max_size:
        raise GuardExceeded("poset size", max_size,
                            f"self-map enumeration limited to {max_size} elements, got {p.k}")

    ramified = not irreducible_elements(p)
    if p.k == 0:
        return RamifiedCertificate(ramified, True, 1, 1)
    maps = np.array(list(monotone_self_maps(p)), dtype=int).reshape(-1, p.k)
    automorphisms = [row for row in maps if is_order_automorphism(p, row)]
    all_alone = True
    for a in automorphisms:
        below = np.all(p.leq[maps, a[None, :]], axis=1)
        above = np.all(p.leq[a[None, :], maps], axis=1)
        if int(np.count_nonzero(below | above)) > 1:
            all_alone = False
            break
    logger.debug(f"{len(maps)} self-maps, {len(automorphisms)} automorphisms, ramified={ramified}")
    return RamifiedCertificate(
        ramified=ramified,
        lemma2_agreement=(ramified == all_alone),
        self_map_count=len(maps),
        automorphism_count=len(automorphisms),
    )


def random_poset(k: int, edge_probability: float, rng: np.random.Generator) -> Poset:
    """Random DAG on the index order, transitively closed"""
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < edge_probability]
    return Poset.from_relations(k, pairs)

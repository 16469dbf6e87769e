"""
Dismantling finite posets by irreducible elements
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from .poset import Irreducible, IrreducibleKind, MonotoneMap, Poset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DismantleTrace:
    """
    removed: (element, kind, witness cover) in removal order, original indices
    residual: ramified subposet on the surviving elements
    index_map: original index of each residual element
    """
    source: Poset
    removed: Tuple[Irreducible, ...]
    residual: Poset
    index_map: Tuple[int, ...]

    @property
    def is_point(self) -> bool:
        return self.residual.k == 1

    def to_dict(self) -> Dict[str, object]:
        return {
            "removed": [
                {"element": r.element, "kind": r.kind.value, "witness": r.witness}
                for r in self.removed
            ],
            "residual_size": self.residual.k,
            "index_map": list(self.index_map),
        }


def dismantle(p: Poset, check_steps: bool = False) -> DismantleTrace:
    """
    Remove the smallest-index irreducible element until none is left.
    A one-element residual certifies that p is contractible.

    Covers and cover counts are updated in place on removal: the lower
    covers of the removed element gain its upper covers as covers unless
    another surviving element lies between them.

    check_steps re-validates each removal against the current subposet.
    """
    lt = np.array(p.lt)
    covers = np.array(p.covers)
    up = covers.sum(axis=1)
    down = covers.sum(axis=0)
    alive = np.ones(p.k, dtype=bool)
    removed: List[Irreducible] = []
    while True:
        candidates = np.flatnonzero(alive & ((up == 1) | (down == 1)))
        if candidates.size == 0:
            break
        x = int(candidates[0])
        if up[x] == 1:
            step = Irreducible(x, IrreducibleKind.UPPER, int(np.flatnonzero(covers[x])[0]))
        else:
            step = Irreducible(x, IrreducibleKind.LOWER, int(np.flatnonzero(covers[:, x])[0]))
        if check_steps:
            _check_step(p, alive, step)
        logger.debug(f"dismantle: remove {step.element} ({step.kind.value} {step.witness})")
        removed.append(step)

        lows, highs = np.flatnonzero(covers[:, x]), np.flatnonzero(covers[x])
        covers[lows, x] = False
        covers[x, highs] = False
        up[lows] -= 1
        down[highs] -= 1
        alive[x] = False
        lt[x, :] = False
        lt[:, x] = False
        for a in lows:
            for b in highs:
                if not (lt[a] & lt[:, b]).any():
                    covers[a, b] = True
                    up[a] += 1
                    down[b] += 1

    survivors = np.flatnonzero(alive).tolist()
    return DismantleTrace(
        source=p,
        removed=tuple(removed),
        residual=p.subposet(survivors),
        index_map=tuple(survivors),
    )


def _check_step(p: Poset, alive: np.ndarray, step: Irreducible):
    survivors = np.flatnonzero(alive).tolist()
    current = p.subposet(survivors)
    local = survivors.index(step.element)
    if step.kind is IrreducibleKind.UPPER:
        got = current.upper_covers(local)
    else:
        got = current.lower_covers(local)
    assert [survivors[i] for i in got] == [step.witness], f"stale covers at {step.element}"


def retraction(trace: DismantleTrace) -> MonotoneMap:
    """
    Monotone retraction of the source onto the residual: each removed
    element goes to its witness cover, chased until a surviving element.
    """
    position = {original: i for i, original in enumerate(trace.index_map)}
    target: Dict[int, int] = dict(position)
    for step in reversed(trace.removed):
        target[step.element] = target[step.witness]
    values = tuple(target[x] for x in range(trace.source.k))
    return MonotoneMap(trace.source, trace.residual, values)

"""
Lefschetz numbers of simplicial self-maps by the Hopf trace formula
"""
import logging
from typing import List, Sequence

from utils.errors import NotSimplicialError

from .complex import Face, SimplicialComplex

logger = logging.getLogger(__name__)


def _permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..m-1, by cycle decomposition"""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def validate_simplicial(c: SimplicialComplex, f: Sequence[int]) -> None:
    """Raise NotSimplicialError for the first face whose image is not a face"""
    if len(f) != c.vertex_count:
        raise ValueError(f"vertex map has {len(f)} values for {c.vertex_count} vertices")
    for layer in c.faces:
        for face in layer:
            image = tuple(sorted({f[v] for v in face}))
            if not c.is_face(image):
                raise NotSimplicialError(face, image)


def chain_traces(c: SimplicialComplex, f: Sequence[int]) -> List[int]:
    """
    Trace of f on C_d for each d: faces mapped onto themselves count with
    the sign of the induced vertex permutation; collapsed faces count 0.
    """
    traces = []
    for layer in c.faces:
        trace = 0
        for face in layer:
            image: Face = tuple(f[v] for v in face)
            if tuple(sorted(image)) != face:
                continue
            position = {v: i for i, v in enumerate(face)}
            trace += _permutation_sign([position[w] for w in image])
        traces.append(trace)
    return traces


def lefschetz_number(c: SimplicialComplex, f: Sequence[int], validate: bool = True) -> int:
    """L(f) = sum over d of (-1)^d tr(f on C_d)"""
    if validate:
        validate_simplicial(c, f)
    value = sum((-1) ** d * t for d, t in enumerate(chain_traces(c, f)))
    logger.debug(f"Lefschetz number on {c}: {value}")
    return value

"""
Integral simplicial homology through boundary matrices and Smith normal form
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from utils.errors import ChainComplexError

from .complex import SimplicialComplex
from .snf import IntMatrix, SmithForm, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti plus the cyclic torsion summands Z/t"""
    dimension: int
    betti: int
    torsion: Tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self) -> Dict[str, object]:
        return {"dimension": self.dimension, "betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z^{self.betti}"] if self.betti else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def boundary_matrix(c: SimplicialComplex, d: int) -> IntMatrix:
    """
    d-th boundary C_d -> C_{d-1}: rows are (d-1)-faces, columns d-faces;
    the i-th vertex of an ascending face is dropped with sign (-1)^i.
    """
    columns = c.dimension_faces(d)
    if d <= 0:
        return IntMatrix.zeros(0, len(columns))
    rows = c.dimension_faces(d - 1)
    row_index = c.face_index[d - 1]
    entries: Dict[int, Dict[int, int]] = {}
    for j, face in enumerate(columns):
        for i in range(len(face)):
            r = row_index[face[:i] + face[i + 1:]]
            entries.setdefault(r, {})[j] = -1 if i % 2 else 1
    return IntMatrix(len(rows), len(columns), entries)


def check_chain_complex(c: SimplicialComplex) -> None:
    """Raise ChainComplexError unless every composite of boundaries vanishes"""
    for d in range(1, c.max_dim):
        product = boundary_matrix(c, d).matmul(boundary_matrix(c, d + 1))
        if not product.is_zero():
            raise ChainComplexError(f"boundary composite in dimension {d + 1} is nonzero")


def homology(c: SimplicialComplex, up_to: Optional[int] = None) -> List[HomologyGroup]:
    """
    Unreduced H_0..H_up_to. betti_d = faces_d - rank del_d - rank del_{d+1};
    torsion_d = invariant factors > 1 of del_{d+1}.
    """
    up_to = c.max_dim if up_to is None else up_to
    if up_to > c.max_dim:
        raise ValueError(f"homology up to dimension {up_to} requested on a {c.max_dim}-dimensional complex")
    check_chain_complex(c)
    forms: Dict[int, SmithForm] = {}

    def form(d: int) -> SmithForm:
        if d not in forms:
            forms[d] = smith_normal_form(boundary_matrix(c, d))
        return forms[d]

    groups = []
    for d in range(up_to + 1):
        faces = len(c.dimension_faces(d))
        betti = faces - form(d).rank - form(d + 1).rank
        groups.append(HomologyGroup(d, betti, form(d + 1).torsion))
    logger.debug(f"homology of {c}: {[str(g) for g in groups]}")
    return groups


def betti_numbers(groups: Sequence[HomologyGroup]) -> List[int]:
    return [g.betti for g in groups]


def reduced_betti(groups: Sequence[HomologyGroup]) -> List[int]:
    """Betti numbers of reduced homology: b_0 drops by one on a nonempty complex"""
    out = betti_numbers(groups)
    if out and out[0] > 0:
        out[0] -= 1
    return out


def is_point_profile(groups: Sequence[HomologyGroup]) -> bool:
    """b_0 = 1, every higher group trivial, no torsion anywhere"""
    if not groups or groups[0].betti != 1 or groups[0].torsion:
        return False
    return all(g.is_trivial() for g in groups[1:])

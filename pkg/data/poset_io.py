"""Poset text format: first line k, then "i < j" lines; closure applied on load"""
import logging
import re

from posets.poset import Poset, PosetError
from utils.errors import PosetParseError

logger = logging.getLogger(__name__)

_RELATION = re.compile(r"^\s*(\d+)\s*<\s*(\d+)\s*$", re.ASCII)


def parse_poset(text: str) -> Poset:
    k = None
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if k is None:
            if not (line.isascii() and line.isdigit()):
                raise PosetParseError(f"first line must be the element count, got {line!r}", line_no)
            k = int(line)
            continue
        match = _RELATION.match(line)
        if not match:
            raise PosetParseError(f"expected 'i < j', got {line!r}", line_no)
        i, j = int(match.group(1)), int(match.group(2))
        if i >= k or j >= k:
            raise PosetParseError(f"element {max(i, j)} out of range for k={k}", line_no)
        pairs.append((i, j))
    if k is None:
        raise PosetParseError("empty poset file")
    try:
        return Poset.from_relations(k, pairs)
    except PosetError as e:
        raise PosetParseError(str(e)) from e


def serialize_poset(p: Poset) -> str:
    """Cover relations only; parse_poset restores the closure"""
    lines = [str(p.k)] + [f"{i} < {j}" for i, j in p.cover_pairs()]
    return "\n".join(lines) + "\n"


def load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    logger.info(f"Loaded poset file {path}")
    return parse_poset(text)

"""Exception hierarchy"""
from typing import Any, Optional, Sequence


class HomtopError(Exception):
    """Base class for all library errors"""


class InputError(HomtopError, ValueError):
    """Malformed input text; carries the line and byte position when known"""

    def __init__(self, message: str, line: Optional[int] = None, position: Optional[int] = None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"byte {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class GraphParseError(InputError):
    pass


class PosetParseError(InputError):
    pass


class IdentityParseError(InputError):
    pass


class BudgetExceeded(HomtopError):
    """A work budget (elements, faces, nodes, time) ran out"""

    def __init__(self, budget: str, limit: Any, message: Optional[str] = None):
        self.budget = budget
        self.limit = limit
        super().__init__(message or f"{budget} budget of {limit} exceeded")


class GuardExceeded(BudgetExceeded):
    """Input larger than a configured size guard"""


class NotAPolymorphismError(HomtopError, ValueError):
    """Operation table that does not preserve edges"""

    def __init__(self, source_pair: Sequence[Sequence[int]], image_pair: Sequence[int]):
        self.source_pair = tuple(tuple(t) for t in source_pair)
        self.image_pair = tuple(image_pair)
        super().__init__(
            f"edge not preserved: tuples {self.source_pair[0]} ~ {self.source_pair[1]} "
            f"map to non-adjacent {self.image_pair}"
        )


class NotSimplicialError(HomtopError, ValueError):
    """Vertex map sending a face outside the complex"""

    def __init__(self, face: Sequence[int], image: Sequence[int]):
        self.face = tuple(face)
        self.image = tuple(image)
        super().__init__(f"face {self.face} maps to non-face {self.image}")


class ChainComplexError(HomtopError):
    """Boundary composition that is not zero"""

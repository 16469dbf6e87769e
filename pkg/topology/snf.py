"""
Exact integer matrices and Smith normal form
"""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Set, Tuple

logger = logging.getLogger(__name__)

Row = Dict[int, int]


class IntMatrix:
    """
    Sparse integer matrix stored as a dict of nonzero rows. Entries are
    Python ints, so arithmetic never overflows.
    """

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[int, Row]] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"invalid shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        self.entries: Dict[int, Row] = {}
        for r, row in (entries or {}).items():
            if not 0 <= r < rows:
                raise ValueError(f"row {r} out of range")
            clean = {}
            for c, v in row.items():
                if not 0 <= c < cols:
                    raise ValueError(f"column {c} out of range")
                if v:
                    clean[int(c)] = int(v)
            if clean:
                self.entries[int(r)] = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {r: {c: int(v) for c, v in enumerate(row) if v} for r, row in enumerate(data)}
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.entries.values())

    def get(self, r: int, c: int) -> int:
        return self.entries.get(r, {}).get(c, 0)

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self) -> List[List[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, row in self.entries.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out: Dict[int, Row] = {}
        for r, row in self.entries.items():
            acc: Row = {}
            for k, a in row.items():
                for c, b in other.entries.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r, r = rank"""
    factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)


class _Reducer:
    """Row/column elimination on a mutable copy with a column -> rows index"""

    def __init__(self, m: IntMatrix):
        self.rows: Dict[int, Row] = {r: dict(row) for r, row in m.entries.items()}
        self.col_rows: Dict[int, Set[int]] = {}
        for r, row in self.rows.items():
            for c in row:
                self.col_rows.setdefault(c, set()).add(r)

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]"""
        row = self.rows[target]
        for c, v in self.rows[source].items():
            value = row.get(c, 0) + factor * v
            if value:
                row[c] = value
                self.col_rows.setdefault(c, set()).add(target)
            elif c in row:
                del row[c]
                self.col_rows[c].discard(target)

    def set_entry(self, r: int, c: int, value: int):
        row = self.rows[r]
        if value:
            row[c] = value
            self.col_rows.setdefault(c, set()).add(r)
        else:
            row.pop(c, None)
            self.col_rows[c].discard(r)

    def drop_row(self, r: int):
        for c in self.rows.pop(r):
            self.col_rows[c].discard(r)

    def clear_column(self, c: int) -> int:
        """Row operations until column c has one entry; returns its row"""
        while True:
            members = self.col_rows[c]
            pivot = min(members, key=lambda r: (abs(self.rows[r][c]), len(self.rows[r]), r))
            if len(members) == 1:
                return pivot
            p = self.rows[pivot][c]
            for r in sorted(members - {pivot}):
                self.add_row(r, pivot, -(self.rows[r][c] // p))

    def eliminate(self, c: int) -> int:
        """Reduce until some row holds a single entry; remove it and return |d|"""
        while True:
            p_row = self.clear_column(c)
            d = self.rows[p_row][c]
            # column c has only p_row, so column operations touch only that row
            for k in [k for k in self.rows[p_row] if k != c]:
                self.set_entry(p_row, k, self.rows[p_row][k] % d)
            rest = [(abs(v), k) for k, v in self.rows[p_row].items() if k != c]
            if not rest:
                self.drop_row(p_row)
                return abs(d)
            # a remainder smaller than d becomes the next pivot
            c = min(rest)[1]


def _divisibility_chain(diagonal: List[int]) -> Tuple[int, ...]:
    """Turn a diagonal into invariant factors by gcd/lcm exchanges"""
    ones = [d for d in diagonal if d == 1]
    rest = sorted(d for d in diagonal if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return tuple(ones + sorted(rest))


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """
    Invariant factors of m. Pivots are the smallest nonzero entry of the
    current column, ties broken by row sparsity then index.
    """
    reducer = _Reducer(m)
    diagonal: List[int] = []
    for c in range(m.cols):
        while reducer.col_rows.get(c):
            diagonal.append(reducer.eliminate(c))
    factors = _divisibility_chain(diagonal)
    logger.debug(f"SNF of {m}: rank {len(factors)}, torsion {[d for d in factors if d > 1]}")
    return SmithForm(factors)

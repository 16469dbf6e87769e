"""Data models for corpus processing"""
from dataclasses import dataclass
from typing import Optional

from graphs.graph import Graph


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus graph, or the reason it could not be read"""
    graph_id: str
    source: str
    graph: Optional[Graph] = None
    error: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.graph is None

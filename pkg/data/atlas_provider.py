"""Corpus provider over the networkx atlas of all graphs up to 7 vertices"""
import logging
from typing import Iterator

import networkx as nx

from graphs.graph import Graph

from .models import CorpusEntry

logger = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


class AtlasProvider:
    """Atlas graphs with 1..max_vertices vertices, in atlas order"""

    def __init__(self, max_vertices: int = 5, connected_only: bool = False):
        if not 1 <= max_vertices <= ATLAS_MAX_VERTICES:
            raise ValueError(f"atlas covers 1..{ATLAS_MAX_VERTICES} vertices, got {max_vertices}")
        self.max_vertices = max_vertices
        self.connected_only = connected_only

    def is_available(self) -> bool:
        return True

    def describe(self) -> str:
        kind = "connected graphs" if self.connected_only else "graphs"
        return f"atlas {kind} with at most {self.max_vertices} vertices"

    def iter_entries(self) -> Iterator[CorpusEntry]:
        count = 0
        for index, g in enumerate(nx.graph_atlas_g()):
            n = g.number_of_nodes()
            if n == 0:
                continue
            if n > self.max_vertices:
                break
            if self.connected_only and not nx.is_connected(g):
                continue
            graph_id = f"atlas:{index}"
            count += 1
            yield CorpusEntry(graph_id, "atlas", graph=Graph.from_networkx(g, graph_id))
        logger.info(f"Atlas provider yielded {count} graphs")

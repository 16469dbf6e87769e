"""Corpus provider reading graph6 files (one graph per line) or edge-list files (one graph per file)"""
import logging
import os
from typing import Iterator, List, Sequence

from utils.errors import InputError

from .graph_io import EDGE_LIST, GRAPH6, parse_edge_list, parse_graph6_line
from .models import CorpusEntry

logger = logging.getLogger(__name__)


class FileCorpusProvider:
    """Graphs from files; unreadable entries come back as skipped entries"""

    def __init__(self, paths: Sequence[str], fmt: str = EDGE_LIST):
        if fmt not in (EDGE_LIST, GRAPH6):
            raise ValueError(f"unknown corpus format {fmt!r}")
        self.paths: List[str] = list(paths)
        self.fmt = fmt

    def is_available(self) -> bool:
        return any(os.path.isfile(p) for p in self.paths)

    def describe(self) -> str:
        return f"{len(self.paths)} {self.fmt} file(s)"

    def iter_entries(self) -> Iterator[CorpusEntry]:
        for path in self.paths:
            try:
                with open(path, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except (OSError, UnicodeDecodeError) as e:
                logger.warning(f"Skipping unreadable corpus file {path}: {e}")
                yield CorpusEntry(path, path, error=f"unreadable: {e}")
                continue

            if self.fmt == EDGE_LIST:
                yield self._entry(path, path, lambda: parse_edge_list(text, name=path))
                continue

            for line_no, line in enumerate(text.splitlines(), start=1):
                if not line.strip():
                    continue
                graph_id = f"{path}:{line_no}"
                yield self._entry(graph_id, path,
                                  lambda: parse_graph6_line(line, line_no, name=graph_id))

    @staticmethod
    def _entry(graph_id: str, source: str, parse) -> CorpusEntry:
        try:
            return CorpusEntry(graph_id, source, graph=parse())
        except InputError as e:
            logger.warning(f"Skipping malformed corpus entry {graph_id}: {e}")
            return CorpusEntry(graph_id, source, error=str(e))

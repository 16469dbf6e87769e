"""Corpus providers and provider factory"""
import logging
from typing import Iterator, Optional, Protocol, Sequence

from config.settings import Config

from .atlas_provider import AtlasProvider
from .file_provider import FileCorpusProvider
from .models import CorpusEntry

logger = logging.getLogger(__name__)


class CorpusProvider(Protocol):
    """Corpus provider interface"""

    def iter_entries(self) -> Iterator[CorpusEntry]:
        ...

    def describe(self) -> str:
        ...

    def is_available(self) -> bool:
        ...


class CorpusProviderFactory:
    """Factory for creating the appropriate corpus provider"""

    @staticmethod
    def create_provider(paths: Sequence[str] = (), fmt: Optional[str] = None,
                        atlas_max_vertices: Optional[int] = None,
                        connected_only: bool = False) -> CorpusProvider:
        """Files when paths are given, the graph atlas otherwise"""
        fmt = fmt or Config.GRAPH_CONFIG["default_format"]
        if paths:
            provider = FileCorpusProvider(paths, fmt)
            if provider.is_available():
                logger.info(f"Using corpus files: {provider.describe()}")
                return provider
            logger.warning(f"No readable corpus files among {list(paths)}; nothing to process")
            return provider

        max_vertices = atlas_max_vertices or Config.RUN_CONFIG["atlas_max_vertices"]
        logger.info(f"Using graph atlas up to {max_vertices} vertices")
        return AtlasProvider(max_vertices, connected_only)

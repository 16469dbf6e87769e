"""Tests for corpus providers"""
import pytest

from data.atlas_provider import AtlasProvider
from data.connector import CorpusProviderFactory
from data.file_provider import FileCorpusProvider


def test_atlas_provider_basic():
    """Atlas up to 3 vertices: 1 + 2 + 4 graphs, the empty graph left out"""
    provider = AtlasProvider(3)

    assert provider.is_available() == True
    entries = list(provider.iter_entries())
    assert len(entries) == 7
    assert entries[0].graph_id == "atlas:1"
    assert all(e.source == "atlas" and not e.skipped for e in entries)
    assert [e.graph.n for e in entries] == [1, 2, 2, 3, 3, 3, 3]


def test_atlas_connected_only():
    entries = list(AtlasProvider(3, connected_only=True).iter_entries())
    assert [e.graph.n for e in entries] == [1, 2, 3, 3]
    assert all(e.graph.is_connected() for e in entries)


def test_atlas_range():
    with pytest.raises(ValueError):
        AtlasProvider(0)
    with pytest.raises(ValueError):
        AtlasProvider(8)


def test_graph6_file_skips_malformed_lines(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("Bw\n\nC~\nB\x7f\nA_\n")

    entries = list(FileCorpusProvider([str(path)], "graph6").iter_entries())

    assert [e.graph_id for e in entries] == [f"{path}:1", f"{path}:3", f"{path}:4", f"{path}:5"]
    assert entries[0].graph.edges == frozenset({(0, 1), (0, 2), (1, 2)})
    assert entries[1].graph.n == 4
    assert entries[2].skipped and entries[2].error
    assert entries[3].graph.edges == frozenset({(0, 1)})


def test_edge_list_files(tmp_path):
    good = tmp_path / "k2.txt"
    good.write_text("0 1\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("0 x\n")

    entries = list(FileCorpusProvider([str(good), str(bad), str(tmp_path / "missing.txt")]).iter_entries())

    assert entries[0].graph.n == 2
    assert entries[1].skipped
    assert entries[2].error.startswith("unreadable")


def test_file_provider_rejects_unknown_format():
    with pytest.raises(ValueError):
        FileCorpusProvider(["x"], "dimacs")


def test_factory(tmp_path):
    """Files when paths are given, the atlas otherwise"""
    path = tmp_path / "k2.txt"
    path.write_text("0 1\n")

    assert isinstance(CorpusProviderFactory.create_provider([str(path)]), FileCorpusProvider)
    atlas = CorpusProviderFactory.create_provider(atlas_max_vertices=2, connected_only=True)
    assert isinstance(atlas, AtlasProvider)
    assert atlas.max_vertices == 2
    assert atlas.connected_only

    missing = CorpusProviderFactory.create_provider([str(tmp_path / "none.g6")], "graph6")
    assert not missing.is_available()
    assert list(missing.iter_entries())[0].skipped

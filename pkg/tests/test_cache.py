import pytest

from cycliso.cache import (
    SCHEMA_VERSION,
    default_cache_dir,
    element_cache_path,
    load_or_build,
    read_elements,
    write_elements,
)
from cycliso.monoid import build_by_restrictions


def test_write_read_round_trip(tmp_path):
    m = build_by_restrictions(3)
    path = tmp_path / "elems.jsonl"
    write_elements(path, m.elements)
    assert read_elements(path) == list(m.elements)


def test_load_or_build_hits_cache(tmp_path):
    fresh, from_cache = load_or_build(3, "restrictions", tmp_path)
    assert not from_cache
    again, from_cache = load_or_build(3, "restrictions", tmp_path)
    assert from_cache
    assert again.elements == fresh.elements == build_by_restrictions(3).elements


def test_cache_files_are_keyed_by_method_and_schema(tmp_path):
    load_or_build(3, "restrictions", tmp_path)
    load_or_build(3, "closure", tmp_path)
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == [
        f"elements_n3_closure_v{SCHEMA_VERSION}.jsonl",
        f"elements_n3_restrictions_v{SCHEMA_VERSION}.jsonl",
    ]


def test_cache_bytes_are_stable(tmp_path):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    m = build_by_restrictions(4)
    write_elements(a, m.elements)
    write_elements(b, m.elements)
    assert a.read_bytes() == b.read_bytes()


def test_unknown_method_rejected(tmp_path):
    with pytest.raises(ValueError):
        load_or_build(3, "magic", tmp_path)


def test_default_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("CYCLISO_CACHE_DIR", str(tmp_path / "cc"))
    assert default_cache_dir() == tmp_path / "cc"
    monkeypatch.delenv("CYCLISO_CACHE_DIR")
    assert default_cache_dir().name == "cycliso"


def test_cache_path_embeds_all_keys(tmp_path):
    p = element_cache_path(tmp_path, 5, "bruteforce")
    assert p.name == f"elements_n5_bruteforce_v{SCHEMA_VERSION}.jsonl"
    assert p.parent == tmp_path

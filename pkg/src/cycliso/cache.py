"""Disk cache for enumerated monoids, one JSON element per line.

Cache files are keyed by (n, build method, schema version) in the file
name, so a schema bump simply misses the old files.  The default
directory honours the CYCLISO_CACHE_DIR environment variable.
"""

import json
import os
from pathlib import Path

from .monoid import (
    FiniteMonoid,
    build_by_bruteforce,
    build_by_closure,
    build_by_restrictions,
    standard_generators,
)
from .partial_perm import PartialPerm

__all__ = [
    "SCHEMA_VERSION",
    "default_cache_dir",
    "element_cache_path",
    "write_elements",
    "read_elements",
    "load_or_build",
]

SCHEMA_VERSION = 1

BUILDERS = {
    "restrictions": build_by_restrictions,
    "closure": build_by_closure,
    "bruteforce": build_by_bruteforce,
}


def default_cache_dir():
    env = os.environ.get("CYCLISO_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cycliso"


def element_cache_path(cache_dir, n, method):
    return Path(cache_dir) / f"elements_n{n}_{method}_v{SCHEMA_VERSION}.jsonl"


def write_elements(path, elements):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for a in elements:
            fh.write(json.dumps(a.to_json(), separators=(",", ":")) + "\n")


def read_elements(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(PartialPerm.from_json(json.loads(line)))
    return out


def load_or_build(n, method, cache_dir=None):
    """Monoid for (n, method), via the cache when possible.

    Returns (monoid, from_cache).  A cache miss builds, then writes the
    canonical element list back for next time.
    """
    if method not in BUILDERS:
        raise ValueError(f"unknown build method {method!r}")
    if cache_dir is None:
        cache_dir = default_cache_dir()
    path = element_cache_path(cache_dir, n, method)
    if path.exists():
        elements = read_elements(path)
        return FiniteMonoid(n, elements, standard_generators(n)), True
    monoid = BUILDERS[method](n)
    write_elements(path, monoid.elements)
    return monoid, False

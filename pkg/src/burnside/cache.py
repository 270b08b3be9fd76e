"""On-disk cache of subgroup lattices and mark tables, keyed by multiplication table."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .groups import FiniteGroup, Subgroup, SubgroupClass
from .lattice import SubgroupLattice, build_lattice

SCHEMA_VERSION = 1
ENV_VAR = "BURNSIDE_CACHE_DIR"

log = logging.getLogger(__name__)


class CacheCorruption(Exception):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "burnside"


def table_check(G: FiniteGroup) -> str:
    """Second digest of the table, used to detect key collisions."""
    h = hashlib.blake2b(digest_size=16)
    for row in G.table:
        h.update(bytes(str(row), "ascii"))
    return h.hexdigest()


@dataclass
class CacheEntry:
    schema_version: int
    group_hash: str
    table_check: str
    lattice: dict
    marks: list[list[int]]
    tool_version: str

    @classmethod
    def from_lattice(cls, L: SubgroupLattice) -> "CacheEntry":
        G = L.group
        classes = []
        for c in L.classes:
            classes.append({
                "rep": list(c.representative.members),
                "rep_generators": list(c.representative.generators),
                "conjugates": [list(S.members) for S in c.conjugates],
                "normalizer": list(c.normalizer.members),
                "weyl": c.weyl_order,
            })
        return cls(SCHEMA_VERSION, G.digest, table_check(G), {"classes": classes},
                   L.marks.to_json(), __version__)

    def to_json(self) -> dict:
        return {"schema_version": self.schema_version, "group_hash": self.group_hash,
                "table_check": self.table_check, "tool_version": self.tool_version,
                "lattice": self.lattice, "marks": self.marks}

    def restore(self, G: FiniteGroup) -> SubgroupLattice:
        if self.group_hash != G.digest or self.table_check != table_check(G):
            raise CacheCorruption("cache entry does not match the multiplication table")
        classes = []
        for rec in self.lattice["classes"]:
            rep = Subgroup(G, rec["rep"], generators=rec["rep_generators"])
            conj = tuple(S if S.mask != rep.mask else rep
                         for S in (Subgroup(G, m) for m in rec["conjugates"]))
            classes.append(SubgroupClass(rep, conj, Subgroup(G, rec["normalizer"]), rec["weyl"]))
        L = SubgroupLattice(G, classes)
        L.set_marks(self.marks)
        return L


def load_lattice(G: FiniteGroup, cache_dir: Path | None, max_order: int | None = None) -> SubgroupLattice:
    """Lattice with marks, from the cache when possible; cache_dir None disables caching."""
    if cache_dir is None:
        L = build_lattice(G, max_order=max_order)
        L.marks
        return L
    path = Path(cache_dir) / f"{G.digest}.json"
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("schema_version") == SCHEMA_VERSION:
                entry = CacheEntry(data["schema_version"], data["group_hash"], data["table_check"],
                                   data["lattice"], data["marks"], data["tool_version"])
                return entry.restore(G)
        except (CacheCorruption, KeyError, ValueError, TypeError) as exc:
            log.warning("discarding cache entry %s: %s", path, exc)
    L = build_lattice(G, max_order=max_order)
    _write_atomic(path, CacheEntry.from_lattice(L).to_json())
    return L


def _write_atomic(path: Path, payload: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

"""Append-only JSON-lines cache of search results keyed by (ell, n, method)."""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .search import SearchRecord

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_PATH = "pathdeg-cache.jsonl"
ENV_VAR = "PATHDEG_CACHE"


@dataclass(frozen=True)
class CacheEntry:
    key: tuple[int, int, str]
    record: SearchRecord
    schema: int = SCHEMA_VERSION
    producer: str = __version__
    timestamp: float = 0.0

    def to_json(self) -> dict:
        ell, n, method = self.key
        return {
            "schema": self.schema,
            "producer": self.producer,
            "timestamp": self.timestamp,
            "key": {"ell": ell, "n": n, "method": method},
            "record": self.record.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> CacheEntry:
        k = d["key"]
        return cls(
            (int(k["ell"]), int(k["n"]), str(k["method"])),
            SearchRecord.from_json(d["record"]),
            int(d["schema"]),
            str(d["producer"]),
            float(d["timestamp"]),
        )


def resolve_path(flag: str | None) -> Path:
    return Path(flag or os.environ.get(ENV_VAR) or DEFAULT_PATH)


class ResultCache:
    """Entries are served only on an exact key and schema-version match."""

    def __init__(self, path: Path | str | None):
        self.path = Path(path) if path is not None else None
        self.entries: dict[tuple[int, int, str], CacheEntry] = {}
        self.writable = self.path is not None
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    entry = CacheEntry.from_json(json.loads(line))
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                    continue
                if entry.schema != SCHEMA_VERSION:
                    continue
                self.entries[entry.key] = entry

    def get(self, ell: int, n: int, method: str) -> SearchRecord | None:
        entry = self.entries.get((ell, n, method))
        return entry.record if entry else None

    def put(self, record: SearchRecord) -> CacheEntry:
        entry = CacheEntry(record.key(), record, timestamp=time.time())
        self.entries[entry.key] = entry
        if self.writable:
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")
            except OSError as exc:
                log.warning("cache %s not writable (%s); keeping results in memory", self.path, exc)
                self.writable = False
        return entry


def cache_roundtrip(entry: CacheEntry, path: Path | str) -> CacheEntry:
    """Append ``entry`` to ``path`` and read it back."""
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")
    return ResultCache(path).entries[entry.key]

"""Persistent memoization of computed HOMFLY polynomials.

One JSON file per entry under a content-addressed layout.  Writes go through
a temp file plus atomic rename, so the store is safe against concurrent
writers and process kills; readers never see partial files.  A bump of
ENGINE_VERSION invalidates every existing entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence, Tuple

from . import ENGINE_VERSION
from .errors import CorruptStore, StoreUnwritable
from .laurent import LaurentPoly

CACHE_ENV_VAR = "PRETZELHOMFLY_CACHE_DIR"


def cache_key(params: Sequence[int], r: int,
              version: str = ENGINE_VERSION) -> tuple:
    """Canonical cache key.  Genus-2 parameter triples are sorted (the knot is
    permutation invariant there); higher genus keeps the raw order."""
    params = tuple(int(p) for p in params)
    if len(params) == 3:
        params = tuple(sorted(params))
    return (params, int(r), version)


@dataclass
class CacheEntry:
    key: tuple
    poly: LaurentPoly
    timestamp: float
    duration: float


class HomflyCache:
    """File-backed polynomial store keyed by canonical knot spec."""

    def __init__(self, directory: os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: tuple) -> Path:
        blob = json.dumps([list(key[0]), key[1], key[2]])
        digest = hashlib.sha256(blob.encode()).hexdigest()
        return self.directory / digest[:2] / f"{digest}.json"

    def get(self, key: tuple) -> Optional[CacheEntry]:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CorruptStore(f"unreadable cache entry {path}: {exc}") from exc
        if obj.get("version") != key[2]:
            return None
        body = json.dumps(obj["poly"], sort_keys=True)
        digest = hashlib.sha256(body.encode()).hexdigest()
        if obj.get("checksum") != digest:
            raise CorruptStore(f"checksum mismatch in {path}")
        return CacheEntry(key=key,
                          poly=LaurentPoly.from_json(obj["poly"]),
                          timestamp=obj.get("timestamp", 0.0),
                          duration=obj.get("duration", 0.0))

    def put(self, key: tuple, poly: LaurentPoly, duration: float = 0.0):
        path = self._path(key)
        body = poly.to_json()
        obj = {
            "key": {"params": list(key[0]), "r": key[1]},
            "version": key[2],
            "poly": body,
            "checksum": hashlib.sha256(
                json.dumps(body, sort_keys=True).encode()).hexdigest(),
            "timestamp": time.time(),
            "duration": duration,
        }
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(obj, fh)
            os.replace(tmp, path)
        except OSError as exc:
            raise StoreUnwritable(f"cannot write cache entry {path}: {exc}") from exc

    def entries(self) -> Iterator[dict]:
        for path in sorted(self.directory.glob("*/*.json")):
            try:
                with open(path, encoding="utf-8") as fh:
                    obj = json.load(fh)
            except (OSError, json.JSONDecodeError):
                continue
            yield {"file": str(path), "key": obj.get("key"),
                   "version": obj.get("version"),
                   "timestamp": obj.get("timestamp")}

    def clear(self) -> int:
        n = 0
        for path in self.directory.glob("*/*.json"):
            path.unlink()
            n += 1
        return n


def resolve_cache_dir(flag_value: Optional[str]) -> Optional[Path]:
    """CLI flag wins, then the environment variable, else no persistent cache."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None

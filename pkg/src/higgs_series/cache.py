"""On-disk cache of computed H series.

Entries are JSON files named by the SHA-256 of their key (pipeline, g, R,
engine version).  Every file starts with a header naming the format and the
key it holds, so a renamed or truncated file is detected and ignored.
Writes go through a temporary file and an atomic rename.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from . import ENGINE_VERSION
from .plethystic import TSeries

log = logging.getLogger(__name__)

FORMAT = "higgs-series-cache"
FORMAT_VERSION = 1
ENV_VAR = "HIGGS_CACHE_DIR"


@dataclass(frozen=True)
class CacheKey:
    pipeline: str
    g: int
    R: int
    engine_version: str = ENGINE_VERSION

    def digest(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "higgs-series"


def resolve_cache_dir(flag: str | None) -> Path:
    """HIGGS_CACHE_DIR wins over the flag, which wins over the default."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(flag) if flag else default_cache_dir()


class SeriesCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)

    def path(self, key: CacheKey) -> Path:
        return self.root / f"{key.digest()}.json"

    def get(self, key: CacheKey) -> TSeries | None:
        p = self.path(key)
        if not p.exists():
            return None
        try:
            data = json.loads(p.read_text())
            if data.get("format") != FORMAT or data.get("format_version") != FORMAT_VERSION:
                raise ValueError("unknown header")
            if data.get("key") != asdict(key):
                raise ValueError("key mismatch")
            return TSeries.from_json(data["series"])
        except Exception as exc:  # any unreadable entry is a miss
            log.warning("ignoring corrupt cache entry %s: %s", p, exc)
            return None

    def put(self, key: CacheKey, series: TSeries) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        payload = {
            "format": FORMAT,
            "format_version": FORMAT_VERSION,
            "key": asdict(key),
            "series": series.to_json(),
        }
        p = self.path(key)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return p


def cache_get(cache: SeriesCache, key: CacheKey) -> TSeries | None:
    return cache.get(key)


def cache_put(cache: SeriesCache, key: CacheKey, series: TSeries) -> Path:
    return cache.put(key, series)

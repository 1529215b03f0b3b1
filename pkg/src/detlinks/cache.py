"""Persistent JSON cache of polar profiles.

Values are stored as decimal strings: profiles outgrow 64-bit integers well
within the parameter ranges users ask for, and a text format keeps the file
portable and diffable.  A version mismatch or any schema violation makes the
whole file be ignored (with a warning); cached digits are only ever
re-checked against a fresh computation when a verify pass asks for it.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .polar import PolarProfile

CACHE_VERSION = 1
CACHE_ENV = "DETLINKS_CACHE"
CACHE_FILENAME = "polar_profiles.json"


def cache_dir() -> Path:
    """Cache directory: $DETLINKS_CACHE, else the platform cache dir."""
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "detlinks"


def cache_path() -> Path:
    return cache_dir() / CACHE_FILENAME


@dataclass
class CacheFile:
    """In-memory image of the cache: entries keyed by "m,n,r"."""

    version: int = CACHE_VERSION
    entries: dict = field(default_factory=dict)  # key -> PolarProfile

    @staticmethod
    def key(m: int, n: int, r: int) -> str:
        return f"{m},{n},{r}"

    def get(self, m: int, n: int, r: int) -> PolarProfile | None:
        return self.entries.get(self.key(m, n, r))

    def put(self, profile: PolarProfile):
        self.entries[self.key(profile.m, profile.n, profile.r)] = profile


def _warn(msg: str):
    print(f"detlinks: warning: {msg}", file=sys.stderr)


def _parse_entry(key: str, raw) -> PolarProfile:
    m, n, r = (int(x) for x in key.split(","))
    values = tuple(int(v) for v in raw["values"])
    signs = tuple(int(s) for s in raw["raw_signs"])
    if len(values) != len(signs) or any(s not in (-1, 1) for s in signs):
        raise ValueError("malformed signs")
    if any(v < 0 for v in values):
        raise ValueError("negative value")
    return PolarProfile(m, n, r, values, signs)


def cache_load(path: Path | None = None) -> CacheFile:
    """Load the cache; any corruption means an empty cache plus a warning."""
    path = path or cache_path()
    if not path.exists():
        return CacheFile()
    try:
        raw = json.loads(path.read_text())
    except (OSError, ValueError) as exc:
        _warn(f"ignoring unreadable cache {path}: {exc}")
        return CacheFile()
    try:
        if raw["version"] != CACHE_VERSION:
            _warn(
                f"ignoring cache {path} with version {raw['version']} "
                f"(current is {CACHE_VERSION})"
            )
            return CacheFile()
        entries = {}
        for key, val in raw["entries"].items():
            entries[key] = _parse_entry(key, val)
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        _warn(f"ignoring malformed cache {path}: {exc}")
        return CacheFile()
    return CacheFile(version=CACHE_VERSION, entries=entries)


def cache_store(cache: CacheFile, path: Path | None = None):
    """Atomically write the cache; I/O trouble is reported, never fatal."""
    path = path or cache_path()
    payload = {
        "version": cache.version,
        "entries": {
            key: {
                "values": [str(v) for v in prof.values],
                "raw_signs": list(prof.raw_signs),
            }
            for key, prof in sorted(cache.entries.items())
        },
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
        tmp.replace(path)
    except OSError as exc:
        _warn(f"could not write cache {path}: {exc}")

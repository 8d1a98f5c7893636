"""On-disk JSON cache for enumerated class tables."""

from __future__ import annotations

import json
import os
import random
from pathlib import Path

from . import __version__
from .enumeration import ClassTable

ENV_VAR = "CATALANIA_CACHE"


def default_dir() -> Path:
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "catalania"


class TableCache:
    """Tables stored as ``order-<n>-v<version>.json`` under one directory."""

    def __init__(self, directory: str | os.PathLike | None = None, version: str = __version__):
        self.directory = Path(directory) if directory is not None else default_dir()
        self.version = version

    def path(self, order: int) -> Path:
        return self.directory / f"order-{order}-v{self.version}.json"

    def load(self, order: int) -> ClassTable | None:
        p = self.path(order)
        try:
            data = json.loads(p.read_text())
        except (OSError, ValueError):
            return None
        if data.get("order") != order or data.get("version") != self.version:
            return None
        try:
            return ClassTable.from_json(data)
        except (KeyError, TypeError, ValueError):
            return None

    def store(self, tbl: ClassTable) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        data = tbl.to_json()
        data["version"] = self.version
        p = self.path(tbl.order)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True))
        tmp.replace(p)
        return p

    def spot_check(self, orders, rng: random.Random | None = None) -> int | None:
        """Re-enumerate one cached order and compare; returns the order checked."""
        from .enumeration import enumerate_classes

        cached = [n for n in orders if self.path(n).exists()]
        if not cached:
            return None
        n = (rng or random.Random(0)).choice(sorted(cached))
        hit = self.load(n)
        if hit is not None and hit.classes != enumerate_classes(n).classes:
            raise AssertionError(f"cached table for order {n} differs from a fresh enumeration")
        return n

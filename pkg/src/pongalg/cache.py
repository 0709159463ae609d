"""On-disk cache of generator tables.

Files are content addressed by the key (algebra, m, k, max_disp, format
version).  The cache is only ever an optimisation: anything that fails to
parse, has the wrong version or key, or does not match its checksum is thrown
away and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from . import asteroids, core
from .serialize import ALGEBRAS

FORMAT_VERSION = 1

log = logging.getLogger(__name__)

ENUMERATORS = {
    "pong": core.enumerate_generators,
    "asteroids": asteroids.enumerate_generators,
}


def cache_key(algebra: str, m: int, k: int, max_disp: int) -> dict:
    return {"algebra": algebra, "m": m, "k": k, "max_disp": max_disp,
            "format_version": FORMAT_VERSION}


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def cache_path(root, algebra: str, m: int, k: int, max_disp: int) -> Path:
    return Path(root) / f"gens-{_digest(cache_key(algebra, m, k, max_disp))[:32]}.json"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _load(path: Path, key: dict, algebra: str):
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("key") != key:
        raise ValueError("key or format version mismatch")
    rows = data["generators"]
    if data.get("checksum") != _digest(rows):
        raise ValueError("checksum mismatch")
    cls = ALGEBRAS[algebra]
    return [cls(key["m"], tuple(d), tuple(v)) for d, v in rows]


def generator_table(algebra: str, m: int, k: int, max_disp: int, cache_dir=None) -> list:
    """Bounded generator list, read from ``cache_dir`` when a valid entry exists."""
    enumerate_ = ENUMERATORS[algebra]
    if cache_dir is None:
        return enumerate_(m, k, max_disp)
    key = cache_key(algebra, m, k, max_disp)
    path = cache_path(cache_dir, algebra, m, k, max_disp)
    if path.exists():
        try:
            return _load(path, key, algebra)
        except Exception as exc:  # noqa: BLE001 - any damage means recompute
            log.warning("discarding cache entry %s (%s); recomputing", path, exc)
    gens = enumerate_(m, k, max_disp)
    rows = [[list(g.domain), list(g.values)] for g in gens]
    payload = {"key": key, "generators": rows, "checksum": _digest(rows)}
    _atomic_write(path, json.dumps(payload, sort_keys=True))
    return gens

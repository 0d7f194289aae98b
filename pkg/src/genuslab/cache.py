"""On-disk cache of genus polynomials, one JSON file per (genus, weight)."""
from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from .genus import GenusId, genus_polynomial
from .polynomial import GradedPolynomial

SCHEMA_VERSION = 1
ENV_VAR = "GENUSLAB_CACHE_DIR"


class CacheError(Exception):
    pass


def cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    from platformdirs import user_cache_dir

    return Path(user_cache_dir("genuslab"))


def _digest(terms: list[dict]) -> str:
    payload = json.dumps(terms, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def entry_path(genus, weight: int, root: Path | None = None) -> Path:
    genus = GenusId.parse(genus)
    return (root or cache_dir()) / f"{genus.value}-{weight}.json"


def make_entry(genus, weight: int, poly: GradedPolynomial) -> dict:
    terms = poly.to_records()
    return {
        "schema_version": SCHEMA_VERSION,
        "genus": GenusId.parse(genus).value,
        "weight": weight,
        "terms": terms,
        "content_digest": _digest(terms),
    }


def read_entry(path: Path, genus, weight: int) -> GradedPolynomial:
    """Load and validate one entry; raises CacheError on any mismatch."""
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError) as exc:
        raise CacheError(f"unreadable cache entry {path}: {exc}") from exc
    if not isinstance(data, dict) or data.get("schema_version") != SCHEMA_VERSION:
        raise CacheError(f"schema mismatch in {path}")
    if data.get("genus") != GenusId.parse(genus).value or data.get("weight") != weight:
        raise CacheError(f"key mismatch in {path}")
    terms = data.get("terms")
    if not isinstance(terms, list) or data.get("content_digest") != _digest(terms):
        raise CacheError(f"digest mismatch in {path}")
    try:
        return GradedPolynomial.from_records(terms, weight)
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"malformed terms in {path}: {exc}") from exc


def write_entry(path: Path, entry: dict) -> None:
    """Atomic write: temp file in the same directory, then rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def cached_genus_polynomial(genus, weight: int, root: Path | None = None, use_cache: bool = True) -> GradedPolynomial:
    """genus_polynomial through the disk cache.  Corrupt entries are recomputed and rewritten."""
    genus = GenusId.parse(genus)
    if not use_cache:
        return genus_polynomial(genus, weight)
    path = entry_path(genus, weight, root)
    if path.exists():
        try:
            return read_entry(path, genus, weight)
        except CacheError as exc:
            print(f"warning: {exc}; recomputing", file=sys.stderr)
    poly = genus_polynomial(genus, weight)
    try:
        write_entry(path, make_entry(genus, weight, poly))
    except OSError as exc:
        print(f"warning: could not write cache entry {path}: {exc}", file=sys.stderr)
    return poly


def clear(root: Path | None = None) -> int:
    root = root or cache_dir()
    n = 0
    if root.is_dir():
        for p in root.glob("*.json"):
            p.unlink()
            n += 1
    return n


def info(root: Path | None = None) -> dict:
    root = root or cache_dir()
    entries = sorted(p.name for p in root.glob("*.json")) if root.is_dir() else []
    return {
        "directory": str(root),
        "schema_version": SCHEMA_VERSION,
        "entries": entries,
        "bytes": sum((root / e).stat().st_size for e in entries),
    }

"""On-disk JSON cache of Macdonald records, guarded by the (q, t) fingerprint.

One file per record, ``<kind>_n<n>_<label>.json`` (``_raw`` is appended for
unnormalized M and E).  Writes go through a temporary file and an atomic
rename, so concurrent readers never see a partial record.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .compositions import format_composition
from .field import CoeffField
from .laurent import LaurentPoly
from .macdonald import KINDS, MacdonaldFamily, MacdonaldRecord

ENV_VAR = "INTERPMAC_CACHE_DIR"
FORMAT_VERSION = 1


class CacheError(Exception):
    """Base class for cache problems."""


class CacheMissing(CacheError, FileNotFoundError):
    """No record file for the requested key."""


class CacheCorrupt(CacheError):
    """A record file exists but cannot be parsed or does not match its name."""


class FingerprintMismatch(CacheError):
    """A record was written under a different (q, t) specialization."""


def default_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, ".interpmac-cache"))


def filename(kind: str, n: int, label, hatted: bool = True) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    suffix = "" if hatted else "_raw"
    return f"{kind}_n{n}_{format_composition(label)}{suffix}.json"


def encode(rec: MacdonaldRecord, field: CoeffField) -> str:
    data = {
        "version": FORMAT_VERSION,
        "kind": rec.kind,
        "n": rec.n,
        "label": list(rec.label),
        "hatted": rec.hatted,
        "qt": rec.fingerprint,
        "poly": rec.poly.to_json(field),
    }
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def store(rec: MacdonaldRecord, directory, field: CoeffField) -> Path:
    if rec.fingerprint != field.fingerprint:
        raise FingerprintMismatch(f"record is for qt={rec.fingerprint}, field is qt={field.fingerprint}")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / filename(rec.kind, rec.n, rec.label, rec.hatted)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(encode(rec, field))
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def load(kind: str, n: int, label, directory, field: CoeffField, hatted: bool = True) -> MacdonaldRecord:
    path = Path(directory) / filename(kind, n, label, hatted)
    if not path.is_file():
        raise CacheMissing(f"no cached record {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        qt = data["qt"]
        header = (data["kind"], data["n"], tuple(data["label"]), bool(data["hatted"]))
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorrupt(f"{path}: {exc}") from exc
    if qt != field.fingerprint:
        raise FingerprintMismatch(f"{path} was written under qt={qt}, not qt={field.fingerprint}")
    if header != (kind, n, tuple(label), hatted):
        raise CacheCorrupt(f"{path}: header {header} does not match its file name")
    try:
        poly = LaurentPoly.from_json(data["poly"], field)
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorrupt(f"{path}: {exc}") from exc
    return MacdonaldRecord(kind, tuple(label), n, poly, hatted, qt)


def cache_io(rec: MacdonaldRecord, directory, op: str, field: CoeffField) -> MacdonaldRecord:
    """``store`` writes ``rec`` and returns it; ``load`` reads the record with rec's key."""
    if op == "store":
        store(rec, directory, field)
        return rec
    if op == "load":
        return load(rec.kind, rec.n, rec.label, directory, field, rec.hatted)
    raise ValueError(f"op must be 'store' or 'load', not {op!r}")


class PolyCache:
    """Memory in front of a directory; misses are computed and written back."""

    def __init__(self, directory, field: CoeffField):
        self.directory = Path(directory)
        self.field = field
        self.memory: dict = {}
        self.hits = 0
        self.misses = 0

    def get(self, family: MacdonaldFamily, kind: str, label, hatted: bool = True) -> MacdonaldRecord:
        if family.field.fingerprint != self.field.fingerprint:
            raise FingerprintMismatch("family and cache use different specializations")
        key = (kind, family.n, tuple(label), hatted)
        rec = self.memory.get(key)
        if rec is None:
            try:
                rec = load(kind, family.n, label, self.directory, self.field, hatted)
                self.hits += 1
            except CacheMissing:
                rec = family.record(kind, tuple(label), hatted)
                store(rec, self.directory, self.field)
                self.misses += 1
            self.memory[key] = rec
        return rec


def stats(directory) -> dict:
    """File count, total bytes and per-kind counts of a cache directory."""
    directory = Path(directory)
    files = sorted(directory.glob("*.json")) if directory.is_dir() else []
    kinds: dict[str, int] = {}
    for p in files:
        kind = p.name.split("_n", 1)[0]
        kinds[kind] = kinds.get(kind, 0) + 1
    return {
        "dir": str(directory),
        "files": len(files),
        "bytes": sum(p.stat().st_size for p in files),
        "kinds": dict(sorted(kinds.items())),
    }


def clear(directory) -> int:
    """Delete the record files of a cache directory; returns how many were removed."""
    directory = Path(directory)
    if not directory.is_dir():
        return 0
    count = 0
    for p in directory.glob("*.json"):
        if p.name.split("_n", 1)[0] in KINDS:
            p.unlink()
            count += 1
    return count

"""On-disk result cache: JSON-lines bases, triplet matrices, JSON tables.

Every artifact is keyed by a content hash of its generating spec plus the
format version; version-mismatched or corrupt entries are ignored and
recomputed, never silently reused.  Writes are atomic (temp file then
rename) so concurrent readers only ever see complete payloads.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile

from .canonical import OrientedClass
from .linalg import SparseIntMatrix

FORMAT_VERSION = 1
ENV_CACHE_DIR = "RIBBONCOH_CACHE_DIR"
DEFAULT_CACHE_DIR = ".cache/ribboncoh"


def default_cache_dir() -> str:
    return os.environ.get(ENV_CACHE_DIR, DEFAULT_CACHE_DIR)


def spec_hash(payload: dict) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha1(text.encode()).hexdigest()


class Cache:
    """A directory of immutable computation results."""

    def __init__(self, root: str | None):
        self.root = root

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def _path(self, kind: str, key: dict, suffix: str) -> str:
        h = spec_hash({"kind": kind, "version": FORMAT_VERSION, **key})
        return os.path.join(self.root, "%s-%s.%s" % (kind, h, suffix))

    def _write_atomic(self, path: str, text: str) -> None:
        os.makedirs(self.root, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                f.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    # bases -----------------------------------------------------------

    def store_basis(self, key: dict, classes, zero_count: int) -> None:
        if not self.enabled:
            return
        header = "# ribboncoh basis v%d zero_classes=%d" % (FORMAT_VERSION, zero_count)
        lines = [header]
        for cls in classes:
            lines.append(json.dumps(cls.to_json(), sort_keys=True))
        self._write_atomic(self._path("basis", key, "jsonl"), "\n".join(lines) + "\n")

    def load_basis(self, key: dict):
        """(classes, zero_count) or None on miss/version mismatch."""
        if not self.enabled:
            return None
        path = self._path("basis", key, "jsonl")
        try:
            with open(path) as f:
                lines = f.read().splitlines()
        except OSError:
            return None
        if not lines or not lines[0].startswith("# ribboncoh basis v%d " % FORMAT_VERSION):
            return None
        try:
            zero_count = int(lines[0].rsplit("zero_classes=", 1)[1])
            classes = []
            for ln in lines[1:]:
                if not ln.strip() or ln.startswith("#"):
                    continue
                rec = json.loads(ln)
                cls = OrientedClass(
                    tuple(rec["sigma0"]),
                    tuple(rec["sigma1"]),
                    int(rec["parity"]),
                    bool(rec["zero"]),
                )
                if cls.content_hash() != rec["hash"]:
                    return None
                classes.append(cls)
        except (KeyError, ValueError, IndexError):
            return None
        return classes, zero_count

    # matrices --------------------------------------------------------

    def store_matrix(self, key: dict, m: SparseIntMatrix) -> None:
        if not self.enabled:
            return
        text = "# ribboncoh matrix v%d\n" % FORMAT_VERSION + m.to_triplet_text()
        self._write_atomic(self._path("matrix", key, "txt"), text)

    def load_matrix(self, key: dict):
        if not self.enabled:
            return None
        path = self._path("matrix", key, "txt")
        try:
            with open(path) as f:
                text = f.read()
        except OSError:
            return None
        head, _, body = text.partition("\n")
        if head != "# ribboncoh matrix v%d" % FORMAT_VERSION:
            return None
        try:
            return SparseIntMatrix.from_triplet_text(body)
        except (ValueError, IndexError):
            return None

    # tables ----------------------------------------------------------

    def store_table(self, key: dict, payload) -> None:
        if not self.enabled:
            return
        text = json.dumps(
            {"version": FORMAT_VERSION, "payload": payload}, sort_keys=True, indent=1
        )
        self._write_atomic(self._path("table", key, "json"), text)

    def load_table(self, key: dict):
        if not self.enabled:
            return None
        path = self._path("table", key, "json")
        try:
            with open(path) as f:
                rec = json.load(f)
        except (OSError, ValueError):
            return None
        if not isinstance(rec, dict) or rec.get("version") != FORMAT_VERSION:
            return None
        return rec["payload"]


NO_CACHE = Cache(None)

"""On-disk cache for system lists and Cayley tables.

File layout: one header line ``superx-cache v1 <group> <kind> <checksum>``
followed by the payload.  The checksum is the sha256 hex digest of the
payload text; a mismatch marks the file corrupt and forces a recompute.
Writes go to a temp file first and are moved into place atomically.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import ConsistencyError
from .families import MaximalLinkedSystem
from .semigroups import SemigroupTable

FORMAT_VERSION = "v1"
ENV_VAR = "SUPERX_CACHE_DIR"


def resolve_cache_dir(flag_value: str | None = None) -> Path:
    """Cache directory: CLI flag, then environment, then user cache dir."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "superx"


def _safe_name(group_name: str) -> str:
    return group_name.replace(":", "_")


def cache_path(cache_dir: Path, group_name: str, kind: str) -> Path:
    return cache_dir / f"{_safe_name(group_name)}-{kind}-{FORMAT_VERSION}.txt"


def _checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def _write(path: Path, group_name: str, kind: str, payload: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"superx-cache {FORMAT_VERSION} {group_name} {kind} {_checksum(payload)}\n"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(header)
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: Path, group_name: str, kind: str) -> str | None:
    """The payload if the file exists and passes validation, else None."""
    try:
        text = path.read_text()
    except OSError:
        return None
    head, sep, payload = text.partition("\n")
    parts = head.split()
    if (
        not sep
        or len(parts) != 5
        or parts[:2] != ["superx-cache", FORMAT_VERSION]
        or parts[2] != group_name
        or parts[3] != kind
        or parts[4] != _checksum(payload)
    ):
        return None
    return payload


def systems_payload(group_name: str, ground_size: int, systems: list[MaximalLinkedSystem]) -> str:
    lines = [f"ground={ground_size} group={group_name} count={len(systems)}"]
    lines.extend(s.serialize() for s in systems)
    return "\n".join(lines) + "\n"


def save_systems(cache_dir: Path, group_name: str, ground_size: int, systems) -> Path:
    path = cache_path(cache_dir, group_name, "systems")
    _write(path, group_name, "systems", systems_payload(group_name, ground_size, systems))
    return path


def load_systems(cache_dir: Path, group_name: str, ground_size: int) -> list[MaximalLinkedSystem] | None:
    payload = _read(cache_path(cache_dir, group_name, "systems"), group_name, "systems")
    if payload is None:
        return None
    lines = payload.splitlines()
    meta = dict(tok.split("=") for tok in lines[0].split())
    if int(meta["ground"]) != ground_size or int(meta["count"]) != len(lines) - 1:
        return None
    try:
        return [MaximalLinkedSystem.deserialize(ground_size, line) for line in lines[1:]]
    except (ValueError, ConsistencyError):
        return None


def table_payload(group_name: str, table: SemigroupTable) -> str:
    systems = table.elements
    ground = systems[0].ground_size
    lines = [f"ground={ground} group={group_name} count={table.order}"]
    lines.extend(s.serialize() for s in systems)
    lines.extend(" ".join(str(int(v)) for v in row) for row in table.product)
    return "\n".join(lines) + "\n"


def save_table(cache_dir: Path, group_name: str, table: SemigroupTable) -> Path:
    path = cache_path(cache_dir, group_name, "table")
    _write(path, group_name, "table", table_payload(group_name, table))
    return path


def load_table(cache_dir: Path, group_name: str, ground_size: int) -> SemigroupTable | None:
    payload = _read(cache_path(cache_dir, group_name, "table"), group_name, "table")
    if payload is None:
        return None
    lines = payload.splitlines()
    meta = dict(tok.split("=") for tok in lines[0].split())
    if int(meta["ground"]) != ground_size:
        return None
    count = int(meta["count"])
    if len(lines) != 1 + 2 * count:
        return None
    try:
        systems = [MaximalLinkedSystem.deserialize(ground_size, line) for line in lines[1 : 1 + count]]
        product = np.stack(
            [np.array(line.split(), dtype=np.int32) for line in lines[1 + count :]]
        )
        return SemigroupTable(
            product,
            elements=systems,
            labels=[s.serialize() for s in systems],
            name=f"lambda({group_name})",
        )
    except (ValueError, ConsistencyError):
        return None

"""Named parameter sets: built-ins plus optional user registries.

A registry file is a JSON array of objects with keys name, a, b, r, s;
all numeric values are exact fraction strings.  User entries are merged
over the built-ins and win on (case-insensitive) name collision.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

ENV_VAR = "HORADAM_REGISTRY"


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    a: Fraction
    b: Fraction
    r: Fraction
    s: Fraction
    source: str = "builtin"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "a": str(self.a),
            "b": str(self.b),
            "r": str(self.r),
            "s": str(self.s),
            "source": self.source,
        }


BUILTIN_ENTRIES: tuple[RegistryEntry, ...] = (
    RegistryEntry("fibonacci", Fraction(0), Fraction(1), Fraction(1), Fraction(1)),
    RegistryEntry("pell", Fraction(0), Fraction(1), Fraction(2), Fraction(1)),
    RegistryEntry("jacobsthal", Fraction(0), Fraction(1), Fraction(1), Fraction(2)),
    RegistryEntry("balancing", Fraction(0), Fraction(1), Fraction(6), Fraction(-1)),
)


def parse_fraction(text: str) -> Fraction:
    """Exact fraction from CLI text such as "3", "-3/4" or "0.5"."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed fraction {text!r}: {exc}") from None


def registry_path(explicit: str | None, env: dict | None = None) -> Path | None:
    """Resolve the user registry path: explicit flag first, then the
    HORADAM_REGISTRY environment variable."""
    if explicit:
        return Path(explicit)
    env = os.environ if env is None else env
    from_env = env.get(ENV_VAR)
    return Path(from_env) if from_env else None


def _parse_entry(record: object, source: str) -> RegistryEntry:
    if not isinstance(record, dict):
        raise ValueError(f"registry entries must be objects, got {type(record).__name__}")
    missing = {"name", "a", "b", "r", "s"} - set(record)
    if missing:
        raise ValueError(f"registry entry missing keys: {sorted(missing)}")
    name = str(record["name"]).strip()
    if not name:
        raise ValueError("registry entry has an empty name")
    return RegistryEntry(
        name,
        parse_fraction(record["a"]),
        parse_fraction(record["b"]),
        parse_fraction(record["r"]),
        parse_fraction(record["s"]),
        source,
    )


def load_registry(path: Path | None) -> dict[str, RegistryEntry]:
    """Built-ins merged with the user file at ``path`` (user wins).

    Keys are lower-cased names, enforcing case-insensitive uniqueness.
    """
    entries = {entry.name.lower(): entry for entry in BUILTIN_ENTRIES}
    if path is not None:
        raw = json.loads(Path(path).read_text())
        if not isinstance(raw, list):
            raise ValueError("registry file must contain a JSON array")
        for record in raw:
            entry = _parse_entry(record, source="user")
            entries[entry.name.lower()] = entry
    return entries


def resolve(name: str, path: Path | None) -> RegistryEntry:
    entries = load_registry(path)
    entry = entries.get(name.lower())
    if entry is None:
        known = ", ".join(sorted(entries))
        raise ValueError(f"unknown sequence name {name!r} (known: {known})")
    return entry


def upsert_entry(path: Path, entry: RegistryEntry) -> None:
    """Add or replace ``entry`` in the user registry file at ``path``."""
    records: list[dict] = []
    if path.exists():
        raw = json.loads(path.read_text())
        if not isinstance(raw, list):
            raise ValueError("registry file must contain a JSON array")
        records = [r for r in raw if str(r.get("name", "")).lower() != entry.name.lower()]
    record = entry.to_dict()
    del record["source"]
    records.append(record)
    path.write_text(json.dumps(records, indent=2) + "\n")

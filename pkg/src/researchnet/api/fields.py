"""Sparse fieldsets: `?fields=a,b` trims response records.

Requested names are validated against the route's field registry, so a
typo fails loudly instead of silently returning nothing. Identity keys
are always kept: a record stays addressable no matter the projection.
"""

from __future__ import annotations

from ..errors import UnknownField

ALWAYS_KEPT = ("id", "kind")


def parse_fields(raw: str | None) -> frozenset[str] | None:
    if raw is None:
        return None
    names = frozenset(name.strip() for name in raw.split(",") if name.strip())
    if not names:
        raise UnknownField("fields parameter names no fields")
    return names


def validate_fields(requested: frozenset[str] | None, allowed: frozenset[str], resource: str) -> None:
    if requested is None:
        return
    unknown = requested - allowed
    if unknown:
        raise UnknownField(f"{resource} has no field(s) {sorted(unknown)}")


def select_fields(record: dict, requested: frozenset[str] | None) -> dict:
    if requested is None:
        return record
    keep = set(requested) | set(ALWAYS_KEPT)
    return {key: value for key, value in record.items() if key in keep}

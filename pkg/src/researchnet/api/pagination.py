"""Cursor pagination with stable snapshots.

A cursor pins the ledger position seen by the first page, so a client
walking pages while new entities arrive still sees exactly the items
that existed when it started: later pages filter by seq <= snapshot.
Cursors are opaque to clients but deliberately cheap to decode here.
"""

from __future__ import annotations

import base64
import binascii
import json
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from ..errors import BadCursor, LimitOutOfRange

DEFAULT_LIMIT = 20
MAX_LIMIT = 100


@dataclass(frozen=True)
class Page:
    items: list
    next_cursor: str | None
    snapshot_event_id: int


def check_limit(limit: int) -> int:
    if not 1 <= limit <= MAX_LIMIT:
        raise LimitOutOfRange(f"limit must be in 1..{MAX_LIMIT}, got {limit}")
    return limit


def encode_cursor(snapshot_event_id: int, offset: int) -> str:
    payload = json.dumps({"s": snapshot_event_id, "o": offset}).encode("ascii")
    return base64.urlsafe_b64encode(payload).decode("ascii").rstrip("=")


def decode_cursor(cursor: str) -> tuple[int, int]:
    try:
        raw = base64.urlsafe_b64decode(cursor + "=" * (-len(cursor) % 4))
        payload = json.loads(raw)
        snapshot, offset = payload["s"], payload["o"]
    except (binascii.Error, ValueError, KeyError, TypeError):
        raise BadCursor("cursor is not one of ours") from None
    if not isinstance(snapshot, int) or not isinstance(offset, int) or snapshot < 0 or offset < 0:
        raise BadCursor("cursor fields out of range")
    return snapshot, offset


def page_of(
    items_at: Callable[[int], Sequence[Any]],
    limit: int,
    cursor: str | None,
    snapshot_now: int,
) -> Page:
    """Slice the ordered sequence `items_at(snapshot)` at the cursor's
    offset. The first page fixes the snapshot; every later page re-derives
    the same sequence from it."""
    check_limit(limit)
    snapshot, offset = decode_cursor(cursor) if cursor else (snapshot_now, 0)
    ordered = items_at(snapshot)
    window = list(ordered[offset:offset + limit])
    next_cursor = (
        encode_cursor(snapshot, offset + limit) if offset + limit < len(ordered) else None
    )
    return Page(items=window, next_cursor=next_cursor, snapshot_event_id=snapshot)


def paginate(
    rows: Sequence[tuple[int, Any]],
    limit: int,
    cursor: str | None,
    snapshot_now: int,
    newest_first: bool = True,
) -> Page:
    """Paginate (seq, item) rows by seq, bounded at the snapshot."""

    def items_at(snapshot: int) -> list:
        eligible = sorted(
            (pair for pair in rows if pair[0] <= snapshot), reverse=newest_first
        )
        return [item for _, item in eligible]

    return page_of(items_at, limit, cursor, snapshot_now)

"""Consent-gated research data access.

Every operation here requires an active researcher grant; the gate fails
closed for everyone else including moderators. Exports read a snapshot
bounded at the ledger position captured when the call starts, so
concurrent writes never appear partially.

Wire formats
  events  one JSON object per line; the first line is a metadata header
          ({"format": "interaction-events", ...}) so even an empty
          platform produces a valid, self-describing stream
  users   CSV with a header row
  graph   "src<TAB>dst<TAB>weight" lines after one comment line naming
          the kinds and the snapshot
"""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime
from typing import Iterable, Iterator

from ..clock import Clock
from ..domain.models import User
from ..errors import (
    EmptyTermDocument,
    InvalidRange,
    NotAdministrator,
    NotAuthorizedResearcher,
    UnknownPost,
    UnknownUser,
)
from ..events import GRAPH_VERBS, InteractionEvent, Verb
from ..storage.base import Store
from .grants import ResearcherGrant, hash_term_document
from .graph import GraphMetrics, SocialGraph, build_graph, graph_metrics, interaction_success

EVENTS_FORMAT = "interaction-events"
USER_COLUMNS = ["user_id", "handle", "role", "created_at", "terms_version", "terms_accepted_at"]


def parse_time_range(raw: str) -> tuple[datetime | None, datetime | None]:
    """Parse "<from>/<to>" with ISO-8601 endpoints; either side may be
    empty for an open bound."""
    parts = raw.split("/")
    if len(parts) != 2:
        raise InvalidRange(f"expected <from>/<to>, got {raw!r}")
    bounds = []
    for part in parts:
        if not part:
            bounds.append(None)
            continue
        try:
            bounds.append(datetime.fromisoformat(part))
        except ValueError:
            raise InvalidRange(f"bad timestamp {part!r}") from None
    start, end = bounds
    if start is not None and end is not None and start > end:
        raise InvalidRange("range start is after its end")
    return start, end


class ResearchService:
    def __init__(self, store: Store, clock: Clock, admin_id: str):
        self.store = store
        self.clock = clock
        self.admin_id = admin_id

    # --- grants -----------------------------------------------------------

    def grant_researcher(
        self, acting_user: User, user_id: str, signed_term_doc: str
    ) -> ResearcherGrant:
        if acting_user.user_id != self.admin_id:
            raise NotAdministrator("only the bootstrap administrator issues grants")
        if not signed_term_doc or not signed_term_doc.strip():
            raise EmptyTermDocument()
        if self.store.get_user(user_id) is None:
            raise UnknownUser(user_id)
        grant = ResearcherGrant(
            user_id=user_id,
            term_doc_hash=hash_term_document(signed_term_doc),
            signed_at=self.clock.now(),
            granted_by=acting_user.user_id,
        )
        self.store.put_grant(grant)
        return grant

    def revoke_grant(self, acting_user: User, user_id: str) -> ResearcherGrant:
        if acting_user.user_id != self.admin_id:
            raise NotAdministrator()
        grant = self.store.get_grant(user_id)
        if grant is None:
            raise UnknownUser(f"no grant for {user_id}")
        revoked = grant.revoked()
        self.store.put_grant(revoked)
        return revoked

    def _require_grant(self, caller: User) -> ResearcherGrant:
        grant = self.store.get_grant(caller.user_id)
        if grant is None or not grant.active or not grant.term_doc_hash:
            raise NotAuthorizedResearcher(
                "unrestricted data access requires an active researcher grant"
            )
        return grant

    # --- exports -------------------------------------------------------------

    def export_events(
        self,
        caller: User,
        time_range: tuple[datetime | None, datetime | None] | None = None,
    ) -> Iterator[str]:
        """Yield the raw ledger, unredacted, one record per line, bounded
        at the snapshot taken when the export starts."""
        self._require_grant(caller)
        start, end = time_range or (None, None)
        if start is not None and end is not None and start > end:
            raise InvalidRange("range start is after its end")
        snapshot = self.store.snapshot_event_id()
        yield json.dumps({
            "format": EVENTS_FORMAT,
            "snapshot_event_id": snapshot,
            "generated_at": self.clock.now().isoformat(),
        })
        for event in self.store.events(up_to=snapshot):
            if start is not None and event.occurred_at < start:
                continue
            if end is not None and event.occurred_at > end:
                continue
            yield json.dumps(event.to_record())

    def export_users(self, caller: User) -> Iterator[str]:
        """One CSV row per registered account. Consent is universal by
        construction, so terms fields are always populated."""
        self._require_grant(caller)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="")
        writer.writerow(USER_COLUMNS)
        yield buffer.getvalue()
        for user in self.store.list_users():
            buffer.seek(0)
            buffer.truncate()
            writer.writerow([
                user.user_id,
                user.handle,
                user.role.value,
                user.created_at.isoformat(),
                user.terms_version,
                user.terms_accepted_at.isoformat(),
            ])
            yield buffer.getvalue()

    def graph_snapshot(
        self, caller: User, kinds: Iterable[str | Verb] = GRAPH_VERBS
    ) -> SocialGraph:
        self._require_grant(caller)
        snapshot = self.store.snapshot_event_id()
        return build_graph(self.store.events(up_to=snapshot), kinds, snapshot_event_id=snapshot)

    def export_graph(
        self, caller: User, kinds: Iterable[str | Verb] = GRAPH_VERBS
    ) -> Iterator[str]:
        graph = self.graph_snapshot(caller, kinds)
        kind_list = ",".join(sorted(v.value for v in graph.kinds))
        yield (
            f"# directed interaction graph, kinds={kind_list}, "
            f"snapshot_event_id={graph.snapshot_event_id}"
        )
        for (src, dst) in sorted(graph.edges):
            yield f"{src}\t{dst}\t{graph.edges[(src, dst)]}"

    def metrics(
        self, caller: User, kinds: Iterable[str | Verb] = GRAPH_VERBS
    ) -> GraphMetrics:
        return graph_metrics(self.graph_snapshot(caller, kinds))

    def interaction_success(self, caller: User, post_id: str) -> int:
        self._require_grant(caller)
        if self.store.get_post(post_id) is None:
            raise UnknownPost(post_id)
        snapshot = self.store.snapshot_event_id()
        return interaction_success(post_id, self.store.events(up_to=snapshot))

"""The interaction ledger: one append-only record per accepted user action.

Every mutating operation in the platform emits exactly one event here.
The ledger is the single source of truth for gamification and for the
research export; there are no update or delete verbs, so any state can
be rebuilt by replaying it from the start.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum


class Verb(str, Enum):
    REGISTER = "register"
    CREATE_COMMUNITY = "create_community"
    CREATE_DISCUSSION = "create_discussion"
    POST = "post"
    COMMENT = "comment"
    LIKE = "like"
    SHARE = "share"
    CHAT = "chat"
    SURVEY_ANSWER = "survey_answer"
    PROFILE_UPDATE = "profile_update"


# Verbs that target another user's content and therefore define edges in
# the interaction graph.
GRAPH_VERBS = frozenset({Verb.LIKE, Verb.COMMENT, Verb.SHARE, Verb.CHAT})


@dataclass(frozen=True)
class InteractionEvent:
    """A single ledger record.

    event_id is a strictly increasing sequence number assigned by the
    store at append time. object_owner_id is the author of the acted-on
    entity; it is None for register and profile_update, which have no
    target author.
    """

    event_id: int
    actor_id: str
    verb: Verb
    object_id: str
    object_owner_id: str | None
    occurred_at: datetime

    def to_record(self) -> dict:
        return {
            "event_id": self.event_id,
            "occurred_at": self.occurred_at.isoformat(),
            "actor_id": self.actor_id,
            "verb": self.verb.value,
            "object_id": self.object_id,
            "object_owner_id": self.object_owner_id,
        }

    @classmethod
    def from_record(cls, record: dict) -> "InteractionEvent":
        return cls(
            event_id=record["event_id"],
            actor_id=record["actor_id"],
            verb=Verb(record["verb"]),
            object_id=record["object_id"],
            object_owner_id=record["object_owner_id"],
            occurred_at=datetime.fromisoformat(record["occurred_at"]),
        )

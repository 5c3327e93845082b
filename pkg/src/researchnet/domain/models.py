"""Entities for users, communities, discussions, posts, and chat."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum

# Operational size caps. Invented limits, kept in one place so deployments
# can reason about them.
MAX_BIO_CHARS = 2000
MAX_POST_CHARS = 10_000
MAX_CHAT_CHARS = 2000
MAX_SURVEY_QUESTION_CHARS = 500
DEFAULT_ATTACHMENT_CAP_BYTES = 25 * 1024 * 1024


class Role(str, Enum):
    MODERATOR = "moderator"
    ORDINARY = "ordinary"


class AttachmentKind(str, Enum):
    PDF = "pdf"
    VIDEO = "video"
    IMAGE = "image"


@dataclass(frozen=True)
class ProfileCustomization:
    """Free-form profile fields. Every profile is readable by every
    authenticated user; there is deliberately no visibility flag."""

    bio: str = ""
    avatar_ref: str | None = None
    banner_ref: str | None = None


@dataclass(frozen=True)
class User:
    user_id: str
    handle: str
    display_name: str
    role: Role
    profile: ProfileCustomization
    terms_version: str
    terms_accepted_at: datetime
    created_at: datetime
    seq: int = 0  # event_id of the registration event; feed/order key

    def with_profile(self, profile: ProfileCustomization) -> "User":
        return replace(self, profile=profile)

    def with_role(self, role: Role) -> "User":
        return replace(self, role=role)


@dataclass(frozen=True)
class Community:
    community_id: str
    title: str
    description: str
    moderator_ids: frozenset[str]
    created_at: datetime
    seq: int = 0


@dataclass(frozen=True)
class Discussion:
    discussion_id: str
    community_id: str
    title: str
    creator_id: str
    created_at: datetime
    seq: int = 0


@dataclass(frozen=True)
class Attachment:
    attachment_id: str
    kind: AttachmentKind
    content_ref: str
    size_bytes: int
    declared_media_type: str


@dataclass(frozen=True)
class Post:
    post_id: str
    discussion_id: str
    author_id: str
    body: str
    attachment: Attachment | None
    created_at: datetime
    hidden: bool = False  # moderator mask; the ledger keeps the post event
    seq: int = 0


@dataclass(frozen=True)
class Comment:
    comment_id: str
    post_id: str
    author_id: str
    body: str
    created_at: datetime
    seq: int = 0


@dataclass(frozen=True)
class Share:
    """A re-emission of an existing post. target_discussion_id None means
    the share goes to the actor's own profile feed."""

    share_id: str
    post_id: str
    actor_id: str
    target_discussion_id: str | None
    created_at: datetime
    seq: int = 0


@dataclass(frozen=True)
class ChatMessage:
    message_id: str
    sender_id: str
    recipient_id: str
    body: str
    created_at: datetime
    seq: int = 0

    def conversation_key(self) -> tuple[str, str]:
        return tuple(sorted((self.sender_id, self.recipient_id)))  # type: ignore[return-value]


@dataclass(frozen=True)
class ProfilePatch:
    """Partial profile update; None fields are left untouched."""

    bio: str | None = None
    avatar: Attachment | None = None
    banner: Attachment | None = None

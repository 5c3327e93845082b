"""SQLite-backed store for deployments.

A single connection guarded by a lock serializes writers; every mutation
runs inside one transaction so the entity row and the ledger row commit
or roll back together. Uniqueness lives in UNIQUE indexes, so the
constraints hold even if application-level checks are bypassed.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from contextlib import contextmanager
from dataclasses import replace
from datetime import datetime
from pathlib import Path

from ..domain.models import (
    Attachment,
    AttachmentKind,
    ChatMessage,
    Comment,
    Community,
    Discussion,
    Post,
    ProfileCustomization,
    Role,
    Share,
    User,
)
from ..errors import (
    AlreadyAnswered,
    AlreadyLiked,
    DuplicateHandle,
    DuplicateTitle,
    UnknownPost,
    UnknownSurvey,
    UnknownUser,
)
from ..events import InteractionEvent, Verb
from ..research.grants import ResearcherGrant
from ..surveys.models import Survey, SurveyResponse, SurveyStatus
from .base import Store

SCHEMA = """
CREATE TABLE IF NOT EXISTS events (
    event_id INTEGER PRIMARY KEY AUTOINCREMENT,
    actor_id TEXT NOT NULL,
    verb TEXT NOT NULL,
    object_id TEXT NOT NULL,
    object_owner_id TEXT,
    occurred_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS users (
    user_id TEXT PRIMARY KEY,
    handle TEXT NOT NULL,
    handle_lower TEXT NOT NULL UNIQUE,
    display_name TEXT NOT NULL,
    role TEXT NOT NULL,
    bio TEXT NOT NULL DEFAULT '',
    avatar_ref TEXT,
    banner_ref TEXT,
    terms_version TEXT NOT NULL,
    terms_accepted_at TEXT NOT NULL,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL,
    secret_hash TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS communities (
    community_id TEXT PRIMARY KEY,
    title TEXT NOT NULL UNIQUE,
    description TEXT NOT NULL DEFAULT '',
    moderator_ids TEXT NOT NULL,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS discussions (
    discussion_id TEXT PRIMARY KEY,
    community_id TEXT NOT NULL,
    title TEXT NOT NULL,
    creator_id TEXT NOT NULL,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS posts (
    post_id TEXT PRIMARY KEY,
    discussion_id TEXT NOT NULL,
    author_id TEXT NOT NULL,
    body TEXT NOT NULL,
    attachment TEXT,
    created_at TEXT NOT NULL,
    hidden INTEGER NOT NULL DEFAULT 0,
    seq INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS comments (
    comment_id TEXT PRIMARY KEY,
    post_id TEXT NOT NULL,
    author_id TEXT NOT NULL,
    body TEXT NOT NULL,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS likes (
    actor_id TEXT NOT NULL,
    post_id TEXT NOT NULL,
    PRIMARY KEY (actor_id, post_id)
);
CREATE TABLE IF NOT EXISTS shares (
    share_id TEXT PRIMARY KEY,
    post_id TEXT NOT NULL,
    actor_id TEXT NOT NULL,
    target_discussion_id TEXT,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS chats (
    message_id TEXT PRIMARY KEY,
    sender_id TEXT NOT NULL,
    recipient_id TEXT NOT NULL,
    body TEXT NOT NULL,
    created_at TEXT NOT NULL,
    seq INTEGER NOT NULL,
    conversation_key TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS surveys (
    survey_id TEXT PRIMARY KEY,
    community_id TEXT NOT NULL,
    creator_id TEXT NOT NULL,
    question TEXT NOT NULL,
    options TEXT NOT NULL,
    opens_at TEXT NOT NULL,
    closes_at TEXT,
    status TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS survey_responses (
    survey_id TEXT NOT NULL,
    respondent_id TEXT NOT NULL,
    option_index INTEGER NOT NULL,
    answered_at TEXT NOT NULL,
    PRIMARY KEY (survey_id, respondent_id)
);
CREATE TABLE IF NOT EXISTS grants (
    user_id TEXT PRIMARY KEY,
    term_doc_hash TEXT NOT NULL,
    signed_at TEXT NOT NULL,
    granted_by TEXT NOT NULL,
    active INTEGER NOT NULL
);
CREATE INDEX IF NOT EXISTS idx_discussions_community ON discussions (community_id, seq);
CREATE INDEX IF NOT EXISTS idx_posts_discussion ON posts (discussion_id, seq);
CREATE INDEX IF NOT EXISTS idx_comments_post ON comments (post_id, seq);
CREATE INDEX IF NOT EXISTS idx_shares_target ON shares (target_discussion_id, seq);
CREATE INDEX IF NOT EXISTS idx_chats_conversation ON chats (conversation_key, seq);
CREATE INDEX IF NOT EXISTS idx_responses_survey ON survey_responses (survey_id);
"""


def _dt(value: str) -> datetime:
    return datetime.fromisoformat(value)


class SQLiteStore(Store):
    def __init__(self, path: str | Path):
        self._lock = threading.RLock()
        self._conn = sqlite3.connect(str(path), check_same_thread=False)
        self._conn.row_factory = sqlite3.Row
        self._conn.isolation_level = None  # explicit transactions
        with self._lock:
            self._conn.executescript(SCHEMA)

    def close(self) -> None:
        with self._lock:
            self._conn.close()

    @contextmanager
    def _tx(self):
        with self._lock:
            self._conn.execute("BEGIN")
            try:
                yield self._conn
            except BaseException:
                self._conn.execute("ROLLBACK")
                raise
            else:
                self._conn.execute("COMMIT")

    # Ledger write seam; contract tests fault-inject here to prove that a
    # failed append leaves no partial entity behind.
    def _insert_event(
        self,
        conn,
        actor_id: str,
        verb: Verb,
        object_id: str,
        object_owner_id: str | None,
        occurred_at: datetime,
    ) -> InteractionEvent:
        cursor = conn.execute(
            "INSERT INTO events (actor_id, verb, object_id, object_owner_id, occurred_at)"
            " VALUES (?, ?, ?, ?, ?)",
            (actor_id, verb.value, object_id, object_owner_id, occurred_at.isoformat()),
        )
        return InteractionEvent(
            event_id=cursor.lastrowid,
            actor_id=actor_id,
            verb=verb,
            object_id=object_id,
            object_owner_id=object_owner_id,
            occurred_at=occurred_at,
        )

    # --- ledger ---------------------------------------------------------

    def events(self, after_id: int = 0, up_to: int | None = None) -> list[InteractionEvent]:
        query = "SELECT * FROM events WHERE event_id > ?"
        params: list = [after_id]
        if up_to is not None:
            query += " AND event_id <= ?"
            params.append(up_to)
        query += " ORDER BY event_id"
        with self._lock:
            rows = self._conn.execute(query, params).fetchall()
        return [
            InteractionEvent(
                event_id=row["event_id"],
                actor_id=row["actor_id"],
                verb=Verb(row["verb"]),
                object_id=row["object_id"],
                object_owner_id=row["object_owner_id"],
                occurred_at=_dt(row["occurred_at"]),
            )
            for row in rows
        ]

    def snapshot_event_id(self) -> int:
        with self._lock:
            row = self._conn.execute("SELECT MAX(event_id) AS top FROM events").fetchone()
        return row["top"] or 0

    # --- users ----------------------------------------------------------

    def _user_from_row(self, row) -> User:
        return User(
            user_id=row["user_id"],
            handle=row["handle"],
            display_name=row["display_name"],
            role=Role(row["role"]),
            profile=ProfileCustomization(
                bio=row["bio"], avatar_ref=row["avatar_ref"], banner_ref=row["banner_ref"]
            ),
            terms_version=row["terms_version"],
            terms_accepted_at=_dt(row["terms_accepted_at"]),
            created_at=_dt(row["created_at"]),
            seq=row["seq"],
        )

    def add_user(self, user: User, secret_hash: str) -> tuple[User, InteractionEvent]:
        with self._tx() as conn:
            event = self._insert_event(
                conn, user.user_id, Verb.REGISTER, user.user_id, None, user.created_at
            )
            stored = replace(user, seq=event.event_id)
            try:
                conn.execute(
                    "INSERT INTO users (user_id, handle, handle_lower, display_name, role,"
                    " bio, avatar_ref, banner_ref, terms_version, terms_accepted_at,"
                    " created_at, seq, secret_hash)"
                    " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                    (
                        user.user_id,
                        user.handle,
                        user.handle.lower(),
                        user.display_name,
                        user.role.value,
                        user.profile.bio,
                        user.profile.avatar_ref,
                        user.profile.banner_ref,
                        user.terms_version,
                        user.terms_accepted_at.isoformat(),
                        user.created_at.isoformat(),
                        event.event_id,
                        secret_hash,
                    ),
                )
            except sqlite3.IntegrityError:
                raise DuplicateHandle(f"handle {user.handle!r} is taken") from None
            return stored, event

    def get_user(self, user_id: str) -> User | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM users WHERE user_id = ?", (user_id,)
            ).fetchone()
        return self._user_from_row(row) if row else None

    def get_user_by_handle(self, handle: str) -> User | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM users WHERE handle_lower = ?", (handle.lower(),)
            ).fetchone()
        return self._user_from_row(row) if row else None

    def list_users(self) -> list[User]:
        with self._lock:
            rows = self._conn.execute("SELECT * FROM users ORDER BY seq").fetchall()
        return [self._user_from_row(row) for row in rows]

    def secret_hash_for(self, user_id: str) -> str | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT secret_hash FROM users WHERE user_id = ?", (user_id,)
            ).fetchone()
        return row["secret_hash"] if row else None

    def update_profile(
        self, user_id: str, profile: ProfileCustomization, occurred_at: datetime
    ) -> tuple[User, InteractionEvent]:
        with self._tx() as conn:
            row = conn.execute("SELECT * FROM users WHERE user_id = ?", (user_id,)).fetchone()
            if row is None:
                raise UnknownUser(user_id)
            event = self._insert_event(
                conn, user_id, Verb.PROFILE_UPDATE, user_id, None, occurred_at
            )
            conn.execute(
                "UPDATE users SET bio = ?, avatar_ref = ?, banner_ref = ? WHERE user_id = ?",
                (profile.bio, profile.avatar_ref, profile.banner_ref, user_id),
            )
            return self._user_from_row(row).with_profile(profile), event

    def set_role(self, user_id: str, role: Role) -> User:
        with self._tx() as conn:
            row = conn.execute("SELECT * FROM users WHERE user_id = ?", (user_id,)).fetchone()
            if row is None:
                raise UnknownUser(user_id)
            conn.execute("UPDATE users SET role = ? WHERE user_id = ?", (role.value, user_id))
            return self._user_from_row(row).with_role(role)

    # --- communities / discussions --------------------------------------

    def _community_from_row(self, row) -> Community:
        return Community(
            community_id=row["community_id"],
            title=row["title"],
            description=row["description"],
            moderator_ids=frozenset(json.loads(row["moderator_ids"])),
            created_at=_dt(row["created_at"]),
            seq=row["seq"],
        )

    def add_community(self, community: Community) -> tuple[Community, InteractionEvent]:
        actor = next(iter(community.moderator_ids))
        with self._tx() as conn:
            event = self._insert_event(
                conn, actor, Verb.CREATE_COMMUNITY, community.community_id, actor,
                community.created_at,
            )
            stored = replace(community, seq=event.event_id)
            try:
                conn.execute(
                    "INSERT INTO communities (community_id, title, description,"
                    " moderator_ids, created_at, seq) VALUES (?, ?, ?, ?, ?, ?)",
                    (
                        community.community_id,
                        community.title,
                        community.description,
                        json.dumps(sorted(community.moderator_ids)),
                        community.created_at.isoformat(),
                        event.event_id,
                    ),
                )
            except sqlite3.IntegrityError:
                raise DuplicateTitle(f"community {community.title!r} exists") from None
            return stored, event

    def get_community(self, community_id: str) -> Community | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM communities WHERE community_id = ?", (community_id,)
            ).fetchone()
        return self._community_from_row(row) if row else None

    def list_communities(self) -> list[Community]:
        with self._lock:
            rows = self._conn.execute("SELECT * FROM communities ORDER BY seq").fetchall()
        return [self._community_from_row(row) for row in rows]

    def _discussion_from_row(self, row) -> Discussion:
        return Discussion(
            discussion_id=row["discussion_id"],
            community_id=row["community_id"],
            title=row["title"],
            creator_id=row["creator_id"],
            created_at=_dt(row["created_at"]),
            seq=row["seq"],
        )

    def add_discussion(self, discussion: Discussion) -> tuple[Discussion, InteractionEvent]:
        with self._tx() as conn:
            event = self._insert_event(
                conn, discussion.creator_id, Verb.CREATE_DISCUSSION,
                discussion.discussion_id, discussion.creator_id, discussion.created_at,
            )
            stored = replace(discussion, seq=event.event_id)
            conn.execute(
                "INSERT INTO discussions (discussion_id, community_id, title, creator_id,"
                " created_at, seq) VALUES (?, ?, ?, ?, ?, ?)",
                (
                    discussion.discussion_id,
                    discussion.community_id,
                    discussion.title,
                    discussion.creator_id,
                    discussion.created_at.isoformat(),
                    event.event_id,
                ),
            )
            return stored, event

    def get_discussion(self, discussion_id: str) -> Discussion | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM discussions WHERE discussion_id = ?", (discussion_id,)
            ).fetchone()
        return self._discussion_from_row(row) if row else None

    def list_discussions(self, community_id: str) -> list[Discussion]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM discussions WHERE community_id = ? ORDER BY seq",
                (community_id,),
            ).fetchall()
        return [self._discussion_from_row(row) for row in rows]

    # --- posts, reactions -------------------------------------------------

    def _post_from_row(self, row) -> Post:
        attachment = None
        if row["attachment"]:
            data = json.loads(row["attachment"])
            attachment = Attachment(
                attachment_id=data["attachment_id"],
                kind=AttachmentKind(data["kind"]),
                content_ref=data["content_ref"],
                size_bytes=data["size_bytes"],
                declared_media_type=data["declared_media_type"],
            )
        return Post(
            post_id=row["post_id"],
            discussion_id=row["discussion_id"],
            author_id=row["author_id"],
            body=row["body"],
            attachment=attachment,
            created_at=_dt(row["created_at"]),
            hidden=bool(row["hidden"]),
            seq=row["seq"],
        )

    def add_post(self, post: Post) -> tuple[Post, InteractionEvent]:
        attachment = None
        if post.attachment:
            attachment = json.dumps({
                "attachment_id": post.attachment.attachment_id,
                "kind": post.attachment.kind.value,
                "content_ref": post.attachment.content_ref,
                "size_bytes": post.attachment.size_bytes,
                "declared_media_type": post.attachment.declared_media_type,
            })
        with self._tx() as conn:
            event = self._insert_event(
                conn, post.author_id, Verb.POST, post.post_id, post.author_id, post.created_at
            )
            stored = replace(post, seq=event.event_id)
            conn.execute(
                "INSERT INTO posts (post_id, discussion_id, author_id, body, attachment,"
                " created_at, hidden, seq) VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    post.post_id,
                    post.discussion_id,
                    post.author_id,
                    post.body,
                    attachment,
                    post.created_at.isoformat(),
                    int(post.hidden),
                    event.event_id,
                ),
            )
            return stored, event

    def get_post(self, post_id: str) -> Post | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM posts WHERE post_id = ?", (post_id,)
            ).fetchone()
        return self._post_from_row(row) if row else None

    def list_posts(self, discussion_id: str) -> list[Post]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM posts WHERE discussion_id = ? ORDER BY seq", (discussion_id,)
            ).fetchall()
        return [self._post_from_row(row) for row in rows]

    def set_post_hidden(self, post_id: str, hidden: bool) -> Post:
        with self._tx() as conn:
            row = conn.execute("SELECT * FROM posts WHERE post_id = ?", (post_id,)).fetchone()
            if row is None:
                raise UnknownPost(post_id)
            conn.execute(
                "UPDATE posts SET hidden = ? WHERE post_id = ?", (int(hidden), post_id)
            )
            return replace(self._post_from_row(row), hidden=hidden)

    def add_comment(self, comment: Comment, post_owner_id: str) -> tuple[Comment, InteractionEvent]:
        with self._tx() as conn:
            event = self._insert_event(
                conn, comment.author_id, Verb.COMMENT, comment.post_id, post_owner_id,
                comment.created_at,
            )
            stored = replace(comment, seq=event.event_id)
            conn.execute(
                "INSERT INTO comments (comment_id, post_id, author_id, body, created_at, seq)"
                " VALUES (?, ?, ?, ?, ?, ?)",
                (
                    comment.comment_id,
                    comment.post_id,
                    comment.author_id,
                    comment.body,
                    comment.created_at.isoformat(),
                    event.event_id,
                ),
            )
            return stored, event

    def list_comments(self, post_id: str) -> list[Comment]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM comments WHERE post_id = ? ORDER BY seq", (post_id,)
            ).fetchall()
        return [
            Comment(
                comment_id=row["comment_id"],
                post_id=row["post_id"],
                author_id=row["author_id"],
                body=row["body"],
                created_at=_dt(row["created_at"]),
                seq=row["seq"],
            )
            for row in rows
        ]

    def add_like(
        self, actor_id: str, post_id: str, post_owner_id: str, occurred_at: datetime
    ) -> InteractionEvent:
        with self._tx() as conn:
            event = self._insert_event(
                conn, actor_id, Verb.LIKE, post_id, post_owner_id, occurred_at
            )
            try:
                conn.execute(
                    "INSERT INTO likes (actor_id, post_id) VALUES (?, ?)", (actor_id, post_id)
                )
            except sqlite3.IntegrityError:
                raise AlreadyLiked(f"{actor_id} already liked {post_id}") from None
            return event

    def add_share(self, share: Share, post_owner_id: str) -> tuple[Share, InteractionEvent]:
        with self._tx() as conn:
            event = self._insert_event(
                conn, share.actor_id, Verb.SHARE, share.post_id, post_owner_id, share.created_at
            )
            stored = replace(share, seq=event.event_id)
            conn.execute(
                "INSERT INTO shares (share_id, post_id, actor_id, target_discussion_id,"
                " created_at, seq) VALUES (?, ?, ?, ?, ?, ?)",
                (
                    share.share_id,
                    share.post_id,
                    share.actor_id,
                    share.target_discussion_id,
                    share.created_at.isoformat(),
                    event.event_id,
                ),
            )
            return stored, event

    def _share_from_row(self, row) -> Share:
        return Share(
            share_id=row["share_id"],
            post_id=row["post_id"],
            actor_id=row["actor_id"],
            target_discussion_id=row["target_discussion_id"],
            created_at=_dt(row["created_at"]),
            seq=row["seq"],
        )

    def list_shares(self, discussion_id: str) -> list[Share]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM shares WHERE target_discussion_id = ? ORDER BY seq",
                (discussion_id,),
            ).fetchall()
        return [self._share_from_row(row) for row in rows]

    def list_profile_shares(self, actor_id: str) -> list[Share]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM shares WHERE actor_id = ? AND target_discussion_id IS NULL"
                " ORDER BY seq",
                (actor_id,),
            ).fetchall()
        return [self._share_from_row(row) for row in rows]

    # --- chat ---------------------------------------------------------------

    def add_chat_message(self, message: ChatMessage) -> tuple[ChatMessage, InteractionEvent]:
        key = "|".join(message.conversation_key())
        with self._tx() as conn:
            event = self._insert_event(
                conn, message.sender_id, Verb.CHAT, message.message_id,
                message.recipient_id, message.created_at,
            )
            stored = replace(message, seq=event.event_id)
            conn.execute(
                "INSERT INTO chats (message_id, sender_id, recipient_id, body, created_at,"
                " seq, conversation_key) VALUES (?, ?, ?, ?, ?, ?, ?)",
                (
                    message.message_id,
                    message.sender_id,
                    message.recipient_id,
                    message.body,
                    message.created_at.isoformat(),
                    event.event_id,
                    key,
                ),
            )
            return stored, event

    def conversation(self, user_a: str, user_b: str) -> list[ChatMessage]:
        key = "|".join(sorted((user_a, user_b)))
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM chats WHERE conversation_key = ? ORDER BY seq", (key,)
            ).fetchall()
        return [
            ChatMessage(
                message_id=row["message_id"],
                sender_id=row["sender_id"],
                recipient_id=row["recipient_id"],
                body=row["body"],
                created_at=_dt(row["created_at"]),
                seq=row["seq"],
            )
            for row in rows
        ]

    # --- surveys --------------------------------------------------------------

    def add_survey(self, survey: Survey) -> Survey:
        with self._tx() as conn:
            conn.execute(
                "INSERT INTO surveys (survey_id, community_id, creator_id, question,"
                " options, opens_at, closes_at, status) VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    survey.survey_id,
                    survey.community_id,
                    survey.creator_id,
                    survey.question,
                    json.dumps(list(survey.options)),
                    survey.opens_at.isoformat(),
                    survey.closes_at.isoformat() if survey.closes_at else None,
                    survey.status.value,
                ),
            )
        return survey

    def _survey_from_row(self, row) -> Survey:
        return Survey(
            survey_id=row["survey_id"],
            community_id=row["community_id"],
            creator_id=row["creator_id"],
            question=row["question"],
            options=tuple(json.loads(row["options"])),
            opens_at=_dt(row["opens_at"]),
            closes_at=_dt(row["closes_at"]) if row["closes_at"] else None,
            status=SurveyStatus(row["status"]),
        )

    def get_survey(self, survey_id: str) -> Survey | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM surveys WHERE survey_id = ?", (survey_id,)
            ).fetchone()
        return self._survey_from_row(row) if row else None

    def list_surveys(self, community_id: str) -> list[Survey]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM surveys WHERE community_id = ? ORDER BY rowid", (community_id,)
            ).fetchall()
        return [self._survey_from_row(row) for row in rows]

    def add_survey_response(
        self, response: SurveyResponse, survey_owner_id: str
    ) -> tuple[SurveyResponse, InteractionEvent]:
        with self._tx() as conn:
            event = self._insert_event(
                conn, response.respondent_id, Verb.SURVEY_ANSWER, response.survey_id,
                survey_owner_id, response.answered_at,
            )
            try:
                conn.execute(
                    "INSERT INTO survey_responses (survey_id, respondent_id, option_index,"
                    " answered_at) VALUES (?, ?, ?, ?)",
                    (
                        response.survey_id,
                        response.respondent_id,
                        response.option_index,
                        response.answered_at.isoformat(),
                    ),
                )
            except sqlite3.IntegrityError:
                raise AlreadyAnswered(
                    f"{response.respondent_id} already answered {response.survey_id}"
                ) from None
            return response, event

    def list_responses(self, survey_id: str) -> list[SurveyResponse]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM survey_responses WHERE survey_id = ? ORDER BY rowid",
                (survey_id,),
            ).fetchall()
        return [
            SurveyResponse(
                survey_id=row["survey_id"],
                respondent_id=row["respondent_id"],
                option_index=row["option_index"],
                answered_at=_dt(row["answered_at"]),
            )
            for row in rows
        ]

    def set_survey_status(self, survey_id: str, status: SurveyStatus) -> Survey:
        with self._tx() as conn:
            row = conn.execute(
                "SELECT * FROM surveys WHERE survey_id = ?", (survey_id,)
            ).fetchone()
            if row is None:
                raise UnknownSurvey(survey_id)
            conn.execute(
                "UPDATE surveys SET status = ? WHERE survey_id = ?",
                (status.value, survey_id),
            )
            return self._survey_from_row(row).with_status(status)

    # --- research grants ---------------------------------------------------------

    def put_grant(self, grant: ResearcherGrant) -> None:
        with self._tx() as conn:
            conn.execute(
                "INSERT INTO grants (user_id, term_doc_hash, signed_at, granted_by, active)"
                " VALUES (?, ?, ?, ?, ?)"
                " ON CONFLICT(user_id) DO UPDATE SET term_doc_hash = excluded.term_doc_hash,"
                " signed_at = excluded.signed_at, granted_by = excluded.granted_by,"
                " active = excluded.active",
                (
                    grant.user_id,
                    grant.term_doc_hash,
                    grant.signed_at.isoformat(),
                    grant.granted_by,
                    int(grant.active),
                ),
            )

    def get_grant(self, user_id: str) -> ResearcherGrant | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM grants WHERE user_id = ?", (user_id,)
            ).fetchone()
        if row is None:
            return None
        return ResearcherGrant(
            user_id=row["user_id"],
            term_doc_hash=row["term_doc_hash"],
            signed_at=_dt(row["signed_at"]),
            granted_by=row["granted_by"],
            active=bool(row["active"]),
        )

"""In-memory store: the reference implementation of the contract.

One lock serializes mutations, which makes event ids a total order and
lets uniqueness checks and the ledger append commit together. Each
mutation validates first and only then applies plain dict/list writes,
so a raising step can never leave a partial write behind.
"""

from __future__ import annotations

import threading
from datetime import datetime

from ..domain.models import (
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

from dataclasses import replace


class InMemoryStore(Store):
    def __init__(self):
        self._lock = threading.RLock()
        self._events: list[InteractionEvent] = []
        self._users: dict[str, User] = {}
        self._handles: dict[str, str] = {}  # lowercased handle -> user_id
        self._secrets: dict[str, str] = {}
        self._communities: dict[str, Community] = {}
        self._titles: dict[str, str] = {}  # title -> community_id
        self._discussions: dict[str, Discussion] = {}
        self._posts: dict[str, Post] = {}
        self._comments: dict[str, list[Comment]] = {}
        self._likes: set[tuple[str, str]] = set()  # (actor_id, post_id)
        self._shares: list[Share] = []
        self._chats: list[ChatMessage] = []
        self._surveys: dict[str, Survey] = {}
        self._responses: dict[str, list[SurveyResponse]] = {}
        self._answered: set[tuple[str, str]] = set()  # (survey_id, respondent_id)
        self._grants: dict[str, ResearcherGrant] = {}

    # The single seam through which every ledger write goes; contract
    # tests fault-inject here to prove entity/event atomicity.
    def _append_event(
        self,
        actor_id: str,
        verb: Verb,
        object_id: str,
        object_owner_id: str | None,
        occurred_at: datetime,
    ) -> InteractionEvent:
        event = InteractionEvent(
            event_id=len(self._events) + 1,
            actor_id=actor_id,
            verb=verb,
            object_id=object_id,
            object_owner_id=object_owner_id,
            occurred_at=occurred_at,
        )
        self._events.append(event)
        return event

    # --- ledger ---------------------------------------------------------

    def events(self, after_id: int = 0, up_to: int | None = None) -> list[InteractionEvent]:
        with self._lock:
            end = len(self._events) if up_to is None else min(up_to, len(self._events))
            return self._events[after_id:end]

    def snapshot_event_id(self) -> int:
        with self._lock:
            return len(self._events)

    # --- users ----------------------------------------------------------

    def add_user(self, user: User, secret_hash: str) -> tuple[User, InteractionEvent]:
        with self._lock:
            key = user.handle.lower()
            if key in self._handles:
                raise DuplicateHandle(f"handle {user.handle!r} is taken")
            event = self._append_event(
                user.user_id, Verb.REGISTER, user.user_id, None, user.created_at
            )
            stored = replace(user, seq=event.event_id)
            self._users[user.user_id] = stored
            self._handles[key] = user.user_id
            self._secrets[user.user_id] = secret_hash
            return stored, event

    def get_user(self, user_id: str) -> User | None:
        with self._lock:
            return self._users.get(user_id)

    def get_user_by_handle(self, handle: str) -> User | None:
        with self._lock:
            user_id = self._handles.get(handle.lower())
            return self._users.get(user_id) if user_id else None

    def list_users(self) -> list[User]:
        with self._lock:
            return sorted(self._users.values(), key=lambda u: u.seq)

    def secret_hash_for(self, user_id: str) -> str | None:
        with self._lock:
            return self._secrets.get(user_id)

    def update_profile(
        self, user_id: str, profile: ProfileCustomization, occurred_at: datetime
    ) -> tuple[User, InteractionEvent]:
        with self._lock:
            user = self._users.get(user_id)
            if user is None:
                raise UnknownUser(user_id)
            event = self._append_event(
                user_id, Verb.PROFILE_UPDATE, user_id, None, occurred_at
            )
            updated = user.with_profile(profile)
            self._users[user_id] = updated
            return updated, event

    def set_role(self, user_id: str, role: Role) -> User:
        with self._lock:
            user = self._users.get(user_id)
            if user is None:
                raise UnknownUser(user_id)
            updated = user.with_role(role)
            self._users[user_id] = updated
            return updated

    # --- communities / discussions --------------------------------------

    def add_community(self, community: Community) -> tuple[Community, InteractionEvent]:
        with self._lock:
            if community.title in self._titles:
                raise DuplicateTitle(f"community {community.title!r} exists")
            actor = next(iter(community.moderator_ids))
            event = self._append_event(
                actor, Verb.CREATE_COMMUNITY, community.community_id, actor, community.created_at
            )
            stored = replace(community, seq=event.event_id)
            self._communities[community.community_id] = stored
            self._titles[community.title] = community.community_id
            return stored, event

    def get_community(self, community_id: str) -> Community | None:
        with self._lock:
            return self._communities.get(community_id)

    def list_communities(self) -> list[Community]:
        with self._lock:
            return sorted(self._communities.values(), key=lambda c: c.seq)

    def add_discussion(self, discussion: Discussion) -> tuple[Discussion, InteractionEvent]:
        with self._lock:
            event = self._append_event(
                discussion.creator_id,
                Verb.CREATE_DISCUSSION,
                discussion.discussion_id,
                discussion.creator_id,
                discussion.created_at,
            )
            stored = replace(discussion, seq=event.event_id)
            self._discussions[discussion.discussion_id] = stored
            return stored, event

    def get_discussion(self, discussion_id: str) -> Discussion | None:
        with self._lock:
            return self._discussions.get(discussion_id)

    def list_discussions(self, community_id: str) -> list[Discussion]:
        with self._lock:
            return sorted(
                (d for d in self._discussions.values() if d.community_id == community_id),
                key=lambda d: d.seq,
            )

    # --- posts, reactions -------------------------------------------------

    def add_post(self, post: Post) -> tuple[Post, InteractionEvent]:
        with self._lock:
            event = self._append_event(
                post.author_id, Verb.POST, post.post_id, post.author_id, post.created_at
            )
            stored = replace(post, seq=event.event_id)
            self._posts[post.post_id] = stored
            return stored, event

    def get_post(self, post_id: str) -> Post | None:
        with self._lock:
            return self._posts.get(post_id)

    def list_posts(self, discussion_id: str) -> list[Post]:
        with self._lock:
            return sorted(
                (p for p in self._posts.values() if p.discussion_id == discussion_id),
                key=lambda p: p.seq,
            )

    def set_post_hidden(self, post_id: str, hidden: bool) -> Post:
        with self._lock:
            post = self._posts.get(post_id)
            if post is None:
                raise UnknownPost(post_id)
            updated = replace(post, hidden=hidden)
            self._posts[post_id] = updated
            return updated

    def add_comment(self, comment: Comment, post_owner_id: str) -> tuple[Comment, InteractionEvent]:
        with self._lock:
            event = self._append_event(
                comment.author_id, Verb.COMMENT, comment.post_id, post_owner_id, comment.created_at
            )
            stored = replace(comment, seq=event.event_id)
            self._comments.setdefault(comment.post_id, []).append(stored)
            return stored, event

    def list_comments(self, post_id: str) -> list[Comment]:
        with self._lock:
            return list(self._comments.get(post_id, []))

    def add_like(
        self, actor_id: str, post_id: str, post_owner_id: str, occurred_at: datetime
    ) -> InteractionEvent:
        with self._lock:
            if (actor_id, post_id) in self._likes:
                raise AlreadyLiked(f"{actor_id} already liked {post_id}")
            event = self._append_event(actor_id, Verb.LIKE, post_id, post_owner_id, occurred_at)
            self._likes.add((actor_id, post_id))
            return event

    def add_share(self, share: Share, post_owner_id: str) -> tuple[Share, InteractionEvent]:
        with self._lock:
            event = self._append_event(
                share.actor_id, Verb.SHARE, share.post_id, post_owner_id, share.created_at
            )
            stored = replace(share, seq=event.event_id)
            self._shares.append(stored)
            return stored, event

    def list_shares(self, discussion_id: str) -> list[Share]:
        with self._lock:
            return [s for s in self._shares if s.target_discussion_id == discussion_id]

    def list_profile_shares(self, actor_id: str) -> list[Share]:
        with self._lock:
            return [
                s for s in self._shares
                if s.actor_id == actor_id and s.target_discussion_id is None
            ]

    # --- chat ---------------------------------------------------------------

    def add_chat_message(self, message: ChatMessage) -> tuple[ChatMessage, InteractionEvent]:
        with self._lock:
            event = self._append_event(
                message.sender_id,
                Verb.CHAT,
                message.message_id,
                message.recipient_id,
                message.created_at,
            )
            stored = replace(message, seq=event.event_id)
            self._chats.append(stored)
            return stored, event

    def conversation(self, user_a: str, user_b: str) -> list[ChatMessage]:
        key = tuple(sorted((user_a, user_b)))
        with self._lock:
            return [m for m in self._chats if m.conversation_key() == key]

    # --- surveys --------------------------------------------------------------

    def add_survey(self, survey: Survey) -> Survey:
        with self._lock:
            self._surveys[survey.survey_id] = survey
            return survey

    def get_survey(self, survey_id: str) -> Survey | None:
        with self._lock:
            return self._surveys.get(survey_id)

    def list_surveys(self, community_id: str) -> list[Survey]:
        with self._lock:
            return [s for s in self._surveys.values() if s.community_id == community_id]

    def add_survey_response(
        self, response: SurveyResponse, survey_owner_id: str
    ) -> tuple[SurveyResponse, InteractionEvent]:
        with self._lock:
            key = (response.survey_id, response.respondent_id)
            if key in self._answered:
                raise AlreadyAnswered(
                    f"{response.respondent_id} already answered {response.survey_id}"
                )
            event = self._append_event(
                response.respondent_id,
                Verb.SURVEY_ANSWER,
                response.survey_id,
                survey_owner_id,
                response.answered_at,
            )
            self._responses.setdefault(response.survey_id, []).append(response)
            self._answered.add(key)
            return response, event

    def list_responses(self, survey_id: str) -> list[SurveyResponse]:
        with self._lock:
            return list(self._responses.get(survey_id, []))

    def set_survey_status(self, survey_id: str, status: SurveyStatus) -> Survey:
        with self._lock:
            survey = self._surveys.get(survey_id)
            if survey is None:
                raise UnknownSurvey(survey_id)
            updated = survey.with_status(status)
            self._surveys[survey_id] = updated
            return updated

    # --- research grants ---------------------------------------------------------

    def put_grant(self, grant: ResearcherGrant) -> None:
        with self._lock:
            self._grants[grant.user_id] = grant

    def get_grant(self, user_id: str) -> ResearcherGrant | None:
        with self._lock:
            return self._grants.get(user_id)

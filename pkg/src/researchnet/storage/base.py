"""Persistence contract.

The store is the model boundary: it assigns event ids, enforces the
uniqueness constraints (handle, community title, like-once, one survey
answer per user), and guarantees that an entity and its ledger event are
written atomically — a failed operation leaves neither behind.

Mutations that represent user actions return the ledger event they
appended; the stored entity carries ``seq`` equal to that event id, which
gives every feed a stable, snapshot-boundable order.

Two implementations ship: an in-memory store (tests, ephemeral runs) and
a SQLite store (deployment). Both must pass the same contract suite.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
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
from ..events import InteractionEvent, Verb
from ..research.grants import ResearcherGrant
from ..surveys.models import Survey, SurveyResponse, SurveyStatus


class Store(ABC):
    # --- ledger ---------------------------------------------------------

    @abstractmethod
    def events(self, after_id: int = 0, up_to: int | None = None) -> list[InteractionEvent]:
        """Events with after_id < event_id <= up_to, in event_id order."""

    @abstractmethod
    def snapshot_event_id(self) -> int:
        """Highest assigned event id (0 on an empty ledger)."""

    # --- users ----------------------------------------------------------

    @abstractmethod
    def add_user(self, user: User, secret_hash: str) -> tuple[User, InteractionEvent]:
        """Insert a user and append the register event. Handle uniqueness
        is case-insensitive; the loser of a duplicate race gets
        DuplicateHandle and nothing is written."""

    @abstractmethod
    def get_user(self, user_id: str) -> User | None: ...

    @abstractmethod
    def get_user_by_handle(self, handle: str) -> User | None: ...

    @abstractmethod
    def list_users(self) -> list[User]: ...

    @abstractmethod
    def secret_hash_for(self, user_id: str) -> str | None: ...

    @abstractmethod
    def update_profile(
        self, user_id: str, profile: ProfileCustomization, occurred_at: datetime
    ) -> tuple[User, InteractionEvent]: ...

    @abstractmethod
    def set_role(self, user_id: str, role: Role) -> User:
        """Administrative role change; not a user interaction, no event."""

    # --- communities / discussions --------------------------------------

    @abstractmethod
    def add_community(self, community: Community) -> tuple[Community, InteractionEvent]:
        """Insert a community; DuplicateTitle if the title is taken."""

    @abstractmethod
    def get_community(self, community_id: str) -> Community | None: ...

    @abstractmethod
    def list_communities(self) -> list[Community]: ...

    @abstractmethod
    def add_discussion(self, discussion: Discussion) -> tuple[Discussion, InteractionEvent]: ...

    @abstractmethod
    def get_discussion(self, discussion_id: str) -> Discussion | None: ...

    @abstractmethod
    def list_discussions(self, community_id: str) -> list[Discussion]: ...

    # --- posts, reactions -----------------------------------------------

    @abstractmethod
    def add_post(self, post: Post) -> tuple[Post, InteractionEvent]: ...

    @abstractmethod
    def get_post(self, post_id: str) -> Post | None: ...

    @abstractmethod
    def list_posts(self, discussion_id: str) -> list[Post]: ...

    @abstractmethod
    def set_post_hidden(self, post_id: str, hidden: bool) -> Post: ...

    @abstractmethod
    def add_comment(self, comment: Comment, post_owner_id: str) -> tuple[Comment, InteractionEvent]: ...

    @abstractmethod
    def list_comments(self, post_id: str) -> list[Comment]: ...

    @abstractmethod
    def add_like(
        self, actor_id: str, post_id: str, post_owner_id: str, occurred_at: datetime
    ) -> InteractionEvent:
        """Record a like. At most one like per (actor, post) ever exists;
        the duplicate path raises AlreadyLiked and appends nothing."""

    @abstractmethod
    def add_share(self, share: Share, post_owner_id: str) -> tuple[Share, InteractionEvent]: ...

    @abstractmethod
    def list_shares(self, discussion_id: str) -> list[Share]: ...

    @abstractmethod
    def list_profile_shares(self, actor_id: str) -> list[Share]:
        """Shares without a target discussion: the actor's profile feed."""

    # --- chat -------------------------------------------------------------

    @abstractmethod
    def add_chat_message(self, message: ChatMessage) -> tuple[ChatMessage, InteractionEvent]: ...

    @abstractmethod
    def conversation(self, user_a: str, user_b: str) -> list[ChatMessage]:
        """Messages between the pair, oldest first."""

    # --- surveys ----------------------------------------------------------

    @abstractmethod
    def add_survey(self, survey: Survey) -> Survey:
        """Survey creation is moderation work: no ledger event."""

    @abstractmethod
    def get_survey(self, survey_id: str) -> Survey | None: ...

    @abstractmethod
    def list_surveys(self, community_id: str) -> list[Survey]: ...

    @abstractmethod
    def add_survey_response(
        self, response: SurveyResponse, survey_owner_id: str
    ) -> tuple[SurveyResponse, InteractionEvent]:
        """One response per (survey, respondent); duplicates raise
        AlreadyAnswered and append nothing."""

    @abstractmethod
    def list_responses(self, survey_id: str) -> list[SurveyResponse]: ...

    @abstractmethod
    def set_survey_status(self, survey_id: str, status: SurveyStatus) -> Survey: ...

    # --- research grants ---------------------------------------------------

    @abstractmethod
    def put_grant(self, grant: ResearcherGrant) -> None: ...

    @abstractmethod
    def get_grant(self, user_id: str) -> ResearcherGrant | None: ...

    # --- lifecycle ----------------------------------------------------------

    def close(self) -> None:
        """Release any underlying resources. Default: nothing to do."""

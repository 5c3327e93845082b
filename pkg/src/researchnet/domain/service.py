"""Role-gated operations over users, communities, discussions, posts,
reactions, chat, and profiles.

The service validates inputs and preconditions; the store enforces
uniqueness and writes the entity together with its ledger event. A
rejected call therefore never appends anything to the ledger.
"""

from __future__ import annotations

from ..clock import Clock
from ..errors import (
    AttachmentTooLarge,
    EmptyComment,
    EmptyMessage,
    EmptyPost,
    FieldTooLarge,
    InvalidAttachment,
    NotAdministrator,
    NotModerator,
    TermsNotAccepted,
    UnknownCommunity,
    UnknownDiscussion,
    UnknownPost,
    UnknownRecipient,
    UnknownUser,
    UnsupportedAttachmentKind,
)
from ..events import InteractionEvent
from ..ids import new_id
from ..storage.base import Store
from .models import (
    Attachment,
    AttachmentKind,
    ChatMessage,
    Comment,
    Community,
    DEFAULT_ATTACHMENT_CAP_BYTES,
    Discussion,
    MAX_BIO_CHARS,
    MAX_CHAT_CHARS,
    MAX_POST_CHARS,
    Post,
    ProfileCustomization,
    ProfilePatch,
    Role,
    Share,
    User,
)


class AttachmentSpec:
    """Unvalidated attachment descriptor as supplied by a caller."""

    def __init__(self, kind: str, content_ref: str, size_bytes: int, declared_media_type: str):
        self.kind = kind
        self.content_ref = content_ref
        self.size_bytes = size_bytes
        self.declared_media_type = declared_media_type


class DomainService:
    def __init__(
        self,
        store: Store,
        clock: Clock,
        terms_version: str,
        attachment_cap_bytes: int = DEFAULT_ATTACHMENT_CAP_BYTES,
    ):
        self.store = store
        self.clock = clock
        self.terms_version = terms_version
        self.attachment_cap_bytes = attachment_cap_bytes

    # --- registration -----------------------------------------------------

    def register_user(
        self,
        handle: str,
        display_name: str,
        terms_version: str | None,
        role: Role = Role.ORDINARY,
        secret_hash: str = "",
    ) -> tuple[User, InteractionEvent]:
        """Create an account. Registration doubles as consent: it is
        impossible without accepting the current terms version."""
        if not handle or not handle.strip():
            raise UnknownUser("handle must be non-empty")
        if terms_version != self.terms_version:
            raise TermsNotAccepted(
                f"current terms are {self.terms_version!r}; got {terms_version!r}"
            )
        now = self.clock.now()
        user = User(
            user_id=new_id("usr"),
            handle=handle,
            display_name=display_name or handle,
            role=role,
            profile=ProfileCustomization(),
            terms_version=terms_version,
            terms_accepted_at=now,
            created_at=now,
        )
        return self.store.add_user(user, secret_hash)

    # --- communities --------------------------------------------------------

    def create_community(
        self, actor: User, title: str, description: str = ""
    ) -> tuple[Community, InteractionEvent]:
        if actor.role is not Role.MODERATOR:
            raise NotModerator("only moderators may create communities")
        community = Community(
            community_id=new_id("com"),
            title=title,
            description=description,
            moderator_ids=frozenset({actor.user_id}),
            created_at=self.clock.now(),
        )
        return self.store.add_community(community)

    def create_discussion(
        self, actor: User, community_id: str, title: str
    ) -> tuple[Discussion, InteractionEvent]:
        if self.store.get_community(community_id) is None:
            raise UnknownCommunity(community_id)
        discussion = Discussion(
            discussion_id=new_id("dis"),
            community_id=community_id,
            title=title,
            creator_id=actor.user_id,
            created_at=self.clock.now(),
        )
        return self.store.add_discussion(discussion)

    # --- posts ---------------------------------------------------------------

    def _build_attachment(self, spec: AttachmentSpec) -> Attachment:
        try:
            kind = AttachmentKind(spec.kind)
        except ValueError:
            raise UnsupportedAttachmentKind(f"kind {spec.kind!r}") from None
        if spec.size_bytes <= 0:
            raise InvalidAttachment("size_bytes must be positive")
        if spec.size_bytes > self.attachment_cap_bytes:
            raise AttachmentTooLarge(
                f"{spec.size_bytes} bytes exceeds cap {self.attachment_cap_bytes}"
            )
        return Attachment(
            attachment_id=new_id("att"),
            kind=kind,
            content_ref=spec.content_ref,
            size_bytes=spec.size_bytes,
            declared_media_type=spec.declared_media_type,
        )

    def create_post(
        self,
        actor: User,
        discussion_id: str,
        body: str,
        attachment: AttachmentSpec | None = None,
    ) -> tuple[Post, InteractionEvent]:
        if self.store.get_discussion(discussion_id) is None:
            raise UnknownDiscussion(discussion_id)
        if not body and attachment is None:
            raise EmptyPost("a post needs a body or an attachment")
        if len(body) > MAX_POST_CHARS:
            raise FieldTooLarge(f"post body exceeds {MAX_POST_CHARS} chars")
        post = Post(
            post_id=new_id("pst"),
            discussion_id=discussion_id,
            author_id=actor.user_id,
            body=body,
            attachment=self._build_attachment(attachment) if attachment else None,
            created_at=self.clock.now(),
        )
        return self.store.add_post(post)

    def like(self, actor: User, post_id: str) -> InteractionEvent:
        post = self.store.get_post(post_id)
        if post is None:
            raise UnknownPost(post_id)
        return self.store.add_like(actor.user_id, post_id, post.author_id, self.clock.now())

    def comment(self, actor: User, post_id: str, body: str) -> tuple[Comment, InteractionEvent]:
        post = self.store.get_post(post_id)
        if post is None:
            raise UnknownPost(post_id)
        if not body:
            raise EmptyComment()
        comment = Comment(
            comment_id=new_id("cmt"),
            post_id=post_id,
            author_id=actor.user_id,
            body=body,
            created_at=self.clock.now(),
        )
        return self.store.add_comment(comment, post.author_id)

    def share(
        self, actor: User, post_id: str, target_discussion_id: str | None = None
    ) -> tuple[Share, InteractionEvent]:
        """Re-emit a post, either into another discussion or (without a
        target) onto the actor's profile feed."""
        post = self.store.get_post(post_id)
        if post is None:
            raise UnknownPost(post_id)
        if target_discussion_id is not None and self.store.get_discussion(target_discussion_id) is None:
            raise UnknownDiscussion(target_discussion_id)
        share = Share(
            share_id=new_id("shr"),
            post_id=post_id,
            actor_id=actor.user_id,
            target_discussion_id=target_discussion_id,
            created_at=self.clock.now(),
        )
        return self.store.add_share(share, post.author_id)

    # --- chat -------------------------------------------------------------------

    def send_chat(
        self, actor: User, recipient_id: str, body: str
    ) -> tuple[ChatMessage, InteractionEvent]:
        if self.store.get_user(recipient_id) is None:
            raise UnknownRecipient(recipient_id)
        if not body:
            raise EmptyMessage()
        if len(body) > MAX_CHAT_CHARS:
            raise FieldTooLarge(f"chat message exceeds {MAX_CHAT_CHARS} chars")
        message = ChatMessage(
            message_id=new_id("msg"),
            sender_id=actor.user_id,
            recipient_id=recipient_id,
            body=body,
            created_at=self.clock.now(),
        )
        return self.store.add_chat_message(message)

    # --- profiles ------------------------------------------------------------------

    def customize_profile(self, actor: User, patch: ProfilePatch) -> tuple[User, InteractionEvent]:
        if patch.bio is not None and len(patch.bio) > MAX_BIO_CHARS:
            raise FieldTooLarge(f"bio exceeds {MAX_BIO_CHARS} chars")
        current = actor.profile
        profile = ProfileCustomization(
            bio=patch.bio if patch.bio is not None else current.bio,
            avatar_ref=patch.avatar.attachment_id if patch.avatar else current.avatar_ref,
            banner_ref=patch.banner.attachment_id if patch.banner else current.banner_ref,
        )
        return self.store.update_profile(actor.user_id, profile, self.clock.now())

    def attachment_for_profile(self, spec: AttachmentSpec) -> Attachment:
        kind = self._build_attachment(spec)
        return kind

    # --- moderation / administration ---------------------------------------------------

    def hide_post(self, actor: User, post_id: str, hidden: bool = True) -> Post:
        """Mask a post's content without touching the ledger."""
        if actor.role is not Role.MODERATOR:
            raise NotModerator("only moderators may hide posts")
        if self.store.get_post(post_id) is None:
            raise UnknownPost(post_id)
        return self.store.set_post_hidden(post_id, hidden)

    def assign_moderator(self, admin_id: str, acting_user: User, user_id: str) -> User:
        """Bootstrap-administrator action: promote a user to Moderator.
        Demotion is unsupported; communities must never lose their
        moderators."""
        if acting_user.user_id != admin_id:
            raise NotAdministrator("only the bootstrap administrator assigns roles")
        user = self.store.get_user(user_id)
        if user is None:
            raise UnknownUser(user_id)
        return self.store.set_role(user_id, Role.MODERATOR)

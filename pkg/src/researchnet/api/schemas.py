"""Request bodies. Validation here is shape-only; domain rules (sizes,
roles, uniqueness) stay in the services so every entry point shares them."""

from __future__ import annotations

from pydantic import BaseModel


class RegisterBody(BaseModel):
    handle: str
    secret: str
    display_name: str = ""
    terms_version: str | None = None


class AuthBody(BaseModel):
    handle: str
    secret: str


class AttachmentBody(BaseModel):
    kind: str
    content_ref: str
    size_bytes: int
    declared_media_type: str = ""


class UserPatchBody(BaseModel):
    bio: str | None = None
    avatar: AttachmentBody | None = None
    banner: AttachmentBody | None = None
    role: str | None = None  # administrator-only promotion


class CommunityBody(BaseModel):
    title: str
    description: str = ""


class DiscussionBody(BaseModel):
    title: str


class PostBody(BaseModel):
    body: str = ""
    attachment: AttachmentBody | None = None


class CommentBody(BaseModel):
    body: str


class ShareBody(BaseModel):
    target_discussion_id: str | None = None


class ChatBody(BaseModel):
    body: str


class SurveyBody(BaseModel):
    question: str
    options: list[str]
    closes_at: str | None = None  # ISO timestamp


class AnswerBody(BaseModel):
    option_index: int


class HideBody(BaseModel):
    hidden: bool = True


class GrantBody(BaseModel):
    user_id: str
    term_document: str

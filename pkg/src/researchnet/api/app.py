"""HTTP facade over the platform.

Every route except registration, sign-in, and the public terms document
requires a bearer token. Mutations that append a ledger event return a
`gamification` block carrying the XP total and the feedback the event
produced, so clients can toast rewards without a second request.
Responses over a kilobyte compress when the client accepts gzip.
"""

from __future__ import annotations

from datetime import datetime

from fastapi import Depends, FastAPI, Query, Request
from fastapi.responses import JSONResponse, StreamingResponse
from fastapi.security import HTTPAuthorizationCredentials, HTTPBearer
from starlette.middleware.gzip import GZipMiddleware

from ..domain.models import ProfilePatch, User
from ..domain.service import AttachmentSpec
from ..errors import (
    InvalidRange,
    NotAdministrator,
    NotAuthenticated,
    PlatformError,
    UnknownCommunity,
    UnknownDiscussion,
    UnknownPost,
    UnknownSurvey,
    UnknownUser,
)
from ..events import InteractionEvent
from ..gamification.engine import leaderboard
from ..platform import Platform
from ..research.graph import graph_metrics, normalize_kinds
from ..research.service import parse_time_range
from .fields import parse_fields, select_fields, validate_fields
from .pagination import DEFAULT_LIMIT, Page, page_of, paginate
from .schemas import (
    AnswerBody,
    AuthBody,
    ChatBody,
    CommentBody,
    CommunityBody,
    DiscussionBody,
    GrantBody,
    HideBody,
    PostBody,
    RegisterBody,
    ShareBody,
    SurveyBody,
    UserPatchBody,
)
from .serialize import (
    chat_json,
    comment_json,
    community_json,
    discussion_json,
    gamification_json,
    grant_json,
    metrics_json,
    post_json,
    progress_card_json,
    results_json,
    share_json,
    survey_json,
    user_json,
)

USER_FIELDS = frozenset({
    "id", "handle", "display_name", "role", "bio", "avatar_ref", "banner_ref",
    "terms_version", "created_at",
})
COMMUNITY_FIELDS = frozenset({"id", "title", "description", "moderator_ids", "created_at"})
DISCUSSION_FIELDS = frozenset({"id", "community_id", "title", "creator_id", "created_at"})
FEED_FIELDS = frozenset({
    "id", "kind", "discussion_id", "author_id", "body", "attachment", "hidden",
    "post_id", "actor_id", "target_discussion_id", "created_at",
})
COMMENT_FIELDS = frozenset({"id", "post_id", "author_id", "body", "created_at"})
CHAT_FIELDS = frozenset({"id", "sender_id", "recipient_id", "body", "created_at"})
LEADERBOARD_FIELDS = frozenset({"rank", "user_id", "handle", "display_name", "xp", "level"})

_bearer = HTTPBearer(auto_error=False)


def create_app(platform: Platform) -> FastAPI:
    app = FastAPI(title="researchnet", docs_url=None, redoc_url=None)
    app.add_middleware(GZipMiddleware, minimum_size=1024)
    app.state.platform = platform
    store = platform.store
    config = platform.config

    @app.exception_handler(PlatformError)
    async def platform_error(request: Request, exc: PlatformError):
        headers = {"WWW-Authenticate": "Bearer"} if exc.http_status == 401 else None
        return JSONResponse(
            status_code=exc.http_status,
            content={"error": exc.code, "detail": exc.detail},
            headers=headers,
        )

    def current_user(
        credentials: HTTPAuthorizationCredentials | None = Depends(_bearer),
    ) -> User:
        if credentials is None:
            raise NotAuthenticated("bearer token required")
        return platform.user_for_token(credentials.credentials)

    def reward_block(event: InteractionEvent) -> dict:
        state = platform.projection.state_of(event.actor_id)
        feedback = platform.projection.feedback_for(event.event_id)
        return gamification_json(state, feedback, config.gamification)

    def page_json(page: Page) -> dict:
        return {
            "items": page.items,
            "next_cursor": page.next_cursor,
            "snapshot_event_id": page.snapshot_event_id,
        }

    # --- public -----------------------------------------------------------

    @app.get("/terms")
    def get_terms():
        return {"version": config.terms_version, "document": config.terms_document}

    @app.post("/users", status_code=201)
    def register(body: RegisterBody):
        user, event = platform.register(
            handle=body.handle,
            display_name=body.display_name,
            secret=body.secret,
            terms_version=body.terms_version,
        )
        return {"user": user_json(user), "gamification": reward_block(event)}

    @app.post("/auth")
    def sign_in(body: AuthBody):
        user, session = platform.authenticate(body.handle, body.secret)
        return {
            "token": session.token,
            "expires_at": session.expires_at.isoformat(),
            "user": user_json(user),
        }

    # --- users --------------------------------------------------------------

    @app.get("/users/{user_id}")
    def get_user(user_id: str, fields: str | None = None, user: User = Depends(current_user)):
        target = store.get_user(user_id)
        if target is None:
            raise UnknownUser(user_id)
        requested = parse_fields(fields)
        validate_fields(requested, USER_FIELDS, "user")
        return select_fields(user_json(target), requested)

    @app.patch("/users/{user_id}")
    def patch_user(user_id: str, body: UserPatchBody, user: User = Depends(current_user)):
        if body.role is not None:
            promoted = platform.domain.assign_moderator(platform.admin_id, user, user_id)
            return {"user": user_json(promoted)}
        if user.user_id != user_id:
            raise NotAdministrator("profiles are editable only by their owner")
        patch = ProfilePatch(
            bio=body.bio,
            avatar=platform.domain.attachment_for_profile(
                AttachmentSpec(**body.avatar.model_dump())
            ) if body.avatar else None,
            banner=platform.domain.attachment_for_profile(
                AttachmentSpec(**body.banner.model_dump())
            ) if body.banner else None,
        )
        updated, event = platform.domain.customize_profile(user, patch)
        return {"user": user_json(updated), "gamification": reward_block(event)}

    # --- communities ------------------------------------------------------------

    @app.post("/communities", status_code=201)
    def create_community(body: CommunityBody, user: User = Depends(current_user)):
        community, event = platform.domain.create_community(user, body.title, body.description)
        return {"community": community_json(community), "gamification": reward_block(event)}

    @app.get("/communities")
    def list_communities(
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        requested = parse_fields(fields)
        validate_fields(requested, COMMUNITY_FIELDS, "community")
        rows = [
            (c.seq, select_fields(community_json(c), requested))
            for c in store.list_communities()
        ]
        page = paginate(rows, limit, cursor, store.snapshot_event_id(), newest_first=False)
        return page_json(page)

    @app.get("/communities/{community_id}")
    def get_community(community_id: str, user: User = Depends(current_user)):
        community = store.get_community(community_id)
        if community is None:
            raise UnknownCommunity(community_id)
        return {"community": community_json(community)}

    @app.post("/communities/{community_id}/discussions", status_code=201)
    def create_discussion(
        community_id: str, body: DiscussionBody, user: User = Depends(current_user)
    ):
        discussion, event = platform.domain.create_discussion(user, community_id, body.title)
        return {"discussion": discussion_json(discussion), "gamification": reward_block(event)}

    @app.get("/communities/{community_id}/discussions")
    def list_discussions(
        community_id: str,
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        if store.get_community(community_id) is None:
            raise UnknownCommunity(community_id)
        requested = parse_fields(fields)
        validate_fields(requested, DISCUSSION_FIELDS, "discussion")
        rows = [
            (d.seq, select_fields(discussion_json(d), requested))
            for d in store.list_discussions(community_id)
        ]
        page = paginate(rows, limit, cursor, store.snapshot_event_id(), newest_first=False)
        return page_json(page)

    # --- discussions and posts ----------------------------------------------------

    @app.get("/discussions/{discussion_id}")
    def get_discussion(discussion_id: str, user: User = Depends(current_user)):
        discussion = store.get_discussion(discussion_id)
        if discussion is None:
            raise UnknownDiscussion(discussion_id)
        return {"discussion": discussion_json(discussion)}

    @app.get("/discussions/{discussion_id}/posts")
    def discussion_feed(
        discussion_id: str,
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        """The feed merges original posts and shares aimed at this
        discussion, newest first."""
        if store.get_discussion(discussion_id) is None:
            raise UnknownDiscussion(discussion_id)
        requested = parse_fields(fields)
        validate_fields(requested, FEED_FIELDS, "feed item")
        rows = [
            (p.seq, select_fields(post_json(p), requested))
            for p in store.list_posts(discussion_id)
        ] + [
            (s.seq, select_fields(share_json(s), requested))
            for s in store.list_shares(discussion_id)
        ]
        page = paginate(rows, limit, cursor, store.snapshot_event_id(), newest_first=True)
        return page_json(page)

    @app.post("/discussions/{discussion_id}/posts", status_code=201)
    def create_post(discussion_id: str, body: PostBody, user: User = Depends(current_user)):
        attachment = AttachmentSpec(**body.attachment.model_dump()) if body.attachment else None
        post, event = platform.domain.create_post(user, discussion_id, body.body, attachment)
        return {"post": post_json(post), "gamification": reward_block(event)}

    @app.get("/posts/{post_id}")
    def get_post(post_id: str, user: User = Depends(current_user)):
        post = store.get_post(post_id)
        if post is None:
            raise UnknownPost(post_id)
        return {"post": post_json(post)}

    @app.post("/posts/{post_id}/likes", status_code=201)
    def like_post(post_id: str, user: User = Depends(current_user)):
        event = platform.domain.like(user, post_id)
        return {"post_id": post_id, "gamification": reward_block(event)}

    @app.post("/posts/{post_id}/comments", status_code=201)
    def comment_on_post(post_id: str, body: CommentBody, user: User = Depends(current_user)):
        comment, event = platform.domain.comment(user, post_id, body.body)
        return {"comment": comment_json(comment), "gamification": reward_block(event)}

    @app.get("/posts/{post_id}/comments")
    def list_comments(
        post_id: str,
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        if store.get_post(post_id) is None:
            raise UnknownPost(post_id)
        requested = parse_fields(fields)
        validate_fields(requested, COMMENT_FIELDS, "comment")
        rows = [
            (c.seq, select_fields(comment_json(c), requested))
            for c in store.list_comments(post_id)
        ]
        page = paginate(rows, limit, cursor, store.snapshot_event_id(), newest_first=False)
        return page_json(page)

    @app.post("/posts/{post_id}/shares", status_code=201)
    def share_post(post_id: str, body: ShareBody, user: User = Depends(current_user)):
        share, event = platform.domain.share(user, post_id, body.target_discussion_id)
        return {"share": share_json(share), "gamification": reward_block(event)}

    @app.post("/posts/{post_id}/hide")
    def hide_post(post_id: str, body: HideBody, user: User = Depends(current_user)):
        post = platform.domain.hide_post(user, post_id, body.hidden)
        return {"post": post_json(post)}

    # --- chat ------------------------------------------------------------------------

    @app.post("/chats/{user_id}/messages", status_code=201)
    def send_message(user_id: str, body: ChatBody, user: User = Depends(current_user)):
        message, event = platform.domain.send_chat(user, user_id, body.body)
        return {"message": chat_json(message), "gamification": reward_block(event)}

    @app.get("/chats/{user_id}")
    def conversation(
        user_id: str,
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        if store.get_user(user_id) is None:
            raise UnknownUser(user_id)
        requested = parse_fields(fields)
        validate_fields(requested, CHAT_FIELDS, "message")
        rows = [
            (m.seq, select_fields(chat_json(m), requested))
            for m in store.conversation(user.user_id, user_id)
        ]
        page = paginate(rows, limit, cursor, store.snapshot_event_id(), newest_first=False)
        return page_json(page)

    # --- surveys ---------------------------------------------------------------------

    @app.post("/communities/{community_id}/surveys", status_code=201)
    def create_survey(community_id: str, body: SurveyBody, user: User = Depends(current_user)):
        closes_at = None
        if body.closes_at is not None:
            try:
                closes_at = datetime.fromisoformat(body.closes_at)
            except ValueError:
                raise InvalidRange(f"bad closes_at timestamp {body.closes_at!r}") from None
        survey = platform.surveys.create_survey(
            user, community_id, body.question, body.options, closes_at
        )
        return {"survey": survey_json(survey)}

    @app.get("/communities/{community_id}/surveys")
    def list_surveys(community_id: str, user: User = Depends(current_user)):
        if store.get_community(community_id) is None:
            raise UnknownCommunity(community_id)
        return {"items": [survey_json(s) for s in store.list_surveys(community_id)]}

    @app.get("/surveys/{survey_id}")
    def get_survey(survey_id: str, user: User = Depends(current_user)):
        survey = store.get_survey(survey_id)
        if survey is None:
            raise UnknownSurvey(survey_id)
        return {"survey": survey_json(survey)}

    @app.post("/surveys/{survey_id}/answers", status_code=201)
    def answer_survey(survey_id: str, body: AnswerBody, user: User = Depends(current_user)):
        """Record the answer and return the refreshed aggregate plus the
        reward feedback: one round trip updates the whole widget."""
        response, event = platform.surveys.answer_survey(user, survey_id, body.option_index)
        return {
            "response": {
                "survey_id": response.survey_id,
                "respondent_id": response.respondent_id,
                "option_index": response.option_index,
                "answered_at": response.answered_at.isoformat(),
            },
            "results": results_json(platform.surveys.survey_results(survey_id)),
            "gamification": reward_block(event),
        }

    @app.get("/surveys/{survey_id}/results")
    def survey_results(survey_id: str, user: User = Depends(current_user)):
        return {"results": results_json(platform.surveys.survey_results(survey_id))}

    @app.post("/surveys/{survey_id}/close")
    def close_survey(survey_id: str, user: User = Depends(current_user)):
        survey = platform.surveys.close_survey(user, survey_id)
        return {"survey": survey_json(survey)}

    # --- gamification ------------------------------------------------------------------

    @app.get("/gamification/me")
    def my_progress(user: User = Depends(current_user)):
        state = platform.projection.state_of(user.user_id)
        return progress_card_json(state, config.gamification)

    @app.get("/leaderboard")
    def get_leaderboard(
        limit: int = DEFAULT_LIMIT,
        cursor: str | None = None,
        fields: str | None = None,
        user: User = Depends(current_user),
    ):
        requested = parse_fields(fields)
        validate_fields(requested, LEADERBOARD_FIELDS, "leaderboard row")

        def ranked_at(snapshot: int) -> list[dict]:
            states = platform.projection.states_at(snapshot)
            if not states:
                return []
            rows = leaderboard(states, top_n=len(states))
            out = []
            for position, row in enumerate(rows, start=1):
                member = store.get_user(row.user_id)
                out.append(select_fields({
                    "rank": position,
                    "user_id": row.user_id,
                    "handle": member.handle if member else row.user_id,
                    "display_name": member.display_name if member else row.user_id,
                    "xp": row.total_xp,
                    "level": row.level,
                }, requested))
            return out

        page = page_of(ranked_at, limit, cursor, store.snapshot_event_id())
        return page_json(page)

    # --- research -------------------------------------------------------------------------

    @app.post("/research/grants", status_code=201)
    def issue_grant(body: GrantBody, user: User = Depends(current_user)):
        grant = platform.research.grant_researcher(user, body.user_id, body.term_document)
        return {"grant": grant_json(grant)}

    @app.delete("/research/grants/{user_id}")
    def revoke_grant(user_id: str, user: User = Depends(current_user)):
        grant = platform.research.revoke_grant(user, user_id)
        return {"grant": grant_json(grant)}

    @app.get("/research/export/events")
    def export_events(
        range_: str | None = Query(default=None, alias="range"),
        user: User = Depends(current_user),
    ):
        time_range = parse_time_range(range_) if range_ else None
        lines = platform.research.export_events(user, time_range)
        first = next(lines)  # run the grant check before streaming starts

        def stream():
            yield first + "\n"
            for line in lines:
                yield line + "\n"

        return StreamingResponse(stream(), media_type="application/x-ndjson")

    @app.get("/research/export/users")
    def export_users(user: User = Depends(current_user)):
        lines = platform.research.export_users(user)
        first = next(lines)

        def stream():
            yield first + "\n"
            for line in lines:
                yield line + "\n"

        return StreamingResponse(stream(), media_type="text/csv")

    @app.get("/research/export/graph")
    def export_graph(
        kinds: str | None = Query(default=None),
        user: User = Depends(current_user),
    ):
        wanted = normalize_kinds(kinds.split(",")) if kinds else None
        lines = (
            platform.research.export_graph(user, wanted)
            if wanted is not None
            else platform.research.export_graph(user)
        )
        first = next(lines)

        def stream():
            yield first + "\n"
            for line in lines:
                yield line + "\n"

        return StreamingResponse(stream(), media_type="text/plain")

    @app.get("/research/metrics")
    def research_metrics(
        kinds: str | None = Query(default=None),
        post_id: str | None = Query(default=None),
        user: User = Depends(current_user),
    ):
        if post_id is not None:
            score = platform.research.interaction_success(user, post_id)
            return {"post_id": post_id, "interaction_success": score}
        wanted = normalize_kinds(kinds.split(",")) if kinds else None
        graph = (
            platform.research.graph_snapshot(user, wanted)
            if wanted is not None
            else platform.research.graph_snapshot(user)
        )
        return metrics_json(graph_metrics(graph), graph.kinds, graph.snapshot_event_id)

    return app

"""Wire representations of domain objects.

Hidden posts keep their row (ids, authorship, timestamps) but their
content is masked for everyone; the ledger under them is untouched.
"""

from __future__ import annotations

from datetime import datetime

from ..domain.models import (
    Attachment,
    ChatMessage,
    Comment,
    Community,
    Discussion,
    Post,
    Share,
    User,
)
from ..gamification.config import GamificationConfig
from ..gamification.engine import (
    FeedbackEvent,
    FeedbackKind,
    GamificationState,
    LEVEL_CAP,
    medals_of,
    threshold,
)
from ..research.grants import ResearcherGrant
from ..research.graph import GraphMetrics
from ..surveys.models import Survey, SurveyResults


def _iso(moment: datetime | None) -> str | None:
    return moment.isoformat() if moment else None


def user_json(user: User) -> dict:
    return {
        "id": user.user_id,
        "handle": user.handle,
        "display_name": user.display_name,
        "role": user.role.value,
        "bio": user.profile.bio,
        "avatar_ref": user.profile.avatar_ref,
        "banner_ref": user.profile.banner_ref,
        "terms_version": user.terms_version,
        "created_at": _iso(user.created_at),
    }


def community_json(community: Community) -> dict:
    return {
        "id": community.community_id,
        "title": community.title,
        "description": community.description,
        "moderator_ids": sorted(community.moderator_ids),
        "created_at": _iso(community.created_at),
    }


def discussion_json(discussion: Discussion) -> dict:
    return {
        "id": discussion.discussion_id,
        "community_id": discussion.community_id,
        "title": discussion.title,
        "creator_id": discussion.creator_id,
        "created_at": _iso(discussion.created_at),
    }


def attachment_json(attachment: Attachment | None) -> dict | None:
    if attachment is None:
        return None
    return {
        "id": attachment.attachment_id,
        "kind": attachment.kind.value,
        "content_ref": attachment.content_ref,
        "size_bytes": attachment.size_bytes,
        "declared_media_type": attachment.declared_media_type,
    }


def post_json(post: Post) -> dict:
    masked = post.hidden
    return {
        "id": post.post_id,
        "kind": "post",
        "discussion_id": post.discussion_id,
        "author_id": post.author_id,
        "body": "" if masked else post.body,
        "attachment": None if masked else attachment_json(post.attachment),
        "hidden": post.hidden,
        "created_at": _iso(post.created_at),
    }


def comment_json(comment: Comment) -> dict:
    return {
        "id": comment.comment_id,
        "post_id": comment.post_id,
        "author_id": comment.author_id,
        "body": comment.body,
        "created_at": _iso(comment.created_at),
    }


def share_json(share: Share) -> dict:
    return {
        "id": share.share_id,
        "kind": "share",
        "post_id": share.post_id,
        "actor_id": share.actor_id,
        "target_discussion_id": share.target_discussion_id,
        "created_at": _iso(share.created_at),
    }


def chat_json(message: ChatMessage) -> dict:
    return {
        "id": message.message_id,
        "sender_id": message.sender_id,
        "recipient_id": message.recipient_id,
        "body": message.body,
        "created_at": _iso(message.created_at),
    }


def survey_json(survey: Survey) -> dict:
    return {
        "id": survey.survey_id,
        "community_id": survey.community_id,
        "creator_id": survey.creator_id,
        "question": survey.question,
        "options": list(survey.options),
        "opens_at": _iso(survey.opens_at),
        "closes_at": _iso(survey.closes_at),
        "status": survey.status.value,
    }


def results_json(results: SurveyResults) -> dict:
    return {
        "survey_id": results.survey_id,
        "counts": list(results.counts),
        "fractions": list(results.fractions),
        "total_respondents": results.total_respondents,
    }


def grant_json(grant: ResearcherGrant) -> dict:
    return {
        "user_id": grant.user_id,
        "term_doc_hash": grant.term_doc_hash,
        "signed_at": _iso(grant.signed_at),
        "granted_by": grant.granted_by,
        "active": grant.active,
    }


def feedback_json(feedback: FeedbackEvent, config: GamificationConfig) -> dict:
    record = {"kind": feedback.kind.value, "value": feedback.payload}
    if feedback.kind is FeedbackKind.MEDAL_UNLOCKED:
        record["medal_name"] = config.medal_names[feedback.payload - 1]
    return record


def gamification_json(
    state: GamificationState,
    feedback: list[FeedbackEvent],
    config: GamificationConfig,
) -> dict:
    return {
        "xp": state.total_xp,
        "level": state.level,
        "feedback": [feedback_json(fb, config) for fb in feedback],
    }


def progress_card_json(state: GamificationState, config: GamificationConfig) -> dict:
    """Everything a profile widget needs to draw the level bar without
    re-deriving the progression math client-side."""
    base = config.base_xp
    floor = threshold(state.level, base) if state.level >= 1 else 0
    at_cap = state.level >= LEVEL_CAP
    ceiling = None if at_cap else threshold(state.level + 1, base)
    return {
        "user_id": state.user_id,
        "xp": state.total_xp,
        "level": state.level,
        "level_floor_xp": floor,
        "next_level_xp": ceiling,
        "xp_into_level": state.total_xp - floor,
        "level_span": None if at_cap else ceiling - floor,
        "medals": [
            {"index": award.index, "name": award.name}
            for award in medals_of(state, config)
        ],
        "missions": [
            {
                "mission_id": mission_id,
                "count": progress.count,
                "granted": progress.granted,
                "window_start": _iso(progress.window_start),
            }
            for mission_id, progress in sorted(dict(state.mission_progress).items())
        ],
    }


def metrics_json(metrics: GraphMetrics, kinds: frozenset, snapshot_event_id: int) -> dict:
    return {
        "node_count": metrics.node_count,
        "edge_count": metrics.edge_count,
        "density": metrics.density,
        "degree_centralization": metrics.degree_centralization,
        "weakly_connected_components": metrics.weakly_connected_components,
        "kinds": sorted(k.value for k in kinds),
        "snapshot_event_id": snapshot_event_id,
        "degree_stats": {
            user_id: {
                "in_degree": stats.in_degree,
                "out_degree": stats.out_degree,
                "total_degree": stats.total_degree,
            }
            for user_id, stats in sorted(metrics.degree_stats.items())
        },
    }

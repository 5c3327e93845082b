"""Community-scoped multiple-choice surveys.

One immutable response per user; aggregates are public, raw pairs flow
only through the research export. Answering feeds the reward engine via
the survey_answer ledger event.
"""

from __future__ import annotations

from datetime import datetime

from ..clock import Clock
from ..domain.models import MAX_SURVEY_QUESTION_CHARS, User
from ..errors import (
    AlreadyClosed,
    BadOptionCount,
    DuplicateOptions,
    FieldTooLarge,
    NotCommunityModerator,
    OptionOutOfRange,
    SurveyClosed,
    UnknownCommunity,
    UnknownSurvey,
)
from ..events import InteractionEvent
from ..ids import new_id
from ..storage.base import Store
from .models import (
    MAX_OPTIONS,
    MIN_OPTIONS,
    Survey,
    SurveyResponse,
    SurveyResults,
    SurveyStatus,
)


class SurveyService:
    def __init__(self, store: Store, clock: Clock):
        self.store = store
        self.clock = clock

    def _require_community_moderator(self, actor: User, community_id: str):
        community = self.store.get_community(community_id)
        if community is None:
            raise UnknownCommunity(community_id)
        if actor.user_id not in community.moderator_ids:
            raise NotCommunityModerator(
                f"{actor.handle} does not moderate {community.title!r}"
            )
        return community

    def create_survey(
        self,
        actor: User,
        community_id: str,
        question: str,
        options: list[str],
        closes_at: datetime | None = None,
    ) -> Survey:
        self._require_community_moderator(actor, community_id)
        if not MIN_OPTIONS <= len(options) <= MAX_OPTIONS:
            raise BadOptionCount(f"got {len(options)} options, need {MIN_OPTIONS}..{MAX_OPTIONS}")
        if len(set(options)) != len(options):
            raise DuplicateOptions()
        if len(question) > MAX_SURVEY_QUESTION_CHARS:
            raise FieldTooLarge(f"question exceeds {MAX_SURVEY_QUESTION_CHARS} chars")
        survey = Survey(
            survey_id=new_id("srv"),
            community_id=community_id,
            creator_id=actor.user_id,
            question=question,
            options=tuple(options),
            opens_at=self.clock.now(),
            closes_at=closes_at,
            status=SurveyStatus.OPEN,
        )
        return self.store.add_survey(survey)

    def answer_survey(
        self, actor: User, survey_id: str, option_index: int
    ) -> tuple[SurveyResponse, InteractionEvent]:
        survey = self.store.get_survey(survey_id)
        if survey is None:
            raise UnknownSurvey(survey_id)
        now = self.clock.now()
        if survey.status is SurveyStatus.CLOSED or (
            survey.closes_at is not None and now >= survey.closes_at
        ):
            raise SurveyClosed(survey_id)
        if not 0 <= option_index < len(survey.options):
            raise OptionOutOfRange(
                f"index {option_index} outside 0..{len(survey.options) - 1}"
            )
        response = SurveyResponse(
            survey_id=survey_id,
            respondent_id=actor.user_id,
            option_index=option_index,
            answered_at=now,
        )
        return self.store.add_survey_response(response, survey.creator_id)

    def survey_results(self, survey_id: str) -> SurveyResults:
        survey = self.store.get_survey(survey_id)
        if survey is None:
            raise UnknownSurvey(survey_id)
        counts = [0] * len(survey.options)
        for response in self.store.list_responses(survey_id):
            counts[response.option_index] += 1
        total = sum(counts)
        fractions = tuple(c / total if total else 0.0 for c in counts)
        return SurveyResults(
            survey_id=survey_id,
            counts=tuple(counts),
            fractions=fractions,
            total_respondents=total,
        )

    def close_survey(self, actor: User, survey_id: str) -> Survey:
        survey = self.store.get_survey(survey_id)
        if survey is None:
            raise UnknownSurvey(survey_id)
        self._require_community_moderator(actor, survey.community_id)
        if survey.status is SurveyStatus.CLOSED:
            raise AlreadyClosed(survey_id)
        return self.store.set_survey_status(survey_id, SurveyStatus.CLOSED)

"""Survey entities: multiple-choice questions with predefined answers."""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import datetime
from enum import Enum

MIN_OPTIONS = 2
MAX_OPTIONS = 10


class SurveyStatus(str, Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Survey:
    survey_id: str
    community_id: str
    creator_id: str
    question: str
    options: tuple[str, ...]
    opens_at: datetime
    closes_at: datetime | None
    status: SurveyStatus

    def with_status(self, status: SurveyStatus) -> "Survey":
        return replace(self, status=status)


@dataclass(frozen=True)
class SurveyResponse:
    survey_id: str
    respondent_id: str
    option_index: int
    answered_at: datetime


@dataclass(frozen=True)
class SurveyResults:
    """Aggregate view: one (count, fraction) pair per option, in option
    order. Fractions are 0 when nobody has answered."""

    survey_id: str
    counts: tuple[int, ...]
    fractions: tuple[float, ...]
    total_respondents: int

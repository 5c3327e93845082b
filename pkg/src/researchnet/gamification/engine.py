"""Event-sourced reward engine.

Everything here is a pure function of (state, event, config): the engine
holds no storage and no clock, so replaying the ledger from scratch and
folding events incrementally produce identical states.

Level progression: the XP needed to go from level k-1 to k is
B*(2k-1) — an arithmetic progression with common difference 2B, where B
is the configured base. The cumulative requirement telescopes to
T(n) = B*n^2, so a user's level is floor(sqrt(total_xp / B)), capped at
nine. Each level unlocks exactly one medal; a capped user holds all nine
while XP keeps accumulating for the rankings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from datetime import timedelta
from enum import Enum
from typing import Iterable, Mapping, NamedTuple

from ..errors import LevelOutOfRange, OutOfOrderEvent
from ..events import InteractionEvent
from .config import LEVEL_CAP, GamificationConfig, Mission


def level_increment(level: int, base_xp: int) -> int:
    """XP added by the step from level-1 to level: B*(2k-1)."""
    if not 1 <= level <= LEVEL_CAP:
        raise LevelOutOfRange(f"level {level} outside 1..{LEVEL_CAP}")
    return base_xp * (2 * level - 1)


def threshold(level: int, base_xp: int) -> int:
    """Cumulative XP required to hold a level: T(n) = B*n^2."""
    if not 1 <= level <= LEVEL_CAP:
        raise LevelOutOfRange(f"level {level} outside 1..{LEVEL_CAP}")
    return base_xp * level * level


def level_for_xp(total_xp: int, base_xp: int) -> int:
    """Largest level whose threshold is within total_xp, capped at nine.

    Integer arithmetic throughout: floor(sqrt(xp/B)) == isqrt(xp // B)
    because squaring and flooring commute for non-negative integers.
    """
    if total_xp < 0:
        raise ValueError("total_xp must be non-negative")
    return min(LEVEL_CAP, math.isqrt(total_xp // base_xp))


@dataclass(frozen=True)
class MissionProgress:
    window_start: object  # datetime; anchored at the first qualifying event
    count: int
    granted: bool


@dataclass(frozen=True)
class GamificationState:
    user_id: str
    total_xp: int = 0
    level: int = 0
    medals: frozenset = frozenset()
    mission_progress: Mapping[str, MissionProgress] = field(default_factory=dict)
    last_event_id: int = 0
    # event at which total_xp last changed; leaderboard ties go to the
    # user who reached the score first
    xp_reached_event_id: int = 0

    def __eq__(self, other):
        if not isinstance(other, GamificationState):
            return NotImplemented
        return (
            self.user_id == other.user_id
            and self.total_xp == other.total_xp
            and self.level == other.level
            and self.medals == other.medals
            and dict(self.mission_progress) == dict(other.mission_progress)
            and self.last_event_id == other.last_event_id
            and self.xp_reached_event_id == other.xp_reached_event_id
        )


class FeedbackKind(str, Enum):
    XP_GAINED = "xp_gained"
    LEVEL_UP = "level_up"
    MEDAL_UNLOCKED = "medal_unlocked"
    MISSION_COMPLETED = "mission_completed"


@dataclass(frozen=True)
class FeedbackEvent:
    kind: FeedbackKind
    user_id: str
    payload: object  # amount / new level / medal index / mission_id
    caused_by: int


def initial_state(user_id: str) -> GamificationState:
    return GamificationState(user_id=user_id)


def record_action(
    state: GamificationState,
    event: InteractionEvent,
    config: GamificationConfig,
) -> tuple[GamificationState, list[FeedbackEvent]]:
    """Apply one ledger event to one user's state.

    Feedback ordering is fixed so the result is deterministic: the XP
    gain (suppressed when zero), completed missions in config order, then
    a level_up/medal_unlocked pair per level climbed, ascending.
    """
    if event.event_id <= state.last_event_id:
        raise OutOfOrderEvent(
            f"event {event.event_id} not after state at {state.last_event_id}"
        )

    gained = config.points_for(event.verb)
    progress = dict(state.mission_progress)
    completed: list[str] = []

    for mission in config.missions:
        if mission.verb != event.verb:
            continue
        current = progress.get(mission.mission_id)
        window = timedelta(days=mission.window_days)
        if current is None or event.occurred_at >= current.window_start + window:
            current = MissionProgress(window_start=event.occurred_at, count=0, granted=False)
        count = current.count + 1
        granted = current.granted
        if count >= mission.required_count and not granted:
            gained += mission.bonus_xp
            completed.append(mission.mission_id)
            granted = True
        progress[mission.mission_id] = MissionProgress(current.window_start, count, granted)

    new_xp = state.total_xp + gained
    new_level = level_for_xp(new_xp, config.base_xp)

    feedback: list[FeedbackEvent] = []
    if gained > 0:
        feedback.append(FeedbackEvent(FeedbackKind.XP_GAINED, state.user_id, gained, event.event_id))
    for mission_id in completed:
        feedback.append(
            FeedbackEvent(FeedbackKind.MISSION_COMPLETED, state.user_id, mission_id, event.event_id)
        )
    for level in range(state.level + 1, new_level + 1):
        feedback.append(FeedbackEvent(FeedbackKind.LEVEL_UP, state.user_id, level, event.event_id))
        feedback.append(
            FeedbackEvent(FeedbackKind.MEDAL_UNLOCKED, state.user_id, level, event.event_id)
        )

    new_state = GamificationState(
        user_id=state.user_id,
        total_xp=new_xp,
        level=new_level,
        medals=frozenset(range(1, new_level + 1)),
        mission_progress=progress,
        last_event_id=event.event_id,
        xp_reached_event_id=event.event_id if gained > 0 else state.xp_reached_event_id,
    )
    return new_state, feedback


def replay(
    events: Iterable[InteractionEvent], config: GamificationConfig
) -> dict[str, GamificationState]:
    """Fold the ledger from empty states. The determinism oracle: the
    result must match any incrementally maintained projection."""
    states: dict[str, GamificationState] = {}
    last_id = 0
    for event in events:
        if event.event_id <= last_id:
            raise OutOfOrderEvent(f"ledger not in event order at {event.event_id}")
        last_id = event.event_id
        state = states.get(event.actor_id) or initial_state(event.actor_id)
        states[event.actor_id], _ = record_action(state, event, config)
    return states


class MedalAward(NamedTuple):
    index: int
    name: str


def medals_of(state: GamificationState, config: GamificationConfig) -> list[MedalAward]:
    """Medals currently held, in unlock order; never more than nine."""
    return [
        MedalAward(index, config.medal_names[index - 1])
        for index in range(1, state.level + 1)
    ]


class LeaderboardRow(NamedTuple):
    user_id: str
    total_xp: int
    level: int


def leaderboard(
    states: Mapping[str, GamificationState] | Iterable[GamificationState],
    top_n: int,
) -> list[LeaderboardRow]:
    """Rank users by XP. Ties go to whoever reached the score at the
    earlier ledger position, then to the lexically smaller user id."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    values = states.values() if isinstance(states, Mapping) else states
    ranked = sorted(values, key=lambda s: (-s.total_xp, s.xp_reached_event_id, s.user_id))
    return [LeaderboardRow(s.user_id, s.total_xp, s.level) for s in ranked[:top_n]]

"""Reward engine configuration.

Action point values live here rather than in code so a study can
re-weight behaviours without redeploying. The level cap is fixed at
nine: one medal per level, nine medals total.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import yaml

from ..errors import BadGamificationConfig
from ..events import Verb

LEVEL_CAP = 9

DEFAULT_BASE_XP = 10

DEFAULT_ACTION_POINTS: Mapping[Verb, int] = MappingProxyType({
    Verb.POST: 10,
    Verb.CREATE_DISCUSSION: 8,
    Verb.SURVEY_ANSWER: 5,
    Verb.SHARE: 3,
    Verb.COMMENT: 2,
    Verb.LIKE: 1,
    Verb.CHAT: 0,
    Verb.REGISTER: 0,
    Verb.CREATE_COMMUNITY: 0,
    Verb.PROFILE_UPDATE: 0,
})

DEFAULT_MEDAL_NAMES = (
    "Newcomer",
    "Participant",
    "Contributor",
    "Communicator",
    "Collaborator",
    "Organizer",
    "Mentor",
    "Luminary",
    "Legend",
)


@dataclass(frozen=True)
class Mission:
    """A counted-action engagement loop: do `verb` `required_count` times
    inside a rolling window and earn `bonus_xp`, at most once per window."""

    mission_id: str
    verb: Verb
    required_count: int
    window_days: int
    bonus_xp: int


DEFAULT_MISSIONS = (
    Mission("survey-hat-trick", Verb.SURVEY_ANSWER, required_count=3, window_days=7, bonus_xp=15),
    Mission("weekly-author", Verb.POST, required_count=5, window_days=7, bonus_xp=25),
)


@dataclass(frozen=True)
class GamificationConfig:
    base_xp: int = DEFAULT_BASE_XP
    action_points: Mapping[Verb, int] = field(default_factory=lambda: DEFAULT_ACTION_POINTS)
    missions: tuple[Mission, ...] = DEFAULT_MISSIONS
    medal_names: tuple[str, ...] = DEFAULT_MEDAL_NAMES

    def __post_init__(self):
        if self.base_xp < 1:
            raise BadGamificationConfig("base_xp must be >= 1")
        if len(self.medal_names) != LEVEL_CAP:
            raise BadGamificationConfig(f"exactly {LEVEL_CAP} medal names required")
        for points in self.action_points.values():
            if points < 0:
                raise BadGamificationConfig("action points must be non-negative")
        for m in self.missions:
            if m.required_count < 1 or m.window_days < 1 or m.bonus_xp < 1:
                raise BadGamificationConfig(f"mission {m.mission_id}: counts must be >= 1")

    def points_for(self, verb: Verb) -> int:
        return self.action_points.get(verb, 0)


def load_config(path: str | Path) -> GamificationConfig:
    """Read a YAML config document; absent keys keep their defaults."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}

    points = dict(DEFAULT_ACTION_POINTS)
    for name, value in (raw.get("action_points") or {}).items():
        try:
            points[Verb(name)] = int(value)
        except ValueError:
            raise BadGamificationConfig(f"unknown action verb {name!r}") from None

    missions = []
    for entry in raw.get("missions") or []:
        try:
            missions.append(Mission(
                mission_id=str(entry["id"]),
                verb=Verb(entry["verb"]),
                required_count=int(entry["required_count"]),
                window_days=int(entry["window_days"]),
                bonus_xp=int(entry["bonus_xp"]),
            ))
        except (KeyError, ValueError) as exc:
            raise BadGamificationConfig(f"bad mission entry: {exc}") from None

    medal_names = raw.get("medal_names")

    return GamificationConfig(
        base_xp=int(raw.get("base_xp", DEFAULT_BASE_XP)),
        action_points=MappingProxyType(points),
        missions=tuple(missions) if "missions" in raw else DEFAULT_MISSIONS,
        medal_names=tuple(str(n) for n in medal_names) if medal_names else DEFAULT_MEDAL_NAMES,
    )

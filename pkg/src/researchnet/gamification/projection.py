"""Incrementally maintained gamification states.

The projection folds ledger events through the pure engine as they
appear. Because the engine is deterministic, the projection is always
byte-equal to a cold replay of the same prefix; the acceptance suite
holds it to that.
"""

from __future__ import annotations

import threading
from collections import OrderedDict

from ..storage.base import Store
from .config import GamificationConfig
from .engine import (
    FeedbackEvent,
    GamificationState,
    initial_state,
    record_action,
    replay,
)

FEEDBACK_BUFFER = 1024


class GamificationProjection:
    def __init__(self, store: Store, config: GamificationConfig):
        self.store = store
        self.config = config
        self._states: dict[str, GamificationState] = {}
        self._last_event_id = 0
        self._recent_feedback: OrderedDict[int, list[FeedbackEvent]] = OrderedDict()
        self._lock = threading.Lock()

    def catch_up(self) -> None:
        """Fold any ledger events appended since the last call."""
        with self._lock:
            for event in self.store.events(after_id=self._last_event_id):
                state = self._states.get(event.actor_id) or initial_state(event.actor_id)
                self._states[event.actor_id], feedback = record_action(
                    state, event, self.config
                )
                self._recent_feedback[event.event_id] = feedback
                while len(self._recent_feedback) > FEEDBACK_BUFFER:
                    self._recent_feedback.popitem(last=False)
                self._last_event_id = event.event_id

    @property
    def last_event_id(self) -> int:
        return self._last_event_id

    def state_of(self, user_id: str) -> GamificationState:
        self.catch_up()
        with self._lock:
            return self._states.get(user_id) or initial_state(user_id)

    def states(self) -> dict[str, GamificationState]:
        self.catch_up()
        with self._lock:
            return dict(self._states)

    def feedback_for(self, event_id: int) -> list[FeedbackEvent]:
        """Feedback produced by one ledger event (level-ups, medals,
        mission completions) for surfacing in the triggering response."""
        self.catch_up()
        with self._lock:
            return list(self._recent_feedback.get(event_id, []))

    def states_at(self, snapshot_event_id: int) -> dict[str, GamificationState]:
        """States as of a past ledger position, via cold replay. Used for
        snapshot-bounded leaderboard pages."""
        return replay(self.store.events(up_to=snapshot_event_id), self.config)

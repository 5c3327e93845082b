"""Reward engine tests.

Expected values for the progression math come from walk_thresholds(),
which sums the per-level increments term by term and never touches the
closed form the engine uses.
"""

import random
from datetime import datetime, timedelta, timezone

import pytest

from researchnet.errors import LevelOutOfRange, OutOfOrderEvent
from researchnet.events import InteractionEvent, Verb
from researchnet.gamification.config import (
    DEFAULT_ACTION_POINTS,
    GamificationConfig,
    Mission,
)
from researchnet.gamification.engine import (
    FeedbackEvent,
    FeedbackKind,
    GamificationState,
    LeaderboardRow,
    initial_state,
    leaderboard,
    level_for_xp,
    level_increment,
    medals_of,
    record_action,
    replay,
    threshold,
)

from eventgen import random_log

T0 = datetime(2026, 1, 1, tzinfo=timezone.utc)


def walk_thresholds(base):
    """Independent oracle: cumulative XP per level, summed term by term."""
    totals = []
    running = 0
    for level in range(1, 10):
        running += base * (2 * level - 1)
        totals.append(running)
    return totals


def oracle_level(total_xp, base):
    level = 0
    for i, needed in enumerate(walk_thresholds(base), start=1):
        if total_xp >= needed:
            level = i
    return level


def make_event(event_id, actor="u1", verb=Verb.POST, at=T0, obj="p1", owner="u1"):
    return InteractionEvent(event_id, actor, verb, obj, owner, at)


# --- thresholds ------------------------------------------------------------


def test_threshold_first_level_equals_base():
    assert threshold(1, 10) == 10


def test_threshold_level_three_matches_term_sum():
    # oracle: 10 + 30 + 50
    assert walk_thresholds(10)[2] == 90
    assert threshold(3, 10) == 90


def test_threshold_level_nine_matches_term_sum():
    assert walk_thresholds(10)[8] == 810
    assert threshold(9, 10) == 810


@pytest.mark.parametrize("base", [1, 5, 10, 37])
def test_closed_form_equals_walked_sum_everywhere(base):
    walked = walk_thresholds(base)
    for level in range(1, 10):
        assert threshold(level, base) == walked[level - 1]


@pytest.mark.parametrize("base", [1, 5, 10])
def test_increments_form_arithmetic_progression(base):
    for level in range(1, 9):
        assert level_increment(level + 1, base) - level_increment(level, base) == 2 * base


def test_threshold_rejects_out_of_range_levels():
    with pytest.raises(LevelOutOfRange):
        threshold(0, 10)
    with pytest.raises(LevelOutOfRange):
        threshold(10, 10)


# --- level_for_xp -----------------------------------------------------------


def test_level_for_zero_xp_is_zero():
    assert level_for_xp(0, 10) == 0


def test_level_for_xp_below_third_threshold():
    # thresholds walk 10, 40, 90; 89 clears two of them
    assert oracle_level(89, 10) == 2
    assert level_for_xp(89, 10) == 2


def test_level_caps_at_nine():
    assert level_for_xp(10_000, 10) == 9


@pytest.mark.parametrize("base", [1, 5, 10])
def test_level_matches_walking_oracle_exhaustively(base):
    for xp in range(0, 2001):
        assert level_for_xp(xp, base) == oracle_level(xp, base), (xp, base)


def test_level_is_monotone_in_xp():
    previous = 0
    for xp in range(0, 1200):
        level = level_for_xp(xp, 10)
        assert level >= previous
        previous = level


# --- record_action ------------------------------------------------------------


def no_mission_config(base=10):
    return GamificationConfig(base_xp=base, missions=())


def test_post_crossing_first_threshold_unlocks_medal():
    config = no_mission_config()
    state = GamificationState(user_id="u1", total_xp=8, level=0, last_event_id=1)
    new_state, feedback = record_action(state, make_event(2), config)
    assert new_state.total_xp == 18
    assert new_state.level == 1
    assert new_state.medals == frozenset({1})
    assert feedback == [
        FeedbackEvent(FeedbackKind.XP_GAINED, "u1", 10, 2),
        FeedbackEvent(FeedbackKind.LEVEL_UP, "u1", 1, 2),
        FeedbackEvent(FeedbackKind.MEDAL_UNLOCKED, "u1", 1, 2),
    ]


def test_zero_point_action_emits_no_feedback():
    config = no_mission_config()
    state = GamificationState(user_id="u1", total_xp=5, last_event_id=3, xp_reached_event_id=2)
    new_state, feedback = record_action(state, make_event(4, verb=Verb.CHAT), config)
    assert new_state.total_xp == 5
    assert feedback == []
    # zero gain must not move the tie-break marker
    assert new_state.xp_reached_event_id == 2


def test_out_of_order_event_rejected():
    config = no_mission_config()
    state = GamificationState(user_id="u1", last_event_id=7)
    with pytest.raises(OutOfOrderEvent):
        record_action(state, make_event(7), config)


def test_mission_bonus_granted_once_per_window():
    mission = Mission("hat-trick", Verb.SURVEY_ANSWER, required_count=3, window_days=7, bonus_xp=15)
    config = GamificationConfig(base_xp=10, missions=(mission,))
    state = initial_state("u1")
    times = [T0, T0 + timedelta(days=1), T0 + timedelta(days=2), T0 + timedelta(days=3)]
    gains = []
    for i, at in enumerate(times, start=1):
        event = make_event(i, verb=Verb.SURVEY_ANSWER, at=at, obj="s1", owner="mod")
        state, feedback = record_action(state, event, config)
        gains.append([f for f in feedback if f.kind is FeedbackKind.XP_GAINED])
    # third answer inside the window carries 5 + 15; fourth is plain again
    assert gains[0][0].payload == 5
    assert gains[1][0].payload == 5
    assert gains[2][0].payload == 20
    assert gains[3][0].payload == 5
    assert state.total_xp == 5 + 5 + 20 + 5


def test_mission_completion_feedback_emitted():
    mission = Mission("hat-trick", Verb.SURVEY_ANSWER, required_count=2, window_days=7, bonus_xp=9)
    config = GamificationConfig(base_xp=10, missions=(mission,))
    state = initial_state("u1")
    state, _ = record_action(state, make_event(1, verb=Verb.SURVEY_ANSWER), config)
    state, feedback = record_action(
        state, make_event(2, verb=Verb.SURVEY_ANSWER, at=T0 + timedelta(days=1)), config
    )
    kinds = [f.kind for f in feedback]
    assert FeedbackKind.MISSION_COMPLETED in kinds
    completed = [f for f in feedback if f.kind is FeedbackKind.MISSION_COMPLETED]
    assert completed[0].payload == "hat-trick"


def test_mission_window_reopens_after_expiry():
    mission = Mission("pair", Verb.POST, required_count=2, window_days=2, bonus_xp=7)
    config = GamificationConfig(base_xp=10, missions=(mission,))
    state = initial_state("u1")
    # two posts complete the mission; a third far later opens a new window
    state, _ = record_action(state, make_event(1, at=T0), config)
    state, f2 = record_action(state, make_event(2, at=T0 + timedelta(days=1)), config)
    assert any(f.kind is FeedbackKind.MISSION_COMPLETED for f in f2)
    state, f3 = record_action(state, make_event(3, at=T0 + timedelta(days=10)), config)
    assert not any(f.kind is FeedbackKind.MISSION_COMPLETED for f in f3)
    state, f4 = record_action(state, make_event(4, at=T0 + timedelta(days=11)), config)
    assert any(f.kind is FeedbackKind.MISSION_COMPLETED for f in f4)
    assert state.total_xp == 4 * 10 + 2 * 7


def test_every_level_up_pairs_with_its_medal():
    # one huge bonus jumps several levels at once
    mission = Mission("jackpot", Verb.POST, required_count=1, window_days=1, bonus_xp=400)
    config = GamificationConfig(base_xp=10, missions=(mission,))
    state, feedback = record_action(initial_state("u1"), make_event(1), config)
    ups = [f.payload for f in feedback if f.kind is FeedbackKind.LEVEL_UP]
    medals = [f.payload for f in feedback if f.kind is FeedbackKind.MEDAL_UNLOCKED]
    assert ups == medals == list(range(1, state.level + 1))
    assert state.level == level_for_xp(410, 10)


# --- replay ---------------------------------------------------------------------


def test_replay_empty_log_gives_empty_map():
    assert replay([], no_mission_config()) == {}


def test_replay_single_post():
    states = replay([make_event(1)], no_mission_config())
    assert set(states) == {"u1"}
    state = states["u1"]
    assert state.total_xp == 10
    assert state.level == 1
    assert state.medals == frozenset({1})


def test_replay_rejects_out_of_order_log():
    events = [make_event(2), make_event(1)]
    with pytest.raises(OutOfOrderEvent):
        replay(events, no_mission_config())


def test_replay_equals_incremental_fold():
    rng = random.Random(1234)
    config = GamificationConfig(
        base_xp=10,
        missions=(
            Mission("m-survey", Verb.SURVEY_ANSWER, 3, 7, 15),
            Mission("m-post", Verb.POST, 5, 7, 25),
        ),
    )
    events = random_log(rng, n_events=1200, n_users=50)
    incremental = {}
    for event in events:
        state = incremental.get(event.actor_id) or initial_state(event.actor_id)
        incremental[event.actor_id], _ = record_action(state, event, config)
    assert replay(events, config) == incremental


def test_xp_and_level_never_decrease_over_random_log():
    rng = random.Random(99)
    config = GamificationConfig(base_xp=5)
    states = {}
    for event in random_log(rng, n_events=400, n_users=10):
        before = states.get(event.actor_id) or initial_state(event.actor_id)
        after, _ = record_action(before, event, config)
        assert after.total_xp >= before.total_xp
        assert after.level >= before.level
        assert after.medals == frozenset(range(1, after.level + 1))
        assert len(after.medals) <= 9
        states[event.actor_id] = after


# --- medals ------------------------------------------------------------------------


def test_no_medals_at_level_zero():
    config = no_mission_config()
    assert medals_of(initial_state("u1"), config) == []


def test_medals_track_level_exactly():
    config = no_mission_config()
    state = GamificationState(
        user_id="u1", total_xp=threshold(4, 10), level=4, medals=frozenset({1, 2, 3, 4})
    )
    awarded = medals_of(state, config)
    assert [m.index for m in awarded] == [1, 2, 3, 4]
    assert [m.name for m in awarded] == list(config.medal_names[:4])


def test_all_nine_medals_at_cap():
    config = no_mission_config()
    state = GamificationState(user_id="u1", total_xp=9000, level=9, medals=frozenset(range(1, 10)))
    assert len(medals_of(state, config)) == 9


# --- leaderboard ---------------------------------------------------------------------


def state_with(user_id, xp, reached, level=0):
    return GamificationState(
        user_id=user_id, total_xp=xp, level=level, xp_reached_event_id=reached
    )


def test_leaderboard_orders_by_xp():
    states = {"a": state_with("a", 50, 3), "b": state_with("b", 90, 5)}
    rows = leaderboard(states, 2)
    assert [r.user_id for r in rows] == ["b", "a"]


def test_leaderboard_breaks_ties_by_reach_time_then_id():
    states = {
        "b": state_with("b", 40, 9),
        "a": state_with("a", 40, 7),
        "c": state_with("c", 40, 9),
    }
    rows = leaderboard(states, 3)
    assert [r.user_id for r in rows] == ["a", "b", "c"]


def test_leaderboard_handles_top_n_beyond_population():
    states = {"a": state_with("a", 10, 1)}
    rows = leaderboard(states, 50)
    assert rows == [LeaderboardRow("a", 10, 0)]


def test_leaderboard_is_deterministic_across_calls():
    rng = random.Random(7)
    config = GamificationConfig(base_xp=10)
    states = replay(random_log(rng, 300, 20), config)
    assert leaderboard(states, 20) == leaderboard(states, 20)

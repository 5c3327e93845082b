"""Interaction graph construction and metrics, checked on hand-sized
shapes where every number is computable on paper."""

from __future__ import annotations

from datetime import datetime, timedelta, timezone

import pytest

from researchnet.errors import UnknownKind
from researchnet.events import GRAPH_VERBS, InteractionEvent, Verb
from researchnet.research.graph import (
    build_graph,
    graph_metrics,
    interaction_success,
    normalize_kinds,
)

T0 = datetime(2026, 1, 1, tzinfo=timezone.utc)


def make_events(triples):
    """triples: (actor, verb, owner); object ids are synthetic."""
    return [
        InteractionEvent(
            event_id=i + 1,
            actor_id=actor,
            verb=verb,
            object_id=f"obj{i}",
            object_owner_id=owner,
            occurred_at=T0 + timedelta(minutes=i),
        )
        for i, (actor, verb, owner) in enumerate(triples)
    ]


def complete_triangle():
    pairs = [("a", "b"), ("b", "a"), ("a", "c"), ("c", "a"), ("b", "c"), ("c", "b")]
    return make_events([(src, Verb.LIKE, dst) for src, dst in pairs])


def star(leaves):
    events = []
    for leaf in leaves:
        events.append((leaf, Verb.COMMENT, "hub"))
    return make_events(events)


# --- construction -----------------------------------------------------------


def test_empty_ledger_builds_empty_graph():
    graph = build_graph([])
    metrics = graph_metrics(graph)
    assert graph.nodes == frozenset()
    assert metrics.node_count == 0
    assert metrics.edge_count == 0
    assert metrics.density == 0.0
    assert metrics.degree_centralization == 0.0
    assert metrics.weakly_connected_components == 0


def test_edges_are_directed_and_weighted():
    events = make_events([
        ("a", Verb.LIKE, "b"),
        ("a", Verb.COMMENT, "b"),
        ("b", Verb.SHARE, "a"),
    ])
    graph = build_graph(events)
    assert graph.edges == {("a", "b"): 2, ("b", "a"): 1}
    assert graph.directed is True


def test_self_interactions_never_form_edges():
    events = make_events([
        ("a", Verb.LIKE, "a"),     # self-like: no edge
        ("a", Verb.COMMENT, "b"),
    ])
    graph = build_graph(events)
    assert ("a", "a") not in graph.edges
    assert graph.edges == {("a", "b"): 1}


def test_non_interaction_verbs_are_ignored():
    events = make_events([
        ("a", Verb.REGISTER, None),
        ("a", Verb.POST, "a"),
        ("a", Verb.SURVEY_ANSWER, "b"),  # not an edge-forming kind
        ("a", Verb.CHAT, "b"),
    ])
    graph = build_graph(events)
    assert graph.edges == {("a", "b"): 1}
    assert graph.kinds == GRAPH_VERBS


def test_kind_filter_restricts_edges():
    events = make_events([
        ("a", Verb.LIKE, "b"),
        ("a", Verb.CHAT, "c"),
    ])
    graph = build_graph(events, interaction_kinds=[Verb.CHAT])
    assert graph.edges == {("a", "c"): 1}


def test_normalize_kinds_rejects_non_interaction_verbs():
    assert normalize_kinds(["like", "chat"]) == frozenset({Verb.LIKE, Verb.CHAT})
    with pytest.raises(UnknownKind):
        normalize_kinds(["post"])
    with pytest.raises(UnknownKind):
        normalize_kinds(["telepathy"])


# --- metrics on canonical shapes ---------------------------------------------


def test_complete_triangle_metrics():
    metrics = graph_metrics(build_graph(complete_triangle()))
    assert metrics.node_count == 3
    assert metrics.edge_count == 6          # both directions of each pair
    assert metrics.density == 1.0           # 6 / (3*2)
    assert metrics.degree_centralization == 0.0  # regular graph
    assert metrics.weakly_connected_components == 1


def test_four_cycle_centralization_is_zero():
    pairs = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    metrics = graph_metrics(build_graph(make_events([(s, Verb.LIKE, d) for s, d in pairs])))
    assert metrics.node_count == 4
    assert metrics.degree_centralization == 0.0  # every node has degree 2


def test_star_with_four_nodes_has_centralization_one():
    metrics = graph_metrics(build_graph(star(["l1", "l2", "l3"])))
    assert metrics.node_count == 4
    assert metrics.degree_centralization == 1.0
    stats = metrics.degree_stats
    assert stats["hub"].in_degree == 3
    assert stats["hub"].out_degree == 0
    assert stats["hub"].total_degree == 3
    assert all(stats[leaf].total_degree == 1 for leaf in ["l1", "l2", "l3"])


def test_component_count_over_disconnected_islands():
    events = make_events([
        ("a", Verb.LIKE, "b"),
        ("c", Verb.LIKE, "d"),
        ("e", Verb.COMMENT, "f"),
    ])
    metrics = graph_metrics(build_graph(events))
    assert metrics.weakly_connected_components == 3
    assert metrics.density == pytest.approx(3 / (6 * 5))


def test_density_of_two_node_graph():
    events = make_events([("a", Verb.LIKE, "b")])
    metrics = graph_metrics(build_graph(events))
    assert metrics.density == pytest.approx(0.5)  # 1 edge of 2 possible
    assert metrics.degree_centralization == 0.0   # undefined below 3 nodes


# --- interaction success ---------------------------------------------------------


def test_interaction_success_sums_weighted_reactions():
    post_id = "pst_1"
    events = [
        InteractionEvent(1, "a", Verb.LIKE, post_id, "o", T0),
        InteractionEvent(2, "b", Verb.COMMENT, post_id, "o", T0),
        InteractionEvent(3, "c", Verb.SHARE, post_id, "o", T0),
        InteractionEvent(4, "d", Verb.LIKE, "pst_other", "o", T0),
    ]
    assert interaction_success(post_id, events) == 3
    assert interaction_success(post_id, events, weights={Verb.LIKE: 1, Verb.COMMENT: 3, Verb.SHARE: 5}) == 9
    assert interaction_success("pst_unknown", events) == 0

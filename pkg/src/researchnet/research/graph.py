"""Interaction graph construction and the structural measures used to
characterize how centralized a network's activity is.

The graph is directed: an edge actor -> owner counts how often the actor
acted on the owner's content. Self-interactions are excluded so a user
cannot appear connected by liking their own posts. Density uses the
directed formula; centralization and components are computed on the
undirected projection and this is stated in the export metadata.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import UnknownKind
from ..events import GRAPH_VERBS, InteractionEvent, Verb


@dataclass(frozen=True)
class SocialGraph:
    nodes: frozenset[str]
    edges: Mapping[tuple[str, str], int]
    kinds: frozenset[Verb]
    snapshot_event_id: int = 0

    @property
    def directed(self) -> bool:
        return True


def normalize_kinds(kinds: Iterable[str | Verb]) -> frozenset[Verb]:
    result = set()
    for kind in kinds:
        try:
            verb = Verb(kind)
        except ValueError:
            raise UnknownKind(f"{kind!r} is not an interaction kind") from None
        if verb not in GRAPH_VERBS:
            raise UnknownKind(f"{verb.value!r} does not define graph edges")
        result.add(verb)
    return frozenset(result)


def build_graph(
    events: Iterable[InteractionEvent],
    interaction_kinds: Iterable[str | Verb] = GRAPH_VERBS,
    snapshot_event_id: int = 0,
) -> SocialGraph:
    kinds = normalize_kinds(interaction_kinds)
    weights: Counter = Counter()
    for event in events:
        if event.verb not in kinds:
            continue
        owner = event.object_owner_id
        if owner is None or owner == event.actor_id:
            continue
        weights[(event.actor_id, owner)] += 1
    nodes = frozenset(endpoint for edge in weights for endpoint in edge)
    return SocialGraph(
        nodes=nodes,
        edges=dict(weights),
        kinds=kinds,
        snapshot_event_id=snapshot_event_id,
    )


@dataclass(frozen=True)
class DegreeStats:
    in_degree: int      # distinct incoming edges
    out_degree: int     # distinct outgoing edges
    total_degree: int   # distinct neighbours in the undirected projection


@dataclass(frozen=True)
class GraphMetrics:
    node_count: int
    edge_count: int
    density: float
    degree_stats: Mapping[str, DegreeStats]
    degree_centralization: float
    weakly_connected_components: int


def _undirected_adjacency(graph: SocialGraph) -> dict[str, set[str]]:
    adjacency: dict[str, set[str]] = {node: set() for node in graph.nodes}
    for src, dst in graph.edges:
        adjacency[src].add(dst)
        adjacency[dst].add(src)
    return adjacency


def _component_count(adjacency: dict[str, set[str]]) -> int:
    seen: set[str] = set()
    components = 0
    for start in adjacency:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            for neighbour in adjacency[node]:
                if neighbour not in seen:
                    seen.add(neighbour)
                    stack.append(neighbour)
    return components


def graph_metrics(graph: SocialGraph) -> GraphMetrics:
    """Density, per-node degrees, Freeman degree centralization, and the
    weak component count.

    Centralization is sum(d_max - d_v) / ((n-1)(n-2)) over undirected
    projection degrees: 0 for regular graphs, 1 for a star, which makes
    it a direct measure of how decentralized the interaction network is.
    """
    n = len(graph.nodes)
    edge_count = len(graph.edges)
    density = edge_count / (n * (n - 1)) if n >= 2 else 0.0

    adjacency = _undirected_adjacency(graph)
    in_deg: Counter = Counter()
    out_deg: Counter = Counter()
    for src, dst in graph.edges:
        out_deg[src] += 1
        in_deg[dst] += 1

    stats = {
        node: DegreeStats(
            in_degree=in_deg[node],
            out_degree=out_deg[node],
            total_degree=len(adjacency[node]),
        )
        for node in graph.nodes
    }

    if n >= 3:
        degrees = [len(adjacency[node]) for node in graph.nodes]
        d_max = max(degrees)
        centralization = sum(d_max - d for d in degrees) / ((n - 1) * (n - 2))
    else:
        centralization = 0.0

    return GraphMetrics(
        node_count=n,
        edge_count=edge_count,
        density=density,
        degree_stats=stats,
        degree_centralization=centralization,
        weakly_connected_components=_component_count(adjacency) if n else 0,
    )


def interaction_success(
    post_id: str,
    events: Iterable[InteractionEvent],
    weights: Mapping[Verb, int] | None = None,
) -> int:
    """Engagement score for one post: likes + comments + shares that
    target it. Unweighted by default; weights are configurable."""
    scoring = weights or {Verb.LIKE: 1, Verb.COMMENT: 1, Verb.SHARE: 1}
    score = 0
    for event in events:
        if event.object_id == post_id and event.verb in scoring:
            score += scoring[event.verb]
    return score

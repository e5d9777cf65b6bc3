"""Retweet and co-retweeted networks, communities, and main actors.

Two different retweet notions meet here. Edges come from retweet records
actually observed in the story dataset (who retweeted whom), not from
the platform-reported counts used by the metrics. The co-retweeted
network links two authors when some third user retweeted both.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence, Union

from .models import TweetRecord


@dataclass(frozen=True)
class GraphNode:
    user_id: int
    screen_name: str
    verified: bool
    tweets_in_story: int


@dataclass(frozen=True)
class ActorRank:
    user_id: int
    screen_name: str
    distinct_retweeters: int
    retweet_events: int


@dataclass
class RetweetGraph:
    """Directed graph: retweeter → retweeted author, weighted by events."""

    nodes: dict[int, GraphNode] = field(default_factory=dict)
    edges: dict[tuple[int, int], int] = field(default_factory=dict)

    def retweeters_by_author(self) -> dict[int, set[int]]:
        sets: dict[int, set[int]] = defaultdict(set)
        for (src, dst) in self.edges:
            sets[dst].add(src)
        return sets

    def in_event_totals(self) -> dict[int, int]:
        totals: Counter = Counter()
        for (src, dst), w in self.edges.items():
            totals[dst] += w
        return dict(totals)

    def undirected_edges(self) -> dict[tuple[int, int], float]:
        merged: dict[tuple[int, int], float] = {}
        for (src, dst), w in self.edges.items():
            key = (src, dst) if src < dst else (dst, src)
            merged[key] = merged.get(key, 0.0) + w
        return merged

    def node_ids(self) -> list[int]:
        return sorted(self.nodes)


@dataclass
class CoRetweetedGraph:
    """Undirected graph over authors sharing at least one retweeter."""

    nodes: dict[int, GraphNode] = field(default_factory=dict)
    edges: dict[tuple[int, int], int] = field(default_factory=dict)

    def undirected_edges(self) -> dict[tuple[int, int], float]:
        return {pair: float(w) for pair, w in self.edges.items()}

    def node_ids(self) -> list[int]:
        return sorted(self.nodes)


Graph = Union[RetweetGraph, CoRetweetedGraph]


@dataclass(frozen=True)
class CommunityAssignment:
    assignment: dict[int, int]
    modularity_value: float


def build_retweet_graph(
    tweets: Sequence[TweetRecord],
    originals_by_id: Mapping[int, TweetRecord],
) -> RetweetGraph:
    """Build the who-retweeted-whom graph from the story dataset.

    Every author in the story becomes a node; each retweet record adds one
    event to the (retweeter → original author) edge. Retweets whose
    original cannot be resolved, and self-retweets, add no edge.
    """
    graph = RetweetGraph()
    story_counts: Counter = Counter()
    authors: dict[int, TweetRecord] = {}
    for t in tweets:
        story_counts[t.author.user_id] += 1
        authors.setdefault(t.author.user_id, t)

    edge_weights: Counter = Counter()
    extra_authors: dict[int, TweetRecord] = {}
    for t in tweets:
        if not t.is_retweet:
            continue
        original = originals_by_id.get(t.retweet_of)
        if original is None:
            continue
        src = t.author.user_id
        dst = original.author.user_id
        if src == dst:
            continue
        edge_weights[(src, dst)] += 1
        if dst not in authors:
            extra_authors.setdefault(dst, original)

    for uid, rec in sorted({**authors, **extra_authors}.items()):
        graph.nodes[uid] = GraphNode(
            user_id=uid,
            screen_name=rec.author.screen_name,
            verified=rec.author.verified,
            tweets_in_story=story_counts.get(uid, 0),
        )
    graph.edges = dict(sorted(edge_weights.items()))
    return graph


def build_coretweeted_graph(rt: RetweetGraph) -> CoRetweetedGraph:
    """Link every author pair retweeted by a common user.

    Edge weight counts the distinct third users, so a weight-1 edge means
    exactly one account propagated both endpoints.
    """
    retweeted_by: dict[int, set[int]] = defaultdict(set)
    for (src, dst) in rt.edges:
        retweeted_by[src].add(dst)

    weights: Counter = Counter()
    for src in sorted(retweeted_by):
        for a, b in combinations(sorted(retweeted_by[src]), 2):
            weights[(a, b)] += 1

    graph = CoRetweetedGraph()
    members = sorted({uid for pair in weights for uid in pair})
    graph.nodes = {uid: rt.nodes[uid] for uid in members if uid in rt.nodes}
    graph.edges = dict(sorted(weights.items()))
    return graph


def main_actors(rt: RetweetGraph, k: int) -> list[ActorRank]:
    """Top-k authors by distinct retweeters observed in the story."""
    if k < 1:
        raise ValueError("k must be positive")
    retweeters = rt.retweeters_by_author()
    events = rt.in_event_totals()
    ranked = sorted(
        retweeters,
        key=lambda uid: (-len(retweeters[uid]), -events.get(uid, 0), uid),
    )
    return [
        ActorRank(
            user_id=uid,
            screen_name=rt.nodes[uid].screen_name if uid in rt.nodes else "",
            distinct_retweeters=len(retweeters[uid]),
            retweet_events=events.get(uid, 0),
        )
        for uid in ranked[:k]
    ]


# --- community detection -------------------------------------------------
#
# Greedy modularity maximization with a fixed node visitation order
# (ascending user id) and a fixed tie-break (lowest community id), so the
# same graph always yields the same assignment.


def _modularity(
    adj: Mapping[int, Mapping[int, float]],
    self_loops: Mapping[int, float],
    assignment: Mapping[int, int],
) -> float:
    two_m = 0.0
    degree: dict[int, float] = {}
    for u in adj:
        degree[u] = sum(w for v, w in adj[u].items()) + 2.0 * self_loops.get(u, 0.0)
        two_m += degree[u]
    if two_m == 0:
        return 0.0
    internal: Counter = Counter()
    deg_sum: Counter = Counter()
    for u, c in assignment.items():
        deg_sum[c] += degree[u]
        internal[c] += self_loops.get(u, 0.0)
    for u in adj:
        for v, w in adj[u].items():
            if u < v and assignment[u] == assignment[v]:
                internal[assignment[u]] += w
    return sum(
        2.0 * internal[c] / two_m - (deg_sum[c] / two_m) ** 2 for c in deg_sum
    )


def _local_moves(
    order: list[int],
    adj: dict[int, dict[int, float]],
    self_loops: dict[int, float],
    two_m: float,
) -> tuple[dict[int, int], bool]:
    comm = {u: i for i, u in enumerate(order)}
    degree = {
        u: sum(adj[u].values()) + 2.0 * self_loops.get(u, 0.0) for u in order
    }
    sum_tot = {comm[u]: degree[u] for u in order}

    moved_any = False
    for _ in range(200):  # safety valve; converges long before this
        changed = False
        for u in order:
            cu = comm[u]
            links: dict[int, float] = defaultdict(float)
            for v, w in adj[u].items():
                links[comm[v]] += w
            sum_tot[cu] -= degree[u]
            stay_gain = links.get(cu, 0.0) - degree[u] * sum_tot[cu] / two_m
            best_c, best_gain = cu, stay_gain
            for c in sorted(links):
                gain = links[c] - degree[u] * sum_tot[c] / two_m
                if gain > best_gain + 1e-12 or (
                    abs(gain - best_gain) <= 1e-12 and c < best_c and gain > stay_gain + 1e-12
                ):
                    best_c, best_gain = c, gain
            comm[u] = best_c
            sum_tot[best_c] = sum_tot.get(best_c, 0.0) + degree[u]
            if best_c != cu:
                changed = moved_any = True
        if not changed:
            break
    return comm, moved_any


def detect_communities(graph: Graph, weighted: bool = True) -> CommunityAssignment:
    """Assign every node to a community and report achieved modularity.

    Deterministic by construction: identical graphs give identical
    assignments. Community ids are renumbered 0.. by each community's
    smallest member id.
    """
    node_ids = graph.node_ids()
    if not node_ids:
        raise ValueError("empty graph")

    adj: dict[int, dict[int, float]] = {u: {} for u in node_ids}
    for (u, v), w in sorted(graph.undirected_edges().items()):
        weight = float(w) if weighted else 1.0
        if u == v:
            continue
        adj.setdefault(u, {})[v] = adj.get(u, {}).get(v, 0.0) + weight
        adj.setdefault(v, {})[u] = adj.get(v, {}).get(u, 0.0) + weight

    base_assignment = _louvain(node_ids, adj)
    self_loops = {u: 0.0 for u in node_ids}
    value = _modularity(adj, self_loops, base_assignment)

    # Renumber communities by their smallest member for a stable labeling.
    groups: dict[int, list[int]] = defaultdict(list)
    for u in node_ids:
        groups[base_assignment[u]].append(u)
    relabel = {
        old: new
        for new, old in enumerate(sorted(groups, key=lambda c: min(groups[c])))
    }
    return CommunityAssignment(
        assignment={u: relabel[base_assignment[u]] for u in node_ids},
        modularity_value=value,
    )


def _louvain(node_ids: list[int], adj: dict[int, dict[int, float]]) -> dict[int, int]:
    two_m = sum(sum(nbrs.values()) for nbrs in adj.values())
    if two_m == 0:
        return {u: i for i, u in enumerate(node_ids)}

    # Level state: current super-graph plus the mapping from original
    # nodes to super-nodes.
    mapping = {u: u for u in node_ids}
    cur_nodes = list(node_ids)
    cur_adj = {u: dict(nbrs) for u, nbrs in adj.items()}
    cur_loops = {u: 0.0 for u in node_ids}

    while True:
        comm, moved = _local_moves(cur_nodes, cur_adj, cur_loops, two_m)
        if not moved:
            break
        # Aggregate communities into super-nodes with deterministic ids.
        new_ids = {c: i for i, c in enumerate(sorted(set(comm.values())))}
        mapping = {orig: new_ids[comm[mapping[orig]]] for orig in mapping}
        next_adj: dict[int, dict[int, float]] = {i: {} for i in new_ids.values()}
        next_loops = {i: 0.0 for i in new_ids.values()}
        for u in cur_nodes:
            cu = new_ids[comm[u]]
            next_loops[cu] += cur_loops.get(u, 0.0)
            for v, w in cur_adj[u].items():
                cv = new_ids[comm[v]]
                if cu == cv:
                    if u < v:
                        next_loops[cu] += w
                else:
                    next_adj[cu][cv] = next_adj[cu].get(cv, 0.0) + w
        cur_nodes = sorted(next_adj)
        cur_adj = next_adj
        cur_loops = next_loops
        if len(cur_nodes) == 1:
            break
    return dict(mapping)

"""End-to-end computation of one investigation's artifacts.

(corpus, config) → artifacts is a pure function: recomputing an
investigation always yields byte-identical serialized documents. All
tunables live in PipelineParams with the shipped defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import bursts, metrics as metrics_mod, networks, timeline as timeline_mod
from .corpus import Corpus, SearchWindow
from .models import InvestigationConfig, TweetRecord, format_utc
from .negation import NegationLexicon, split_story
from .relevance import RelevantSet, build_relevant_set, resolve_records
from .summary import InvestigationSummary, summarize

DATASET_KINDS = (
    "propagation",
    "timeline",
    "retweet_network",
    "coretweeted_network",
    "links",
    "summary",
    "metrics",
)

STATUS_OK = "ok"
STATUS_EMPTY = "empty_story"


@dataclass(frozen=True)
class PipelineParams:
    horizon_days: float = 9.0
    burst_threshold: float = bursts.BURST_THRESHOLD
    visibility_min: int = bursts.VISIBILITY_MIN
    similarity_threshold: float = bursts.SIMILARITY_THRESHOLD
    max_propagation_points: int = bursts.MAX_PROPAGATION_POINTS
    actors_k: int = 3
    spreading_ratio: float = 0.25


@dataclass
class StoryArtifacts:
    status: str
    relevant: RelevantSet
    records: list[TweetRecord] = field(default_factory=list)
    propagation: Optional[bursts.PropagationDataset] = None
    scores: list[bursts.BurstScore] = field(default_factory=list)
    timeline: list[timeline_mod.TimelineSeries] = field(default_factory=list)
    retweet_graph: Optional[networks.RetweetGraph] = None
    retweet_communities: Optional[networks.CommunityAssignment] = None
    coretweeted_graph: Optional[networks.CoRetweetedGraph] = None
    coretweeted_communities: Optional[networks.CommunityAssignment] = None
    actors: list[networks.ActorRank] = field(default_factory=list)
    bibliography: list[metrics_mod.LinkEntry] = field(default_factory=list)
    metrics: Optional[metrics_mod.StoryMetrics] = None
    summary: Optional[InvestigationSummary] = None


def run_pipeline(
    corpus: Corpus,
    config: InvestigationConfig,
    params: PipelineParams = PipelineParams(),
    window: Optional[SearchWindow] = None,
) -> StoryArtifacts:
    """Run every stage on the corpus under the given filter config.

    An empty relevant set short-circuits into an "empty story" result
    rather than an error, so a too-narrow refinement is easy to undo.
    """
    config.validate()
    if window is None:
        window = SearchWindow(horizon_days=params.horizon_days)

    relevant = build_relevant_set(corpus, config, window=window)
    if not relevant.tweet_ids:
        return StoryArtifacts(status=STATUS_EMPTY, relevant=relevant)

    records = resolve_records(corpus, relevant)
    lexicon = NegationLexicon.customized(
        added=config.negation_add, removed=config.negation_remove
    )
    negating_ids, _ = split_story(records, lexicon)

    intervals = bursts.bin_intervals(records)
    scores = bursts.burstiness(intervals)
    breaking_index = bursts.find_breaking_interval(scores, params.burst_threshold)
    propagation = bursts.build_propagation_dataset(
        records,
        intervals,
        breaking_index,
        max_points=params.max_propagation_points,
        similarity_threshold=params.similarity_threshold,
        visibility_min=params.visibility_min,
    )

    series = timeline_mod.build_timeline(records, lexicon, config.timeline_keywords)

    rt_graph = networks.build_retweet_graph(records, corpus.records)
    rt_comm = networks.detect_communities(rt_graph) if rt_graph.nodes else None
    co_graph = networks.build_coretweeted_graph(rt_graph)
    co_comm = networks.detect_communities(co_graph) if co_graph.nodes else None
    actors = networks.main_actors(rt_graph, params.actors_k)

    bibliography = metrics_mod.build_link_bibliography(records)
    story_metrics = metrics_mod.compute_metrics(records, negating_ids, config.category)

    summary = summarize(
        tweets=records,
        records_by_id=corpus.records,
        propagation=propagation,
        scores=scores,
        timeline=series,
        actors=actors,
        metrics=story_metrics,
        spreading_ratio=params.spreading_ratio,
    )

    return StoryArtifacts(
        status=STATUS_OK,
        relevant=relevant,
        records=records,
        propagation=propagation,
        scores=scores,
        timeline=series,
        retweet_graph=rt_graph,
        retweet_communities=rt_comm,
        coretweeted_graph=co_graph,
        coretweeted_communities=co_comm,
        actors=actors,
        bibliography=bibliography,
        metrics=story_metrics,
        summary=summary,
    )


# --- serialization --------------------------------------------------------


def canonical_json(doc) -> str:
    """Stable JSON encoding: sorted keys, no whitespace, UTF-8 text."""
    return json.dumps(doc, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def _interval_doc(iv) -> dict:
    return {
        "index": iv.index,
        "start": format_utc(iv.start),
        "end": format_utc(iv.end),
        "tweet_ids": list(iv.tweet_ids),
        "retweet_total": iv.retweet_total,
    }


def _propagation_doc(artifacts: StoryArtifacts) -> dict:
    prop = artifacts.propagation
    return {
        "breaking_interval": _interval_doc(prop.breaking_interval),
        "burst_scores": [
            {
                "index": s.index,
                "burstiness": s.burstiness,
                "retweet_total": s.retweet_total,
                "prev_total": s.prev_total,
            }
            for s in artifacts.scores
        ],
        "points": [
            {
                "tweet_id": p.tweet_id,
                "created_at": format_utc(p.created_at),
                "retweet_count": p.retweet_count,
                "followers_count": p.followers_count,
                "verified": p.verified,
                "color_class": p.color_class,
                "user_id": p.user_id,
                "screen_name": p.screen_name,
                "text": p.text,
            }
            for p in prop.points
        ],
        "originator": prop.originator,
    }


def _timeline_doc(artifacts: StoryArtifacts) -> dict:
    return {
        "series": [
            {
                "label": s.label,
                "bins": [{"start": format_utc(start), "count": count} for start, count in s.bins],
            }
            for s in artifacts.timeline
        ]
    }


def _graph_doc(graph, communities) -> dict:
    assignment = communities.assignment if communities else {}
    return {
        "nodes": [
            {
                "id": node.user_id,
                "screen_name": node.screen_name,
                "verified": node.verified,
                "tweets_in_story": node.tweets_in_story,
                "community": assignment.get(node.user_id),
            }
            for node in (graph.nodes[uid] for uid in graph.node_ids())
        ],
        "edges": [
            {"source": src, "target": dst, "weight": w}
            for (src, dst), w in sorted(graph.edges.items())
        ],
        "modularity": communities.modularity_value if communities else None,
    }


def _retweet_doc(artifacts: StoryArtifacts) -> dict:
    doc = _graph_doc(artifacts.retweet_graph, artifacts.retweet_communities)
    retweeters = artifacts.retweet_graph.retweeters_by_author()
    counts = {uid: len(s) for uid, s in retweeters.items()}
    for node in doc["nodes"]:
        node["distinct_retweeters"] = counts.get(node["id"], 0)
    doc["main_actors"] = [
        {
            "user_id": a.user_id,
            "screen_name": a.screen_name,
            "distinct_retweeters": a.distinct_retweeters,
            "retweet_events": a.retweet_events,
        }
        for a in artifacts.actors
    ]
    return doc


def _links_doc(artifacts: StoryArtifacts) -> dict:
    return {
        "entries": [
            {
                "canonical_url": e.canonical_url,
                "tweet_count": e.tweet_count,
                "distinct_user_count": e.distinct_user_count,
                "tweet_ids": list(e.tweet_ids),
            }
            for e in artifacts.bibliography
        ]
    }


def _summary_doc(artifacts: StoryArtifacts) -> dict:
    s = artifacts.summary
    return {
        "tweet_count": s.tweet_count,
        "originals_count": s.originals_count,
        "retweets_count": s.retweets_count,
        "originator": {
            "tweet_id": s.originator.tweet_id,
            "screen_name": s.originator.screen_name,
            "retweet_count": s.originator.retweet_count,
            "created_at": format_utc(s.originator.created_at),
        }
        if s.originator
        else None,
        "break_time": format_utc(s.break_time),
        "burst_strength": s.burst_strength,
        "still_spreading": s.still_spreading,
        "top_propagators": [
            {
                "user_id": a.user_id,
                "screen_name": a.screen_name,
                "distinct_retweeters": a.distinct_retweeters,
                "retweet_events": a.retweet_events,
            }
            for a in s.top_propagators
        ],
        "negation_present": s.negation_present,
        "first_negation_time": format_utc(s.first_negation_time)
        if s.first_negation_time
        else None,
        "metrics": s.metrics.to_document(),
        "headline_text": s.headline_text,
    }


def _relevant_doc(artifacts: StoryArtifacts) -> dict:
    return {
        "status": artifacts.status,
        "tweet_ids": list(artifacts.relevant.tweet_ids),
        "originals_count": artifacts.relevant.originals_count,
        "retweets_count": artifacts.relevant.retweets_count,
        "config": artifacts.relevant.config.to_document(),
    }


def artifact_documents(artifacts: StoryArtifacts) -> dict[str, dict]:
    """Serialize every dataset; empty stories get placeholder documents."""
    docs: dict[str, dict] = {"relevant": _relevant_doc(artifacts)}
    if artifacts.status != STATUS_OK:
        placeholder = {"status": artifacts.status}
        for kind in DATASET_KINDS:
            docs[kind] = dict(placeholder)
        return docs
    docs["propagation"] = _propagation_doc(artifacts)
    docs["timeline"] = _timeline_doc(artifacts)
    docs["retweet_network"] = _retweet_doc(artifacts)
    docs["coretweeted_network"] = _graph_doc(
        artifacts.coretweeted_graph, artifacts.coretweeted_communities
    )
    docs["links"] = _links_doc(artifacts)
    docs["summary"] = _summary_doc(artifacts)
    docs["metrics"] = artifacts.metrics.to_document()
    return docs

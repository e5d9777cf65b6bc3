"""Automated investigation report.

Pure recomposition of upstream results into the answers an investigator
wants first: who broke the story, when it burst, whether it is still
moving, who spread it, and how much doubt it drew.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime
from typing import Mapping, Optional, Sequence

from .bursts import BurstScore, PropagationDataset
from .metrics import INFINITE, StoryMetrics
from .models import TweetRecord, format_utc
from .networks import ActorRank
from .timeline import ALL_SERIES, NEGATION_SERIES, TimelineSeries

STILL_SPREADING_RATIO = 0.25


@dataclass(frozen=True)
class OriginatorInfo:
    tweet_id: int
    screen_name: str
    retweet_count: int
    created_at: datetime


@dataclass(frozen=True)
class InvestigationSummary:
    tweet_count: int
    originals_count: int
    retweets_count: int
    originator: Optional[OriginatorInfo]
    break_time: datetime
    burst_strength: float
    still_spreading: bool
    top_propagators: tuple[ActorRank, ...]
    negation_present: bool
    first_negation_time: Optional[datetime]
    metrics: StoryMetrics
    headline_text: str


def format_skepticism(value: float) -> str:
    if math.isinf(value):
        return INFINITE
    return f"{value:g}"


def _series(timeline: Sequence[TimelineSeries], label: str) -> TimelineSeries:
    for s in timeline:
        if s.label == label:
            return s
    raise ValueError(f"timeline is missing the {label!r} series")


def summarize(
    tweets: Sequence[TweetRecord],
    records_by_id: Mapping[int, TweetRecord],
    propagation: PropagationDataset,
    scores: Sequence[BurstScore],
    timeline: Sequence[TimelineSeries],
    actors: Sequence[ActorRank],
    metrics: StoryMetrics,
    spreading_ratio: float = STILL_SPREADING_RATIO,
) -> InvestigationSummary:
    """Assemble the report; no new analysis happens here."""
    originals = sum(1 for t in tweets if not t.is_retweet)

    originator = None
    if propagation.originator is not None:
        rec = records_by_id[propagation.originator]
        originator = OriginatorInfo(
            tweet_id=rec.tweet_id,
            screen_name=rec.author.screen_name,
            retweet_count=rec.retweet_count,
            created_at=rec.created_at,
        )

    break_index = propagation.breaking_interval.index
    burst_strength = next(s.burstiness for s in scores if s.index == break_index)

    all_series = _series(timeline, ALL_SERIES)
    peak = max(count for _, count in all_series.bins)
    last = all_series.bins[-1][1]
    still_spreading = peak > 0 and last >= spreading_ratio * peak

    neg_series = _series(timeline, NEGATION_SERIES)
    first_negation = next((start for start, count in neg_series.bins if count > 0), None)

    headline = _headline(
        tweet_count=len(tweets),
        originator=originator,
        break_time=propagation.breaking_interval.start,
        burst_strength=burst_strength,
        still_spreading=still_spreading,
        actors=actors,
        first_negation=first_negation,
        metrics=metrics,
    )
    return InvestigationSummary(
        tweet_count=len(tweets),
        originals_count=originals,
        retweets_count=len(tweets) - originals,
        originator=originator,
        break_time=propagation.breaking_interval.start,
        burst_strength=burst_strength,
        still_spreading=still_spreading,
        top_propagators=tuple(actors),
        negation_present=first_negation is not None,
        first_negation_time=first_negation,
        metrics=metrics,
        headline_text=headline,
    )


def _headline(
    tweet_count: int,
    originator: Optional[OriginatorInfo],
    break_time: datetime,
    burst_strength: float,
    still_spreading: bool,
    actors: Sequence[ActorRank],
    first_negation: Optional[datetime],
    metrics: StoryMetrics,
) -> str:
    parts = [f"Story of {tweet_count} tweets, breaking at {format_utc(break_time)}"]
    parts.append(f"(burstiness {burst_strength:.3f}).")
    if originator:
        parts.append(
            f"Originator: @{originator.screen_name}, whose tweet at "
            f"{format_utc(originator.created_at)} received {originator.retweet_count} retweets."
        )
    else:
        parts.append("No account cleared the visibility floor to count as originator.")
    parts.append(
        f"Propagation is {metrics.propagation_level} (h-index {metrics.propagation_h});"
        f" skepticism {format_skepticism(metrics.skepticism)}."
    )
    if first_negation is not None:
        parts.append(f"Doubting tweets first appeared at {format_utc(first_negation)}.")
    else:
        parts.append("No doubting tweets were found.")
    if actors:
        listed = ", ".join(
            f"@{a.screen_name} ({a.distinct_retweeters} retweeters)" for a in actors
        )
        parts.append(f"Most retweeted accounts: {listed}.")
    parts.append(
        "The story was still spreading at the end of the window."
        if still_spreading
        else "The story had quieted down by the end of the window."
    )
    return " ".join(parts)

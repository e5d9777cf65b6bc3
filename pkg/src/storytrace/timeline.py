"""Whole-story activity series and per-bin browsing.

Unlike burst scoring, which credits retweet mass to the original tweet's
bin, the timeline counts every record (original or retweet) in the bin
it was written in: it shows raw volume over time. Both share one grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Sequence

from .bursts import bin_intervals
from .models import Interval, TweetRecord
from .negation import NegationLexicon, is_negation
from .textkit import match_tokens, parse_term, contains_term

SORT_KEYS = ("retweets", "time", "original_first")
SORT_DIRECTIONS = ("asc", "desc")

ALL_SERIES = "all"
NEGATION_SERIES = "negation"


@dataclass(frozen=True)
class TimelineSeries:
    """Per-bin counts for one line of the timeline chart."""

    label: str
    bins: tuple[tuple[datetime, int], ...]


def _grid(tweets: Sequence[TweetRecord]) -> list[Interval]:
    return bin_intervals(tweets)


def build_timeline(
    tweets: Sequence[TweetRecord],
    lexicon: NegationLexicon,
    extra_keywords: Sequence[str] = (),
) -> list[TimelineSeries]:
    """Build the "all" and "negation" series plus one per extra keyword."""
    intervals = _grid(tweets)
    by_id = {t.tweet_id: t for t in tweets}

    def series(label: str, predicate) -> TimelineSeries:
        bins = []
        for iv in intervals:
            count = sum(1 for tid in iv.tweet_ids if predicate(by_id[tid]))
            bins.append((iv.start, count))
        return TimelineSeries(label=label, bins=tuple(bins))

    out = [series(ALL_SERIES, lambda t: True)]
    out.append(series(NEGATION_SERIES, lambda t: is_negation(t, lexicon)))
    for keyword in extra_keywords:
        term = parse_term(keyword)
        out.append(
            series(keyword, lambda t, term=term: contains_term(match_tokens(t.text), term))
        )
    return out


def list_bin(
    tweets: Sequence[TweetRecord],
    interval_start: datetime,
    sort: str = "time",
    direction: str = "asc",
) -> list[TweetRecord]:
    """Tweets of one bin under the chosen ordering.

    Sort keys: number of retweets received, creation time, or original
    tweets versus retweets. Equal keys fall back to ascending tweet id.
    """
    if sort not in SORT_KEYS:
        raise ValueError(f"unknown sort key {sort!r}; expected one of {SORT_KEYS}")
    if direction not in SORT_DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")

    intervals = _grid(tweets)
    match = next((iv for iv in intervals if iv.start == interval_start), None)
    if match is None:
        raise ValueError(f"unknown bin {interval_start.isoformat()}")

    by_id = {t.tweet_id: t for t in tweets}
    members = sorted((by_id[tid] for tid in match.tweet_ids), key=lambda r: r.tweet_id)

    if sort == "retweets":
        key = lambda r: r.retweet_count
    elif sort == "time":
        key = lambda r: r.created_at
    else:
        key = lambda r: r.is_retweet  # originals first when ascending

    # Stable sort after the id presort keeps ties in ascending-id order
    # for either direction.
    return sorted(members, key=key, reverse=(direction == "desc"))

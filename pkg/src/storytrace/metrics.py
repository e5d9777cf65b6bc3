"""Propagation and skepticism scoring, link bibliography, scatter export.

A tweet is treated as a publication and its retweets as citations, so a
story's propagation score is the h-index of its original tweets' retweet
counts. Skepticism compares how well the doubting side of the story
propagated against the rest.
"""

from __future__ import annotations

import csv
import math
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence
from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

from .models import CATEGORIES, TweetRecord

LEVELS = ("insignificant", "low", "moderate", "high", "extensive")
LEVEL_BOUNDS = (16, 32, 64, 128)  # inclusive upper bounds, doubling scale
SKEPTICISM_DEFAULT_THRESHOLD = 0.5
INFINITE = "infinite"

TRACKING_PARAMS = {"fbclid", "gclid", "igshid", "mc_cid", "mc_eid", "ref_src", "ref_url"}


def h_index(counts: Iterable[int]) -> int:
    """Largest h such that at least h values are ≥ h."""
    ranked = sorted(counts, reverse=True)
    h = 0
    for i, c in enumerate(ranked, start=1):
        if c >= i:
            h = i
        else:
            break
    return h


def propagation_level(h: int) -> str:
    for bound, level in zip(LEVEL_BOUNDS, LEVELS):
        if h <= bound:
            return level
    return LEVELS[-1]


@dataclass(frozen=True)
class StoryMetrics:
    propagation_h: int
    propagation_level: str
    negation_h: int
    non_negation_h: int
    skepticism: float  # math.inf when only the negating side propagated
    category: str = "other"
    category_source: str = "unset"

    def to_document(self) -> dict:
        return {
            "propagation_h": self.propagation_h,
            "propagation_level": self.propagation_level,
            "negation_h": self.negation_h,
            "non_negation_h": self.non_negation_h,
            "skepticism": INFINITE if math.isinf(self.skepticism) else self.skepticism,
            "category": self.category,
            "category_source": self.category_source,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "StoryMetrics":
        skepticism = doc["skepticism"]
        if skepticism == INFINITE:
            skepticism = math.inf
        return cls(
            propagation_h=int(doc["propagation_h"]),
            propagation_level=str(doc["propagation_level"]),
            negation_h=int(doc["negation_h"]),
            non_negation_h=int(doc["non_negation_h"]),
            skepticism=float(skepticism),
            category=str(doc.get("category", "other")),
            category_source=str(doc.get("category_source", "unset")),
        )


def compute_metrics(
    tweets: Sequence[TweetRecord],
    negating_ids: Iterable[int],
    category: Optional[str] = None,
) -> StoryMetrics:
    """Score the story from its negation partition.

    Only original tweets carry h-index weight (retweets are the citations,
    not the publications). Skepticism is the ratio of the negating side's
    h-index to the rest; with nothing on the other side it is 0 when both
    are silent and infinite when only doubt propagated.
    """
    negating = set(negating_ids)
    all_counts, neg_counts, other_counts = [], [], []
    for t in tweets:
        if t.is_retweet:
            continue
        all_counts.append(t.retweet_count)
        (neg_counts if t.tweet_id in negating else other_counts).append(t.retweet_count)

    negation_h = h_index(neg_counts)
    non_negation_h = h_index(other_counts)
    if non_negation_h > 0:
        skepticism = negation_h / non_negation_h
    else:
        skepticism = 0.0 if negation_h == 0 else math.inf

    if category is not None and category not in CATEGORIES:
        raise ValueError(f"unknown category {category!r}")
    h = h_index(all_counts)
    return StoryMetrics(
        propagation_h=h,
        propagation_level=propagation_level(h),
        negation_h=negation_h,
        non_negation_h=non_negation_h,
        skepticism=skepticism,
        category=category or "other",
        category_source="manual" if category is not None else "unset",
    )


def crowd_signal(
    metrics: StoryMetrics, skepticism_threshold: float = SKEPTICISM_DEFAULT_THRESHOLD
) -> str:
    """Advisory crowd reading, never a truth verdict.

    "doubted" marks the low-propagation / high-skepticism corner where
    audience pushback outweighed reach.
    """
    doubted = metrics.skepticism >= skepticism_threshold and metrics.propagation_level in (
        "insignificant",
        "low",
    )
    return "doubted" if doubted else "undoubted"


def canonical_url(url: str) -> str:
    """Normalize a tweeted URL for grouping.

    Scheme and host are lowercased, the fragment dropped, and common
    tracking parameters (utm_* and friends) removed. Path and remaining
    query are preserved as written.
    """
    url = url.strip()
    try:
        parts = urlsplit(url)
    except ValueError:
        return url
    if not parts.scheme:
        return url
    query = [
        (key, value)
        for key, value in parse_qsl(parts.query, keep_blank_values=True)
        if not key.lower().startswith("utm_") and key.lower() not in TRACKING_PARAMS
    ]
    return urlunsplit(
        (
            parts.scheme.lower(),
            parts.netloc.lower(),
            parts.path,
            urlencode(query),
            "",
        )
    )


@dataclass(frozen=True)
class LinkEntry:
    canonical_url: str
    tweet_count: int
    distinct_user_count: int
    tweet_ids: tuple[int, ...]


def build_link_bibliography(tweets: Sequence[TweetRecord]) -> list[LinkEntry]:
    """Group every tweeted URL and rank by citation volume.

    Mimics a bibliography: the most cited links first, with how many
    tweets and how many distinct accounts carried each.
    """
    tweet_ids: dict[str, set[int]] = defaultdict(set)
    users: dict[str, set[int]] = defaultdict(set)
    for t in tweets:
        for url in {canonical_url(u) for u in t.urls}:
            if not url:
                continue
            tweet_ids[url].add(t.tweet_id)
            users[url].add(t.author.user_id)
    entries = [
        LinkEntry(
            canonical_url=url,
            tweet_count=len(tweet_ids[url]),
            distinct_user_count=len(users[url]),
            tweet_ids=tuple(sorted(tweet_ids[url])),
        )
        for url in tweet_ids
    ]
    entries.sort(key=lambda e: (-e.tweet_count, -e.distinct_user_count, e.canonical_url))
    return entries


def scatter_export(stories: Iterable[tuple[str, StoryMetrics]]) -> list[dict]:
    """One row per story for the propagation-vs-skepticism scatter.

    Stories whose skepticism is the infinite sentinel are flagged so a
    numeric axis can skip them; everything else carries plain numbers.
    """
    rows = []
    for story_id, m in sorted(stories, key=lambda pair: str(pair[0])):
        resolved = not math.isinf(m.skepticism)
        rows.append(
            {
                "story_id": str(story_id),
                "propagation_h": m.propagation_h,
                "skepticism": m.skepticism if resolved else INFINITE,
                "category": m.category,
                "skepticism_resolved": resolved,
            }
        )
    return rows


def write_scatter_csv(path: str | Path, stories: Iterable[tuple[str, StoryMetrics]]) -> int:
    rows = scatter_export(stories)
    fields = ["story_id", "propagation_h", "skepticism", "category", "skepticism_resolved"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    return len(rows)

"""Activity binning, burst scoring, and the breaking-moment dataset.

The story is sliced into fixed 10-minute bins. A bin's activity is the
retweet mass of the original tweets written in it, so one tweet with a
thousand retweets outweighs a hundred tweets with one retweet each: we
care about the first tweet to make a sizeable impact, not the first
tweet posted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, Sequence

from .models import BIN_SECONDS, Interval, TweetRecord
from .textkit import cosine, term_vector

BIN_MINUTES = BIN_SECONDS / 60.0
BURST_THRESHOLD = 0.9
VISIBILITY_MIN = 5
SIMILARITY_THRESHOLD = 0.8
MAX_PROPAGATION_POINTS = 100


@dataclass(frozen=True)
class BurstScore:
    """Burst strength of one bin relative to the one before it.

    For the first bin the baseline is the mean retweet mass across all
    bins. Values live in [0, 1]; higher means a sharper jump.
    """

    index: int
    burstiness: float
    retweet_total: int
    prev_total: float


@dataclass(frozen=True)
class PropagationPoint:
    tweet_id: int
    created_at: datetime
    retweet_count: int
    followers_count: int
    verified: bool
    color_class: int
    # Author identity and text ride along so a client can reveal the tweet
    # and cross-highlight by user without extra round-trips.
    user_id: int = 0
    screen_name: str = ""
    text: str = ""


@dataclass(frozen=True)
class PropagationDataset:
    """The first ≤100 original tweets from the breaking moment onward."""

    breaking_interval: Interval
    points: tuple[PropagationPoint, ...]
    originator: Optional[int]


def bin_start(dt: datetime) -> datetime:
    seconds = int(dt.timestamp())
    return datetime.fromtimestamp(seconds - seconds % BIN_SECONDS, tz=timezone.utc)


def bin_intervals(tweets: Sequence[TweetRecord]) -> list[Interval]:
    """Slice the story into contiguous 600 s bins, empty bins included.

    The grid starts at the first tweet's bin boundary and runs through the
    bin containing the last tweet. Bins are half-open: [start, start+600).
    """
    if not tweets:
        raise ValueError("empty story")
    times = [int(t.created_at.timestamp()) for t in tweets]
    first = min(times) - min(times) % BIN_SECONDS
    last = max(times) - max(times) % BIN_SECONDS
    n_bins = (last - first) // BIN_SECONDS + 1

    members: list[list[TweetRecord]] = [[] for _ in range(n_bins)]
    for tweet, ts in zip(tweets, times):
        members[(ts - first) // BIN_SECONDS].append(tweet)

    intervals = []
    for i, bucket in enumerate(members):
        bucket.sort(key=lambda r: (r.created_at, r.tweet_id))
        intervals.append(
            Interval(
                index=i,
                start=datetime.fromtimestamp(first + i * BIN_SECONDS, tz=timezone.utc),
                tweet_ids=tuple(r.tweet_id for r in bucket),
                retweet_total=sum(r.retweet_count for r in bucket if not r.is_retweet),
            )
        )
    return intervals


def burstiness(
    intervals: Sequence[Interval], bin_minutes: float = BIN_MINUTES
) -> list[BurstScore]:
    """Score every bin: 1 − Δt / sqrt(Δt² + Δmass²).

    Δt is the bin width in minutes, fixed so scores are comparable across
    stories. Equal consecutive masses score exactly 0; a huge jump tends
    to 1. The first bin is compared against the mean mass of all bins.
    """
    if not intervals:
        raise ValueError("no intervals")
    mean_total = sum(iv.retweet_total for iv in intervals) / len(intervals)
    scores = []
    for pos, iv in enumerate(intervals):
        prev = mean_total if pos == 0 else float(intervals[pos - 1].retweet_total)
        jump = iv.retweet_total - prev
        value = 1.0 - bin_minutes / math.sqrt(bin_minutes * bin_minutes + jump * jump)
        scores.append(
            BurstScore(
                index=iv.index,
                burstiness=value,
                retweet_total=iv.retweet_total,
                prev_total=prev,
            )
        )
    return scores


def find_breaking_interval(
    scores: Sequence[BurstScore], threshold: float = BURST_THRESHOLD
) -> int:
    """Index of the bin where the story breaks.

    First bin whose mass rises above both the overall mean and its
    predecessor with burstiness ≥ threshold. If no bin clears the bar,
    fall back to the strongest rising burst, then to the heaviest bin.
    """
    if not scores:
        raise ValueError("no intervals")
    mean_total = sum(s.retweet_total for s in scores) / len(scores)
    for s in scores:
        if (
            s.retweet_total > mean_total
            and s.retweet_total > s.prev_total
            and s.burstiness >= threshold
        ):
            return s.index
    rising = [s for s in scores if s.retweet_total > s.prev_total]
    if rising:
        return max(rising, key=lambda s: (s.burstiness, -s.index)).index
    return max(scores, key=lambda s: (s.retweet_total, -s.index)).index


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, u: int) -> int:
        while self.parent[u] != u:
            self.parent[u] = self.parent[self.parent[u]]
            u = self.parent[u]
        return u

    def union(self, u: int, v: int) -> None:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        if self.rank[ru] == self.rank[rv]:
            self.rank[ru] += 1


def _color_classes(texts: Sequence[str], threshold: float) -> list[int]:
    # Single-linkage over cosine-similar pairs; classes numbered by first
    # appearance so the labeling is stable.
    vectors = [term_vector(t) for t in texts]
    uf = UnionFind(len(texts))
    for i in range(len(texts)):
        for j in range(i + 1, len(texts)):
            if cosine(vectors[i], vectors[j]) >= threshold:
                uf.union(i, j)
    labels: dict[int, int] = {}
    out = []
    for i in range(len(texts)):
        root = uf.find(i)
        if root not in labels:
            labels[root] = len(labels)
        out.append(labels[root])
    return out


def find_originator(
    points: Sequence[PropagationPoint], visibility_min: int = VISIBILITY_MIN
) -> Optional[int]:
    """Earliest point that cleared the visibility floor, if any.

    A zero-retweet tweet posted first did not break the story; it takes a
    minimum of received retweets to count as the origin. Ties at the same
    timestamp go to the higher count.
    """
    visible = [p for p in points if p.retweet_count >= visibility_min]
    if not visible:
        return None
    best = min(visible, key=lambda p: (p.created_at, -p.retweet_count, p.tweet_id))
    return best.tweet_id


def build_propagation_dataset(
    tweets: Sequence[TweetRecord],
    intervals: Sequence[Interval],
    breaking_index: int,
    max_points: int = MAX_PROPAGATION_POINTS,
    similarity_threshold: float = SIMILARITY_THRESHOLD,
    visibility_min: int = VISIBILITY_MIN,
) -> PropagationDataset:
    """Extract the breaking-moment dataset.

    Takes the first `max_points` original tweets at or after the breaking
    bin's start (running past its end when the bin is thin), colors them
    by language-similarity cluster, and identifies the originator.
    """
    breaking = intervals[breaking_index]
    originals = [
        t
        for t in tweets
        if not t.is_retweet and t.created_at >= breaking.start
    ]
    originals.sort(key=lambda r: (r.created_at, r.tweet_id))
    originals = originals[:max_points]

    colors = _color_classes([t.text for t in originals], similarity_threshold)
    points = tuple(
        PropagationPoint(
            tweet_id=t.tweet_id,
            created_at=t.created_at,
            retweet_count=t.retweet_count,
            followers_count=t.author.followers_count,
            verified=t.author.verified,
            color_class=c,
            user_id=t.author.user_id,
            screen_name=t.author.screen_name,
            text=t.text,
        )
        for t, c in zip(originals, colors)
    )
    return PropagationDataset(
        breaking_interval=breaking,
        points=points,
        originator=find_originator(points, visibility_min),
    )

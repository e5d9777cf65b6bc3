import json
import math
import random

import pytest
from hypothesis import given, strategies as st

from storytrace.metrics import (
    LEVELS,
    StoryMetrics,
    build_link_bibliography,
    canonical_url,
    compute_metrics,
    crowd_signal,
    h_index,
    propagation_level,
    scatter_export,
)

from .conftest import at, make_tweet, make_user


def brute_force_h(counts):
    values = list(counts)
    best = 0
    for h in range(len(values) + 1):
        if sum(1 for c in values if c >= h) >= h:
            best = h
    return best


class TestHIndex:
    def test_empty(self):
        assert h_index([]) == 0

    def test_classic_descending(self):
        assert h_index([5, 4, 3, 2, 1]) == 3
        assert brute_force_h([5, 4, 3, 2, 1]) == 3

    def test_all_zeros(self):
        assert h_index([0, 0, 0]) == 0

    def test_matches_brute_force_on_random_multisets(self):
        rng = random.Random(42)
        for _ in range(200):
            counts = [rng.randint(0, 50) for _ in range(rng.randint(0, 60))]
            assert h_index(counts) == brute_force_h(counts)

    @given(st.lists(st.integers(min_value=0, max_value=1000), max_size=200), st.integers(0, 1000))
    def test_adding_an_element_never_decreases_h(self, counts, extra):
        assert h_index(counts + [extra]) >= h_index(counts)

    @given(
        st.lists(st.integers(min_value=0, max_value=1000), min_size=1, max_size=200),
        st.data(),
    )
    def test_increasing_a_count_never_decreases_h(self, counts, data):
        i = data.draw(st.integers(0, len(counts) - 1))
        bumped = list(counts)
        bumped[i] += data.draw(st.integers(1, 500))
        assert h_index(bumped) >= h_index(counts)


class TestLevels:
    @pytest.mark.parametrize(
        "h,expected",
        [
            (0, "insignificant"),
            (16, "insignificant"),
            (17, "low"),
            (32, "low"),
            (33, "moderate"),
            (64, "moderate"),
            (65, "high"),
            (128, "high"),
            (129, "extensive"),
            (444, "extensive"),
        ],
    )
    def test_boundaries_exact(self, h, expected):
        assert propagation_level(h) == expected

    def test_mapping_total(self):
        for h in range(0, 1000):
            assert propagation_level(h) in LEVELS


def story_with_counts(non_neg_counts, neg_counts):
    tweets, negating = [], []
    tid = 1
    for c in non_neg_counts:
        tweets.append(make_tweet(tid, text=f"claim {tid}", retweet_count=c))
        tid += 1
    for c in neg_counts:
        tweets.append(make_tweet(tid, text=f"doubt {tid}", retweet_count=c))
        negating.append(tid)
        tid += 1
    return tweets, negating


class TestComputeMetrics:
    def test_simple_ratio(self):
        tweets, negating = story_with_counts([10] * 4, [10] * 8)
        m = compute_metrics(tweets, negating)
        assert (m.negation_h, m.non_negation_h) == (8, 4)
        assert m.skepticism == 2.0

    def test_zero_numerator(self):
        tweets, negating = story_with_counts([12] * 10, [])
        m = compute_metrics(tweets, negating)
        assert m.skepticism == 0.0

    def test_infinite_sentinel_when_only_doubt_propagated(self):
        tweets, negating = story_with_counts([0, 0], [9] * 5)
        m = compute_metrics(tweets, negating)
        assert math.isinf(m.skepticism)
        assert m.to_document()["skepticism"] == "infinite"

    def test_retweets_carry_no_h_weight(self):
        tweets, negating = story_with_counts([10] * 4, [])
        tweets.append(make_tweet(99, text="rt", retweet_count=500, retweet_of=1))
        m = compute_metrics(tweets, negating)
        assert m.propagation_h == 4

    def test_union_h_at_least_each_side(self):
        rng = random.Random(5)
        for _ in range(50):
            tweets, negating = story_with_counts(
                [rng.randint(0, 30) for _ in range(rng.randint(0, 20))],
                [rng.randint(0, 30) for _ in range(rng.randint(0, 20))],
            )
            m = compute_metrics(tweets, negating)
            assert m.propagation_h >= max(m.negation_h, m.non_negation_h)

    def test_category_is_manual_only(self):
        tweets, negating = story_with_counts([5], [])
        unset = compute_metrics(tweets, negating)
        assert (unset.category, unset.category_source) == ("other", "unset")
        manual = compute_metrics(tweets, negating, category="rumor_false")
        assert (manual.category, manual.category_source) == ("rumor_false", "manual")
        with pytest.raises(ValueError):
            compute_metrics(tweets, negating, category="definitely_true")

    def test_document_round_trip_preserves_values(self):
        tweets, negating = story_with_counts([10] * 5, [16] * 16)
        m = compute_metrics(tweets, negating)
        assert m.skepticism == 3.2
        doc = json.loads(json.dumps(m.to_document()))
        assert StoryMetrics.from_document(doc) == m
        assert StoryMetrics.from_document(doc).skepticism == 3.2


class TestCrowdSignal:
    def build(self, skepticism, level):
        return StoryMetrics(
            propagation_h=20,
            propagation_level=level,
            negation_h=1,
            non_negation_h=1,
            skepticism=skepticism,
        )

    def test_high_skepticism_low_reach_is_doubted(self):
        assert crowd_signal(self.build(3.2, "low")) == "doubted"

    def test_zero_skepticism_extensive_reach_is_undoubted(self):
        assert crowd_signal(self.build(0.0, "extensive")) == "undoubted"

    def test_level_too_high_blocks_the_flag(self):
        assert crowd_signal(self.build(0.5, "moderate")) == "undoubted"

    def test_infinite_skepticism_counts_as_high(self):
        assert crowd_signal(self.build(math.inf, "insignificant")) == "doubted"


class TestCanonicalUrl:
    def test_fragment_stripped(self):
        assert canonical_url("http://ex.com/a#section") == canonical_url("http://ex.com/a")

    def test_host_and_scheme_lowercased(self):
        assert canonical_url("HTTP://EX.com/Path") == "http://ex.com/Path"

    def test_tracking_params_removed_others_kept(self):
        url = "https://ex.com/a?utm_source=x&id=5&fbclid=abc"
        assert canonical_url(url) == "https://ex.com/a?id=5"


class TestBibliography:
    def test_counts_tweets_and_distinct_users(self):
        u1, u2 = make_user(1), make_user(2)
        tweets = [
            make_tweet(1, user=u1, urls=["http://ex.com/a"]),
            make_tweet(2, user=u1, urls=["http://ex.com/a#frag"]),
            make_tweet(3, user=u2, urls=["http://ex.com/a"]),
        ]
        entries = build_link_bibliography(tweets)
        assert len(entries) == 1
        assert entries[0].tweet_count == 3
        assert entries[0].distinct_user_count == 2
        assert entries[0].tweet_ids == (1, 2, 3)

    def test_sorted_by_citation_volume(self):
        tweets = [
            make_tweet(1, urls=["http://b.com/x"]),
            make_tweet(2, urls=["http://a.com/y"]),
            make_tweet(3, urls=["http://a.com/y"]),
        ]
        entries = build_link_bibliography(tweets)
        assert [e.canonical_url for e in entries] == ["http://a.com/y", "http://b.com/x"]

    def test_no_urls_empty_bibliography(self):
        assert build_link_bibliography([make_tweet(1)]) == []


class TestScatterExport:
    def metrics(self, h=20, skepticism=0.5, category="other"):
        return StoryMetrics(
            propagation_h=h,
            propagation_level=propagation_level(h),
            negation_h=1,
            non_negation_h=2,
            skepticism=skepticism,
            category=category,
        )

    def test_empty(self):
        assert scatter_export([]) == []

    def test_rows_ordered_by_story_id(self):
        rows = scatter_export(
            [("b", self.metrics()), ("a", self.metrics()), ("c", self.metrics())]
        )
        assert [r["story_id"] for r in rows] == ["a", "b", "c"]

    def test_sentinel_rows_flagged(self):
        rows = scatter_export([("s", self.metrics(skepticism=math.inf))])
        assert rows[0]["skepticism"] == "infinite"
        assert rows[0]["skepticism_resolved"] is False

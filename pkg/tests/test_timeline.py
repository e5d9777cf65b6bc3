import pytest

from storytrace.bursts import bin_intervals
from storytrace.negation import NegationLexicon
from storytrace.timeline import build_timeline, list_bin

from .conftest import at, make_tweet


def story():
    return [
        make_tweet(1, text="avión en telde", created_at=at(0), retweet_count=3),
        make_tweet(2, text="RT: avión en telde", created_at=at(2), retweet_of=1),
        make_tweet(3, text="más sobre el avión", created_at=at(11), retweet_count=9),
        make_tweet(4, text="es fake, un remolcador", created_at=at(12), retweet_count=1),
        make_tweet(5, text="RT: es fake, un remolcador", created_at=at(25), retweet_of=4),
    ]


def series_by_label(timeline):
    return {s.label: s for s in timeline}


class TestBuildTimeline:
    def test_all_series_counts_everything_per_bin(self):
        timeline = build_timeline(story(), NegationLexicon())
        all_series = series_by_label(timeline)["all"]
        assert [count for _, count in all_series.bins] == [2, 2, 1]
        assert sum(count for _, count in all_series.bins) == 5

    def test_negation_series_counts_lexicon_hits(self):
        timeline = build_timeline(story(), NegationLexicon())
        neg = series_by_label(timeline)["negation"]
        # the refuting original in bin 1 and its retweet in bin 2
        assert [count for _, count in neg.bins] == [0, 1, 1]

    def test_no_negation_story_yields_zero_series(self):
        tweets = [t for t in story() if "fake" not in t.text]
        neg = series_by_label(build_timeline(tweets, NegationLexicon()))["negation"]
        assert all(count == 0 for _, count in neg.bins)

    def test_keyword_series_tracks_token_matches(self):
        timeline = build_timeline(story(), NegationLexicon(), ["remolcador"])
        kw = series_by_label(timeline)["remolcador"]
        assert [count for _, count in kw.bins] == [0, 1, 1]

    def test_saturated_keyword_equals_all_series(self):
        timeline = build_timeline(story(), NegationLexicon(), ["avión", "remolcador"])
        by_label = series_by_label(timeline)
        merged = [
            a + r
            for (_, a), (_, r) in zip(by_label["avión"].bins, by_label["remolcador"].bins)
        ]
        assert merged == [count for _, count in by_label["all"].bins]

    def test_negation_bounded_by_all_series(self):
        timeline = build_timeline(story(), NegationLexicon())
        by_label = series_by_label(timeline)
        for (_, total), (_, neg) in zip(by_label["all"].bins, by_label["negation"].bins):
            assert neg <= total

    def test_shares_grid_with_burst_binning(self):
        tweets = story()
        timeline = build_timeline(tweets, NegationLexicon())
        intervals = bin_intervals(tweets)
        assert [start for start, _ in timeline[0].bins] == [iv.start for iv in intervals]

    def test_empty_story_is_an_error(self):
        with pytest.raises(ValueError):
            build_timeline([], NegationLexicon())


class TestListBin:
    def tweets(self):
        return [
            make_tweet(1, text="a", created_at=at(1), retweet_count=3),
            make_tweet(2, text="b", created_at=at(2), retweet_count=9),
            make_tweet(3, text="c", created_at=at(3), retweet_count=1),
            make_tweet(4, text="d", created_at=at(4), retweet_count=9, retweet_of=1),
            make_tweet(5, text="e", created_at=at(55)),
        ]

    def test_sort_by_retweets_desc(self):
        got = list_bin(self.tweets(), at(0), sort="retweets", direction="desc")
        assert [t.retweet_count for t in got] == [9, 9, 3, 1]
        # tie on 9: ascending tweet id
        assert [t.tweet_id for t in got][:2] == [2, 4]

    def test_sort_by_time_asc(self):
        got = list_bin(self.tweets(), at(0), sort="time", direction="asc")
        assert [t.tweet_id for t in got] == [1, 2, 3, 4]

    def test_originals_first(self):
        got = list_bin(self.tweets(), at(0), sort="original_first", direction="asc")
        assert [t.is_retweet for t in got] == [False, False, False, True]
        got = list_bin(self.tweets(), at(0), sort="original_first", direction="desc")
        assert got[0].tweet_id == 4

    def test_unknown_bin_rejected(self):
        with pytest.raises(ValueError, match="unknown bin"):
            list_bin(self.tweets(), at(500))
        with pytest.raises(ValueError, match="unknown bin"):
            list_bin(self.tweets(), at(1))  # not aligned to the grid

    def test_unknown_sort_key_rejected(self):
        with pytest.raises(ValueError):
            list_bin(self.tweets(), at(0), sort="popularity")

import math

import pytest

from storytrace.corpus import SearchWindow
from storytrace.models import InvestigationConfig, KeywordSpec
from storytrace.relevance import (
    build_relevant_set,
    is_relevant,
    rate_keyword,
    suggest_keywords,
)
from storytrace.textkit import contains_term, match_tokens, parse_term

from .conftest import at, make_corpus, make_tweet


def config(**kwargs):
    base = dict(investigative_tweet_id=1)
    base.update(kwargs)
    cfg = InvestigationConfig(**base)
    cfg.validate()
    return cfg


def kw(term, role):
    return KeywordSpec(term=term, role=role)


class TestIsRelevant:
    def test_required_keyword_present(self):
        cfg = config(keywords=(kw("avión", "required"),))
        assert is_relevant(make_tweet(2, text="Imagen del avión en el mar"), cfg)
        assert not is_relevant(make_tweet(3, text="un remolcador en el mar"), cfg)

    def test_exclusion_dominates(self):
        cfg = config(keywords=(kw("avión", "required"), kw("giveaway", "excluded")))
        text = "avión giveaway click here"
        assert not is_relevant(make_tweet(2, text=text), cfg)

    def test_optional_threshold_counts_matches(self):
        cfg = config(
            keywords=(kw("a", "optional"), kw("b", "optional"), kw("c", "optional")),
            optional_threshold=2,
        )
        assert is_relevant(make_tweet(2, text="a and c"), cfg)
        assert not is_relevant(make_tweet(3, text="only a here"), cfg)

    def test_threshold_zero_disables_optional(self):
        cfg = config(keywords=(kw("a", "optional"),), optional_threshold=0)
        assert is_relevant(make_tweet(2, text="nothing matching"), cfg)

    def test_required_mode_at_least_one(self):
        keywords = (kw("plane", "required"), kw("boat", "required"))
        all_mode = config(keywords=keywords, required_mode="all")
        any_mode = config(keywords=keywords, required_mode="at_least_one")
        tweet = make_tweet(2, text="the plane story")
        assert not is_relevant(tweet, all_mode)
        assert is_relevant(tweet, any_mode)

    def test_time_window_bounds_inclusive(self):
        cfg = config(time_window=(at(10), at(20)))
        assert is_relevant(make_tweet(2, created_at=at(10)), cfg)
        assert is_relevant(make_tweet(3, created_at=at(20)), cfg)
        assert not is_relevant(make_tweet(4, created_at=at(21)), cfg)


class TestBuildRelevantSet:
    def corpus(self):
        return make_corpus(
            make_tweet(1, text="avión en el mar telde", created_at=at(0)),
            make_tweet(2, text="avión telde imagen", created_at=at(1)),
            make_tweet(3, text="telde sin contexto", created_at=at(2)),
            make_tweet(4, text="nada que ver", created_at=at(3)),
        )

    def test_union_deduplicates_overlap(self):
        cfg = config(search_terms=("avión", "telde"))
        rs = build_relevant_set(self.corpus(), cfg)
        assert rs.tweet_ids == (1, 2, 3)  # ascending created_at, each once

    def test_filter_applies_after_collection(self):
        cfg = config(search_terms=("telde",), keywords=(kw("avión", "required"),))
        rs = build_relevant_set(self.corpus(), cfg)
        assert rs.tweet_ids == (1, 2)

    def test_time_window_can_empty_the_story(self):
        cfg = config(search_terms=("avión",), time_window=(at(500), at(600)))
        rs = build_relevant_set(self.corpus(), cfg)
        assert rs.tweet_ids == ()

    def test_counts_split_originals_and_retweets(self):
        corpus = make_corpus(
            make_tweet(1, text="avión", created_at=at(0)),
            make_tweet(2, text="RT: avión", created_at=at(1), retweet_of=1),
        )
        rs = build_relevant_set(corpus, config(search_terms=("avión",)))
        assert (rs.originals_count, rs.retweets_count) == (1, 1)

    def test_threshold_monotonicity_exhaustive_on_fixture(self):
        # 50 tweets over a tiny vocabulary; growing the optional threshold
        # can only shrink the set.
        words = ["alpha", "beta", "gamma", "delta"]
        records = [
            make_tweet(
                i,
                text=" ".join(words[j] for j in range(4) if (i >> j) & 1) or "filler",
                created_at=at(i),
            )
            for i in range(1, 51)
        ]
        corpus = make_corpus(*records)
        optional = tuple(kw(w, "optional") for w in words)
        previous = None
        for threshold in range(0, 5):
            cfg = config(
                search_terms=tuple(words) + ("filler",),
                keywords=optional,
                optional_threshold=threshold,
            )
            ids = set(build_relevant_set(corpus, cfg).tweet_ids)
            if previous is not None:
                assert ids <= previous
            previous = ids

    def test_equals_brute_force_scan(self):
        corpus = self.corpus()
        cfg = config(search_terms=("avión", "telde"), keywords=(kw("nada", "excluded"),))
        rs = build_relevant_set(corpus, cfg, window=SearchWindow())
        expected = sorted(
            (
                r
                for r in corpus.records.values()
                if any(
                    contains_term(match_tokens(r.text), parse_term(t))
                    for t in cfg.search_terms
                )
                and is_relevant(r, cfg)
            ),
            key=lambda r: (r.created_at, r.tweet_id),
        )
        assert rs.tweet_ids == tuple(r.tweet_id for r in expected)


class TestRateKeyword:
    def test_identical_sample_and_pivot_scores_one(self):
        text = "avión en el mar"
        corpus = make_corpus(
            make_tweet(1, text=text, created_at=at(0)),
            make_tweet(2, text=text, created_at=at(1)),
            make_tweet(3, text=text, created_at=at(2)),
        )
        rating = rate_keyword(corpus, "avión", corpus.records[1])
        assert rating.cohesion == pytest.approx(1.0)
        assert rating.affinity == pytest.approx(1.0)
        assert rating.rating == pytest.approx(1.0)

    def test_disjoint_vocabulary_scores_zero(self):
        corpus = make_corpus(
            make_tweet(1, text="uno dos shared", created_at=at(0)),
            make_tweet(2, text="shared tres cuatro", created_at=at(1)),
        )
        # Sample texts share no words with each other beyond the search
        # term itself? Build explicitly orthogonal texts:
        corpus = make_corpus(
            make_tweet(1, text="term aaa", created_at=at(0)),
            make_tweet(2, text="term bbb", created_at=at(1)),
        )
        pivot = make_tweet(9, text="ccc ddd")
        rating = rate_keyword(corpus, "aaa", pivot)
        # only one sample tweet matches "aaa": cohesion is vacuously 1
        assert rating.affinity == 0.0

    def test_hand_computed_two_text_sample(self):
        corpus = make_corpus(
            make_tweet(1, text="a b", created_at=at(0)),
            make_tweet(2, text="a c", created_at=at(1)),
        )
        pivot = make_tweet(9, text="a")
        rating = rate_keyword(corpus, "a", pivot)
        # cos({a,b},{a,c}) = 1/2; affinity = cos to {a} = 1/sqrt(2) for both
        assert rating.cohesion == pytest.approx(0.5)
        assert rating.affinity == pytest.approx(1 / math.sqrt(2))
        assert rating.rating == pytest.approx(0.5 * 0.5 + 0.5 / math.sqrt(2), abs=1e-4)
        assert rating.rating == pytest.approx(0.6036, abs=1e-4)

    def test_empty_sample_rates_zero(self):
        corpus = make_corpus(make_tweet(1, text="nothing"))
        rating = rate_keyword(corpus, "absent", make_tweet(9, text="x"))
        assert rating.rating == 0.0


class TestSuggestKeywords:
    def test_bigram_outranks_unigrams_at_equal_frequency(self):
        corpus = make_corpus(
            make_tweet(1, text="a tug boat appeared", created_at=at(0)),
            make_tweet(2, text="tug boat near shore", created_at=at(1)),
            make_tweet(3, text="that tug boat again", created_at=at(2)),
        )
        cfg = config(search_terms=("tug",))
        got = suggest_keywords(corpus, make_tweet(9, text="x"), cfg, 3)
        assert got[0] == "tug boat"

    def test_frequency_orders_unigram_above_rare_hashtag(self):
        corpus = make_corpus(
            make_tweet(1, text="rescate en curso #telde", created_at=at(0)),
            make_tweet(2, text="rescate confirmado", created_at=at(1)),
            make_tweet(3, text="rescate terminado", created_at=at(2)),
        )
        cfg = config(search_terms=("rescate",))
        got = suggest_keywords(corpus, make_tweet(9, text="x"), cfg, 10)
        assert got.index("#telde") > 0
        # "rescate" itself is excluded: it is already a search term
        assert "rescate" not in got

    def test_k_larger_than_pool_returns_everything(self):
        corpus = make_corpus(make_tweet(1, text="palabra", created_at=at(0)))
        cfg = config(search_terms=("palabra",))
        got = suggest_keywords(corpus, make_tweet(9, text="x"), cfg, 50)
        assert got == []  # the only candidate is the search term itself

    def test_falls_back_to_investigative_tweet_tokens(self):
        corpus = make_corpus(
            make_tweet(1, text="avión en telde", created_at=at(0)),
            make_tweet(2, text="avión imagen nueva", created_at=at(1)),
        )
        cfg = config()
        got = suggest_keywords(corpus, corpus.records[1], cfg, 5)
        assert "avión" in got


class TestAlgebraOnFixture:
    """Exclusion dominance and mode containment, checked exhaustively on a
    small corpus. The large randomized versions live in the acceptance
    suite."""

    def corpus(self):
        words = ["plane", "sea", "boat", "photo", "fake"]
        records = []
        for i in range(1, 33):
            text = " ".join(words[j] for j in range(5) if (i >> j) & 1) or "void"
            records.append(make_tweet(i, text=text, created_at=at(i)))
        return make_corpus(*records)

    def test_exclusion_never_grows_the_set(self):
        corpus = self.corpus()
        base = config(search_terms=("plane", "sea", "boat", "photo", "fake", "void"))
        with_excl = config(
            search_terms=base.search_terms, keywords=(kw("fake", "excluded"),)
        )
        assert set(build_relevant_set(corpus, with_excl).tweet_ids) <= set(
            build_relevant_set(corpus, base).tweet_ids
        )

    def test_required_all_subset_of_at_least_one(self):
        corpus = self.corpus()
        keywords = (kw("plane", "required"), kw("boat", "required"))
        terms = ("plane", "sea", "boat", "photo", "fake", "void")
        strict = config(search_terms=terms, keywords=keywords, required_mode="all")
        loose = config(
            search_terms=terms, keywords=keywords, required_mode="at_least_one"
        )
        assert set(build_relevant_set(corpus, strict).tweet_ids) <= set(
            build_relevant_set(corpus, loose).tweet_ids
        )

"""User-controlled relevancy filtering, keyword rating, and suggestion.

The relevant set is the story's dataset: everything downstream (bursts,
timeline, networks, metrics) consumes it. Refinement is re-execution —
each config edit rebuilds the set from scratch, which keeps results
reproducible from (corpus, config).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .corpus import Corpus, SearchWindow, fetch_recent, search
from .models import InvestigationConfig, TweetRecord
from .stopwords import DEFAULT_STOPWORDS
from .textkit import (
    contains_term,
    content_tokens,
    cosine,
    match_tokens,
    normalize_term,
    parse_term,
    term_vector,
)

COHESION_WEIGHT = 0.5
AFFINITY_WEIGHT = 0.5
RATING_SAMPLE_SIZE = 100
SUGGESTION_SAMPLE_SIZE = 100


@dataclass(frozen=True)
class RelevantSet:
    """Tweets passing the filter, ordered by ascending creation time."""

    tweet_ids: tuple[int, ...]
    config: InvestigationConfig
    originals_count: int
    retweets_count: int

    def __len__(self) -> int:
        return len(self.tweet_ids)


@dataclass(frozen=True)
class KeywordRating:
    """How well a candidate search term hangs together.

    cohesion: mean pairwise similarity within the term's recent sample.
    affinity: mean similarity of the sample to the investigative tweet.
    """

    term: str
    cohesion: float
    affinity: float
    rating: float


def is_relevant(
    tweet: TweetRecord,
    config: InvestigationConfig,
    tokens: Optional[tuple[str, ...]] = None,
) -> bool:
    """Apply the keyword/time filter to one tweet.

    Exclusion dominates; required keywords follow required_mode; optional
    keywords count against the threshold (0 disables them); the time
    window, when set, bounds created_at inclusively.
    """
    if config.time_window is not None:
        start, end = config.time_window
        if not start <= tweet.created_at <= end:
            return False
    if tokens is None:
        tokens = match_tokens(tweet.text)

    for term in config.terms_with_role("excluded"):
        if contains_term(tokens, parse_term(term)):
            return False

    required = config.terms_with_role("required")
    if required:
        hits = [contains_term(tokens, parse_term(t)) for t in required]
        if config.required_mode == "all":
            if not all(hits):
                return False
        elif not any(hits):
            return False

    if config.optional_threshold > 0:
        optional = config.terms_with_role("optional")
        matched = sum(1 for t in optional if contains_term(tokens, parse_term(t)))
        if matched < config.optional_threshold:
            return False
    return True


def build_relevant_set(
    corpus: Corpus,
    config: InvestigationConfig,
    window: Optional[SearchWindow] = SearchWindow(),
) -> RelevantSet:
    """Collect and filter the story's dataset.

    Union of per-term search results (each capped at max_tweets_per_term),
    deduplicated, filtered by is_relevant, sorted by (created_at, id).
    An empty result is a valid "empty story", not an error.
    """
    collected: dict[int, TweetRecord] = {}
    for term in config.search_terms:
        for rec in search(corpus, term, window=window, limit=config.max_tweets_per_term):
            collected.setdefault(rec.tweet_id, rec)

    kept = [
        rec
        for rec in collected.values()
        if is_relevant(rec, config, corpus.tokens.get(rec.tweet_id))
    ]
    kept.sort(key=lambda r: (r.created_at, r.tweet_id))
    originals = sum(1 for r in kept if not r.is_retweet)
    return RelevantSet(
        tweet_ids=tuple(r.tweet_id for r in kept),
        config=config,
        originals_count=originals,
        retweets_count=len(kept) - originals,
    )


def resolve_records(corpus: Corpus, relevant: RelevantSet) -> list[TweetRecord]:
    return [corpus.records[i] for i in relevant.tweet_ids]


def rate_keyword(corpus: Corpus, term: str, investigative: TweetRecord) -> KeywordRating:
    """Score a candidate search term against its own recent sample.

    An empty sample rates 0. A single-tweet sample is vacuously cohesive
    (cohesion 1) and rated by affinity alone beyond that.
    """
    sample = fetch_recent(corpus, term, RATING_SAMPLE_SIZE)
    if not sample:
        return KeywordRating(term=term, cohesion=0.0, affinity=0.0, rating=0.0)

    vectors = [term_vector(rec.text) for rec in sample]
    if len(vectors) == 1:
        cohesion = 1.0
    else:
        pairs = list(combinations(vectors, 2))
        cohesion = sum(cosine(a, b) for a, b in pairs) / len(pairs)

    pivot = term_vector(investigative.text)
    affinity = sum(cosine(v, pivot) for v in vectors) / len(vectors)
    rating = COHESION_WEIGHT * cohesion + AFFINITY_WEIGHT * affinity
    return KeywordRating(term=term, cohesion=cohesion, affinity=affinity, rating=rating)


def _config_terms(config: InvestigationConfig) -> set[str]:
    terms = {normalize_term(t) for t in config.search_terms}
    terms |= {normalize_term(k.term) for k in config.keywords}
    terms.discard("")
    return terms


def suggest_keywords(
    corpus: Corpus,
    investigative: TweetRecord,
    config: InvestigationConfig,
    k: int,
) -> list[str]:
    """Rank new search-term candidates by document frequency.

    Candidates come from three pools over the most recent sample tweets:
    unigrams (minus stopwords), bigrams, and hashtags. Terms already in
    the config are excluded. With no search terms configured yet, the
    investigative tweet's own content words seed the sample.
    """
    if k < 1:
        raise ValueError("k must be positive")

    seed_terms = list(config.search_terms)
    if not seed_terms:
        seed_terms = [
            tok
            for tok in dict.fromkeys(corpus.tokens.get(investigative.tweet_id, match_tokens(investigative.text)))
            if not tok.startswith("@") and tok not in DEFAULT_STOPWORDS and len(tok) > 1
        ]

    by_id: dict[int, TweetRecord] = {}
    for term in seed_terms:
        if not term.strip():
            continue
        for rec in fetch_recent(corpus, term, SUGGESTION_SAMPLE_SIZE):
            by_id.setdefault(rec.tweet_id, rec)
    sample = sorted(by_id.values(), key=lambda r: (r.created_at, r.tweet_id), reverse=True)
    sample = sample[:SUGGESTION_SAMPLE_SIZE]

    return _rank_candidates(sample, _config_terms(config), k)


def _usable_word(tok: str) -> bool:
    return (
        not tok.startswith("#")
        and not tok.startswith("@")
        and tok not in DEFAULT_STOPWORDS
        and len(tok) > 1
        and not tok.isdigit()
    )


def _rank_candidates(sample: list[TweetRecord], known: set[str], k: int) -> list[str]:
    doc_freq: Counter = Counter()
    for rec in sample:
        toks = content_tokens(rec.text)
        candidates: set[str] = set()
        for tok in toks:
            if tok.startswith("#") and len(tok) > 2:
                candidates.add(tok)
            elif _usable_word(tok):
                candidates.add(tok)
        for a, b in zip(toks, toks[1:]):
            if _usable_word(a) and _usable_word(b):
                candidates.add(f"{a} {b}")
        doc_freq.update(candidates)

    ranked = [
        term
        for term in doc_freq
        if normalize_term(term) not in known
    ]
    # More specific candidates (bigrams) outrank single words at equal
    # frequency; the final tie-break is lexicographic.
    ranked.sort(key=lambda t: (-doc_freq[t], -len(t.split()), t))
    return ranked[:k]

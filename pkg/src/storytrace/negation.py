"""Keyword-based detection of tweets that doubt or refute the story.

Deliberately simple: short posts refuting a claim fall back on a small
vocabulary ("fake", "hoax", ...), so token matching performs well without
any trained model. Sarcasm and irony are out of scope by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .models import TweetRecord
from .textkit import contains_term, match_tokens, parse_term


def _load_default_terms() -> tuple[str, ...]:
    text = resources.files("storytrace.data").joinpath("negation_terms.txt").read_text("utf-8")
    return _parse_lexicon_text(text)


def _parse_lexicon_text(text: str) -> tuple[str, ...]:
    terms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            terms.append(line)
    return tuple(dict.fromkeys(terms))


def load_lexicon_file(path: str | Path) -> tuple[str, ...]:
    """Read a lexicon file: one term or phrase per line, '#' comments."""
    return _parse_lexicon_text(Path(path).read_text(encoding="utf-8"))


DEFAULT_NEGATION_TERMS = _load_default_terms()


@dataclass(frozen=True)
class NegationLexicon:
    """Effective vocabulary = (base ∪ added) − removed; never empty."""

    base_terms: tuple[str, ...] = DEFAULT_NEGATION_TERMS
    added: tuple[str, ...] = ()
    removed: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.effective_terms():
            raise ValueError("negation lexicon is empty")

    def effective_terms(self) -> tuple[str, ...]:
        removed = {t.lower().strip() for t in self.removed}
        terms = [t.lower().strip() for t in (*self.base_terms, *self.added)]
        return tuple(dict.fromkeys(t for t in terms if t and t not in removed))

    @classmethod
    def customized(
        cls, added: Iterable[str] = (), removed: Iterable[str] = ()
    ) -> "NegationLexicon":
        return cls(added=tuple(added), removed=tuple(removed))


def is_negation(tweet: TweetRecord, lexicon: NegationLexicon) -> bool:
    """True when any lexicon term matches the tweet's own full text.

    Retweets carry the original text, so they inherit its classification.
    """
    tokens = match_tokens(tweet.text)
    for term in lexicon.effective_terms():
        if contains_term(tokens, parse_term(term)):
            return True
    return False


def split_story(
    tweets: Sequence[TweetRecord], lexicon: NegationLexicon
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Partition the story into (negating, non-negating) tweet ids, order kept."""
    negating, other = [], []
    for tweet in tweets:
        (negating if is_negation(tweet, lexicon) else other).append(tweet.tweet_id)
    return tuple(negating), tuple(other)

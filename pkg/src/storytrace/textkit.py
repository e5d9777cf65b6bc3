"""Tokenization and text-similarity helpers.

Two tokenizers coexist on purpose: `match_tokens` backs keyword and
search matching (punctuation stripped except # and @), while
`content_tokens` backs similarity vectors (URLs and @mentions removed,
hashtags kept). Both lowercase their input.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache

_TOKEN_RE = re.compile(r"[#@]?\w+")
_URL_RE = re.compile(r"https?://\S+|\bwww\.\S+")
_MENTION_RE = re.compile(r"@\w+")


@lru_cache(maxsize=1 << 18)
def match_tokens(text: str) -> tuple[str, ...]:
    """Word-boundary tokens used for search and keyword matching."""
    return tuple(_TOKEN_RE.findall(text.lower()))


@lru_cache(maxsize=1 << 18)
def content_tokens(text: str) -> tuple[str, ...]:
    """Tokens used for similarity vectors: no URLs, no @mentions."""
    cleaned = _URL_RE.sub(" ", text.lower())
    cleaned = _MENTION_RE.sub(" ", cleaned)
    return tuple(_TOKEN_RE.findall(cleaned))


def parse_term(term: str) -> tuple[str, ...]:
    """Normalize a keyword or query into its token sequence.

    Surrounding quotes are cosmetic; any multi-token term is a phrase and
    matches only as a contiguous token run.
    """
    return match_tokens(term.strip().strip('"“”'))


def normalize_term(term: str) -> str:
    return " ".join(parse_term(term))


def contains_term(tokens: tuple[str, ...], term_tokens: tuple[str, ...]) -> bool:
    if not term_tokens:
        return False
    if len(term_tokens) == 1:
        return term_tokens[0] in tokens
    first = term_tokens[0]
    span = len(term_tokens)
    for i, tok in enumerate(tokens):
        if tok == first and tuple(tokens[i : i + span]) == term_tokens:
            return True
    return False


def text_contains(text: str, term: str) -> bool:
    return contains_term(match_tokens(text), parse_term(term))


def term_vector(text: str) -> Counter:
    """Raw term-frequency vector over content tokens."""
    return Counter(content_tokens(text))


def cosine(a: Counter, b: Counter) -> float:
    """Cosine similarity of two sparse count vectors; 0.0 when either is empty."""
    if not a or not b:
        return 0.0
    if len(b) < len(a):
        a, b = b, a
    dot = sum(count * b[tok] for tok, count in a.items())
    if dot == 0:
        return 0.0
    norm_a = math.sqrt(sum(c * c for c in a.values()))
    norm_b = math.sqrt(sum(c * c for c in b.values()))
    return dot / (norm_a * norm_b)

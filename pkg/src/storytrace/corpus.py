"""Tweet-archive loading, indexing, and the search emulation.

The archive stands in for a live search endpoint: queries return matches
newest-first, capped per query, and restricted to a recency horizon
relative to a simulation clock that defaults to the newest record.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timedelta
from pathlib import Path
from typing import Iterable, Optional

from .models import TweetRecord, RecordValidationError, validate_record
from .textkit import match_tokens, parse_term

log = logging.getLogger(__name__)

MAX_SEARCH_LIMIT = 18000
DEFAULT_HORIZON_DAYS = 9.0


class CorpusError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchWindow:
    """Recency restriction emulating a live search endpoint.

    `now` is the simulation clock; None means "the newest record in the
    corpus", so archived stories always count as recent.
    """

    horizon_days: float = DEFAULT_HORIZON_DAYS
    now: Optional[datetime] = None

    def __post_init__(self):
        if self.horizon_days <= 0:
            raise ValueError("horizon_days must be positive")


@dataclass
class Corpus:
    """Immutable-after-load tweet archive with an inverted token index.

    Postings are sorted newest-first (ties: higher tweet id first), so a
    capped query is a prefix of the posting list.
    """

    records: dict[int, TweetRecord] = field(default_factory=dict)
    term_index: dict[str, list[int]] = field(default_factory=dict)
    tokens: dict[int, tuple[str, ...]] = field(default_factory=dict)
    epoch: Optional[tuple[datetime, datetime]] = None
    rejected_count: int = 0
    duplicate_count: int = 0
    rejection_reasons: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def from_records(cls, records: Iterable[TweetRecord]) -> "Corpus":
        corpus = cls()
        for rec in records:
            if rec.tweet_id in corpus.records:
                corpus.duplicate_count += 1
                continue
            corpus._add(rec)
        corpus._finalize()
        return corpus

    def _add(self, rec: TweetRecord) -> None:
        self.records[rec.tweet_id] = rec
        toks = match_tokens(rec.text)
        self.tokens[rec.tweet_id] = toks
        for tok in set(toks):
            self.term_index.setdefault(tok, []).append(rec.tweet_id)

    def _finalize(self) -> None:
        def recency(tweet_id: int):
            rec = self.records[tweet_id]
            return (rec.created_at, tweet_id)

        for postings in self.term_index.values():
            postings.sort(key=recency, reverse=True)
        if self.records:
            times = [r.created_at for r in self.records.values()]
            self.epoch = (min(times), max(times))

    def default_now(self) -> Optional[datetime]:
        return self.epoch[1] if self.epoch else None


def load_corpus(path: str | Path) -> Corpus:
    """Load a newline-delimited JSON archive.

    Invalid records are counted and logged, not fatal; duplicates keep the
    first occurrence. The load fails outright if the file is unreadable or
    more than half the records are rejected.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path}: {exc}") from exc

    corpus = Corpus()
    total = 0
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        total += 1
        try:
            raw = json.loads(line)
        except json.JSONDecodeError:
            corpus.rejected_count += 1
            corpus.rejection_reasons["malformed json"] = (
                corpus.rejection_reasons.get("malformed json", 0) + 1
            )
            log.warning("line %d: malformed json", lineno)
            continue
        try:
            rec = validate_record(raw)
        except RecordValidationError as exc:
            corpus.rejected_count += 1
            corpus.rejection_reasons[exc.reason] = (
                corpus.rejection_reasons.get(exc.reason, 0) + 1
            )
            log.warning("line %d: rejected (%s)", lineno, exc.reason)
            continue
        if rec.tweet_id in corpus.records:
            corpus.rejected_count += 1
            corpus.duplicate_count += 1
            corpus.rejection_reasons["duplicate id"] = (
                corpus.rejection_reasons.get("duplicate id", 0) + 1
            )
            log.warning("line %d: duplicate id %d, first occurrence kept", lineno, rec.tweet_id)
            continue
        corpus._add(rec)

    if total and corpus.rejected_count * 2 > total:
        raise CorpusError(
            f"corpus unusable: {corpus.rejected_count}/{total} records rejected"
        )
    corpus._finalize()
    if corpus.rejected_count:
        log.info(
            "loaded %d records, rejected %d (%s)",
            len(corpus),
            corpus.rejected_count,
            ", ".join(f"{k}: {v}" for k, v in sorted(corpus.rejection_reasons.items())),
        )
    return corpus


def _candidate_ids(corpus: Corpus, term_tokens: tuple[str, ...]) -> list[int]:
    if len(term_tokens) == 1:
        return corpus.term_index.get(term_tokens[0], [])
    # Phrase query: scan the shortest posting list and verify contiguity.
    postings = [corpus.term_index.get(tok, []) for tok in term_tokens]
    shortest = min(postings, key=len)
    if not shortest:
        return []
    out = []
    for tweet_id in shortest:
        toks = corpus.tokens[tweet_id]
        first = term_tokens[0]
        span = len(term_tokens)
        for i, tok in enumerate(toks):
            if tok == first and tuple(toks[i : i + span]) == term_tokens:
                out.append(tweet_id)
                break
    return out


def search(
    corpus: Corpus,
    query: str,
    window: Optional[SearchWindow] = SearchWindow(),
    limit: int = MAX_SEARCH_LIMIT,
) -> list[TweetRecord]:
    """Return up to `limit` records matching `query`, newest first.

    Single terms match on token boundaries; quoted or multi-word queries
    match as contiguous token runs. Matches outside the recency window
    are dropped. A window of None disables the recency restriction.
    """
    term_tokens = parse_term(query)
    if not term_tokens:
        raise ValueError("empty query")
    if not 0 < limit <= MAX_SEARCH_LIMIT:
        raise ValueError(f"limit must be in 1..{MAX_SEARCH_LIMIT}")

    lower = upper = None
    if window is not None:
        now = window.now or corpus.default_now()
        if now is not None:
            upper = now
            lower = now - timedelta(days=window.horizon_days)

    out: list[TweetRecord] = []
    for tweet_id in _candidate_ids(corpus, term_tokens):
        rec = corpus.records[tweet_id]
        if upper is not None and rec.created_at > upper:
            continue
        if lower is not None and rec.created_at < lower:
            break  # postings are newest-first; everything after is older
        out.append(rec)
        if len(out) >= limit:
            break
    return out


def fetch_recent(corpus: Corpus, term: str, count: int = 100) -> list[TweetRecord]:
    """Newest `count` matches for `term` over the whole archive.

    Feeds keyword rating and suggestion; no recency window applies.
    """
    if not term.strip():
        raise ValueError("empty term")
    return search(corpus, term, window=None, limit=count)

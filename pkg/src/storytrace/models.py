"""Core value types shared by every stage of an investigation.

All types are immutable after construction and safe to share between
threads. Validation lives here; behavior lives in the stage modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Any, Optional

BIN_SECONDS = 600
MAX_TWEETS_PER_TERM = 18000
MAX_SEARCH_TERMS = 10

KEYWORD_ROLES = ("required", "optional", "excluded")
REQUIRED_MODES = ("all", "at_least_one")
CATEGORIES = ("rumor_true", "rumor_false", "event_meme", "other")


class RecordValidationError(ValueError):
    """A raw record cannot become a valid TweetRecord.

    `reason` is a short machine-readable code ("missing id", "self-retweet",
    "negative count", ...) used by the corpus loader's rejection report.
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class ConfigValidationError(ValueError):
    """An InvestigationConfig violates one of its invariants."""


def parse_utc(value: Any) -> datetime:
    """Parse an ISO-8601 timestamp to a tz-aware UTC datetime.

    Sub-second precision is discarded: activity bins are 600 s wide, so
    nothing finer matters. Naive timestamps are taken as UTC.
    """
    if isinstance(value, datetime):
        dt = value
    elif isinstance(value, (int, float)) and not isinstance(value, bool):
        dt = datetime.fromtimestamp(value, tz=timezone.utc)
    else:
        text = str(value).strip()
        if not text:
            raise ValueError("empty timestamp")
        if text.endswith(("Z", "z")):
            text = text[:-1] + "+00:00"
        dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).replace(microsecond=0)


def format_utc(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def epoch_seconds(dt: datetime) -> int:
    return int(dt.timestamp())


@dataclass(frozen=True)
class UserRef:
    """Author of a tweet, as captured at collection time."""

    user_id: int
    screen_name: str
    followers_count: int = 0
    verified: bool = False
    description: str = ""
    account_created_at: Optional[datetime] = None


@dataclass(frozen=True)
class TweetRecord:
    """One tweet or retweet from the archive.

    `retweet_count` is the platform-reported total at collection time; it
    drives activity and propagation metrics. Retweeters actually observed
    in the dataset are a separate notion and drive the network graphs.
    """

    tweet_id: int
    created_at: datetime
    text: str
    author: UserRef
    retweet_count: int = 0
    retweet_of: Optional[int] = None
    urls: tuple[str, ...] = ()
    hashtags: tuple[str, ...] = ()
    lang: Optional[str] = None

    @property
    def is_retweet(self) -> bool:
        return self.retweet_of is not None


def _parse_id(value: Any, missing: str, bad: str) -> int:
    if value is None:
        raise RecordValidationError(missing)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise RecordValidationError(bad) from None


def validate_record(raw: dict) -> TweetRecord:
    """Build a TweetRecord from one raw archive object.

    Raises RecordValidationError with a reason code when a required field
    is missing or an invariant is violated. Unknown fields are ignored.
    """
    if not isinstance(raw, dict):
        raise RecordValidationError("not an object")

    tweet_id = _parse_id(raw.get("id"), "missing id", "bad id")

    if raw.get("created_at") is None:
        raise RecordValidationError("missing timestamp")
    try:
        created_at = parse_utc(raw["created_at"])
    except (ValueError, OverflowError, OSError):
        raise RecordValidationError("bad timestamp") from None

    user = raw.get("user")
    if not isinstance(user, dict) or user.get("id") is None:
        raise RecordValidationError("missing author")
    user_id = _parse_id(user.get("id"), "missing author", "bad author")
    screen_name = str(user.get("screen_name") or "").strip()
    if not screen_name:
        raise RecordValidationError("bad author")
    followers = user.get("followers_count", 0)
    try:
        followers = int(followers)
    except (TypeError, ValueError):
        raise RecordValidationError("bad author") from None
    if followers < 0:
        raise RecordValidationError("bad author")
    account_created = None
    if user.get("created_at") is not None:
        try:
            account_created = parse_utc(user["created_at"])
        except (ValueError, OverflowError, OSError):
            raise RecordValidationError("bad author") from None

    author = UserRef(
        user_id=user_id,
        screen_name=screen_name,
        followers_count=followers,
        verified=bool(user.get("verified", False)),
        description=str(user.get("description") or ""),
        account_created_at=account_created,
    )

    try:
        retweet_count = int(raw.get("retweet_count", 0))
    except (TypeError, ValueError):
        raise RecordValidationError("bad count") from None
    if retweet_count < 0:
        raise RecordValidationError("negative count")

    retweet_of = None
    if raw.get("retweeted_status_id") is not None:
        retweet_of = _parse_id(raw["retweeted_status_id"], "bad id", "bad id")
        if retweet_of == tweet_id:
            raise RecordValidationError("self-retweet")

    entities = raw.get("entities") or {}
    urls = tuple(str(u) for u in entities.get("urls") or ())
    hashtags = tuple(str(h).lower() for h in entities.get("hashtags") or ())

    lang = raw.get("lang")
    if lang is not None:
        lang = str(lang)

    return TweetRecord(
        tweet_id=tweet_id,
        created_at=created_at,
        text=str(raw.get("text") or ""),
        author=author,
        retweet_count=retweet_count,
        retweet_of=retweet_of,
        urls=urls,
        hashtags=hashtags,
        lang=lang,
    )


def serialize_record(rec: TweetRecord) -> dict:
    """Inverse of validate_record: emit the archive wire object."""
    user = {
        "id": rec.author.user_id,
        "screen_name": rec.author.screen_name,
        "followers_count": rec.author.followers_count,
        "verified": rec.author.verified,
        "description": rec.author.description,
        "created_at": format_utc(rec.author.account_created_at)
        if rec.author.account_created_at
        else None,
    }
    doc = {
        "id": rec.tweet_id,
        "created_at": format_utc(rec.created_at),
        "text": rec.text,
        "retweet_count": rec.retweet_count,
        "retweeted_status_id": rec.retweet_of,
        "user": user,
        "entities": {"urls": list(rec.urls), "hashtags": list(rec.hashtags)},
    }
    if rec.lang is not None:
        doc["lang"] = rec.lang
    return doc


@dataclass(frozen=True)
class KeywordSpec:
    """A filter keyword with its role in the relevancy rule."""

    term: str
    role: str

    def __post_init__(self):
        if not self.term.strip():
            raise ConfigValidationError("keyword term is empty")
        if self.role not in KEYWORD_ROLES:
            raise ConfigValidationError(f"unknown keyword role {self.role!r}")


@dataclass(frozen=True)
class InvestigationConfig:
    """User-steered filter state for one investigation.

    `timeline_keywords` adds per-keyword series to the timeline;
    `category` is a manual story label, never inferred by the engine.
    """

    investigative_tweet_id: int
    search_terms: tuple[str, ...] = ()
    keywords: tuple[KeywordSpec, ...] = ()
    required_mode: str = "all"
    optional_threshold: int = 0
    time_window: Optional[tuple[datetime, datetime]] = None
    max_tweets_per_term: int = MAX_TWEETS_PER_TERM
    negation_add: tuple[str, ...] = ()
    negation_remove: tuple[str, ...] = ()
    timeline_keywords: tuple[str, ...] = ()
    category: Optional[str] = None

    def terms_with_role(self, role: str) -> tuple[str, ...]:
        return tuple(k.term for k in self.keywords if k.role == role)

    def validate(self, max_search_terms: int = MAX_SEARCH_TERMS) -> None:
        if len(self.search_terms) > max_search_terms:
            raise ConfigValidationError(
                f"too many search terms ({len(self.search_terms)} > {max_search_terms})"
            )
        if any(not t.strip() for t in self.search_terms):
            raise ConfigValidationError("empty search term")
        if self.required_mode not in REQUIRED_MODES:
            raise ConfigValidationError(f"unknown required_mode {self.required_mode!r}")
        seen: dict[str, str] = {}
        for kw in self.keywords:
            prev = seen.get(kw.term)
            if prev is not None:
                raise ConfigValidationError(f"keyword {kw.term!r} listed more than once")
            seen[kw.term] = kw.role
        n_optional = len(self.terms_with_role("optional"))
        if self.optional_threshold < 0:
            raise ConfigValidationError("optional_threshold is negative")
        if self.optional_threshold > n_optional:
            raise ConfigValidationError(
                f"optional_threshold {self.optional_threshold} exceeds "
                f"{n_optional} optional keyword(s)"
            )
        if self.time_window is not None:
            start, end = self.time_window
            if start >= end:
                raise ConfigValidationError("time_window start must precede end")
        if not 0 < self.max_tweets_per_term <= MAX_TWEETS_PER_TERM:
            raise ConfigValidationError(
                f"max_tweets_per_term must be in 1..{MAX_TWEETS_PER_TERM}"
            )
        if self.category is not None and self.category not in CATEGORIES:
            raise ConfigValidationError(f"unknown category {self.category!r}")

    def to_document(self) -> dict:
        return {
            "investigative_tweet_id": self.investigative_tweet_id,
            "search_terms": list(self.search_terms),
            "keywords": [{"term": k.term, "role": k.role} for k in self.keywords],
            "required_mode": self.required_mode,
            "optional_threshold": self.optional_threshold,
            "time_window": [format_utc(self.time_window[0]), format_utc(self.time_window[1])]
            if self.time_window
            else None,
            "max_tweets_per_term": self.max_tweets_per_term,
            "negation_add": list(self.negation_add),
            "negation_remove": list(self.negation_remove),
            "timeline_keywords": list(self.timeline_keywords),
            "category": self.category,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "InvestigationConfig":
        try:
            tweet_id = int(doc["investigative_tweet_id"])
        except (KeyError, TypeError, ValueError):
            raise ConfigValidationError("missing or bad investigative_tweet_id") from None
        window = None
        if doc.get("time_window"):
            raw = doc["time_window"]
            if not isinstance(raw, (list, tuple)) or len(raw) != 2:
                raise ConfigValidationError("time_window must be a [start, end] pair")
            try:
                window = (parse_utc(raw[0]), parse_utc(raw[1]))
            except ValueError:
                raise ConfigValidationError("bad time_window timestamp") from None
        keywords = []
        for item in doc.get("keywords") or ():
            keywords.append(KeywordSpec(term=str(item["term"]), role=str(item["role"])))
        return cls(
            investigative_tweet_id=tweet_id,
            search_terms=tuple(str(t) for t in doc.get("search_terms") or ()),
            keywords=tuple(keywords),
            required_mode=str(doc.get("required_mode", "all")),
            optional_threshold=int(doc.get("optional_threshold", 0)),
            time_window=window,
            max_tweets_per_term=int(doc.get("max_tweets_per_term", MAX_TWEETS_PER_TERM)),
            negation_add=tuple(str(t) for t in doc.get("negation_add") or ()),
            negation_remove=tuple(str(t) for t in doc.get("negation_remove") or ()),
            timeline_keywords=tuple(str(t) for t in doc.get("timeline_keywords") or ()),
            category=doc.get("category"),
        )

    def patched(self, patch: dict) -> "InvestigationConfig":
        """Return a new config with top-level fields from `patch` replacing
        the current ones. Unknown keys are rejected."""
        doc = self.to_document()
        for key, value in patch.items():
            if key not in doc:
                raise ConfigValidationError(f"unknown config field {key!r}")
            doc[key] = value
        return InvestigationConfig.from_document(doc)


@dataclass(frozen=True)
class Interval:
    """One 600 s activity bin.

    `retweet_total` sums the platform retweet counts of the original
    tweets written inside the bin; retweet records never contribute to it.
    """

    index: int
    start: datetime
    tweet_ids: tuple[int, ...] = ()
    retweet_total: int = 0
    width_seconds: int = BIN_SECONDS

    @property
    def end(self) -> datetime:
        return self.start + timedelta(seconds=self.width_seconds)

    @property
    def activity(self) -> int:
        # Activity and retweet mass are one quantity here: the platform
        # count already includes retweets received outside the bin.
        return self.retweet_total

"""File-backed investigation store.

One directory per investigation holding a single JSON document; commits
go through a temp file and os.replace, so an interrupted recompute can
never corrupt previously readable artifacts. Refinements of the same
investigation are serialized through a per-id lock; different
investigations run in parallel.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional

from .corpus import Corpus, load_corpus
from .models import InvestigationConfig, TweetRecord, format_utc, parse_utc
from .pipeline import (
    DATASET_KINDS,
    PipelineParams,
    artifact_documents,
    canonical_json,
    run_pipeline,
)
from .timeline import list_bin

STATE_DRAFT = "draft"
STATE_COMPUTED = "computed"
STATE_ERROR = "error"

DOC_NAME = "investigation.json"


class UnknownInvestigationError(KeyError):
    pass


class UnknownTweetError(KeyError):
    pass


class DraftArtifactsError(RuntimeError):
    """Datasets were requested before the first successful compute."""


class UnknownDatasetError(KeyError):
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"unknown dataset kind {kind!r}; valid kinds: {', '.join(DATASET_KINDS)}")


@dataclass
class Investigation:
    id: str
    corpus_ref: str
    state: str
    config: InvestigationConfig
    created_at: str
    updated_at: str
    artifacts: Optional[dict] = None
    error: Optional[str] = None

    def to_document(self, include_artifacts: bool = True) -> dict:
        doc = {
            "id": self.id,
            "corpus_ref": self.corpus_ref,
            "state": self.state,
            "config": self.config.to_document(),
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "error": self.error,
        }
        if include_artifacts:
            doc["artifacts"] = self.artifacts
        else:
            doc["artifact_kinds"] = sorted(self.artifacts) if self.artifacts else []
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> "Investigation":
        return cls(
            id=str(doc["id"]),
            corpus_ref=str(doc["corpus_ref"]),
            state=str(doc["state"]),
            config=InvestigationConfig.from_document(doc["config"]),
            created_at=str(doc["created_at"]),
            updated_at=str(doc["updated_at"]),
            artifacts=doc.get("artifacts"),
            error=doc.get("error"),
        )


def _utc_now() -> str:
    return format_utc(datetime.now(tz=timezone.utc))


class CorpusCache:
    """Load each corpus file once and share it across investigations."""

    def __init__(self, loader: Callable[[str], Corpus] = load_corpus):
        self._loader = loader
        self._cache: dict[str, Corpus] = {}
        self._lock = threading.Lock()

    def get(self, ref: str) -> Corpus:
        with self._lock:
            if ref not in self._cache:
                self._cache[ref] = self._loader(ref)
            return self._cache[ref]


class InvestigationStore:
    def __init__(
        self,
        root: str | Path,
        default_corpus: Optional[str] = None,
        corpora: Optional[CorpusCache] = None,
        params: PipelineParams = PipelineParams(),
    ):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.default_corpus = default_corpus
        self.corpora = corpora or CorpusCache()
        self.params = params
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, inv_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(inv_id, threading.Lock())

    def _dir(self, inv_id: str) -> Path:
        return self.root / inv_id

    def _write(self, inv: Investigation) -> None:
        target = self._dir(inv.id) / DOC_NAME
        target.parent.mkdir(parents=True, exist_ok=True)
        tmp = target.with_suffix(f".tmp-{os.getpid()}-{threading.get_ident()}")
        tmp.write_text(canonical_json(inv.to_document()), encoding="utf-8")
        os.replace(tmp, target)

    def _read(self, inv_id: str) -> Investigation:
        target = self._dir(inv_id) / DOC_NAME
        if not target.exists():
            raise UnknownInvestigationError(inv_id)
        return Investigation.from_document(json.loads(target.read_text(encoding="utf-8")))

    # -- operations ------------------------------------------------------

    def create(self, tweet_id: int, corpus_ref: Optional[str] = None) -> Investigation:
        """Start a draft investigation around one tweet."""
        ref = corpus_ref or self.default_corpus
        if not ref:
            raise ValueError("no corpus configured")
        corpus = self.corpora.get(ref)
        if tweet_id not in corpus.records:
            raise UnknownTweetError(tweet_id)
        now = _utc_now()
        inv = Investigation(
            id=uuid.uuid4().hex,
            corpus_ref=ref,
            state=STATE_DRAFT,
            config=InvestigationConfig(investigative_tweet_id=tweet_id),
            created_at=now,
            updated_at=now,
        )
        self._write(inv)
        return inv

    def get(self, inv_id: str) -> Investigation:
        return self._read(inv_id)

    def corpus_for(self, inv: Investigation) -> Corpus:
        return self.corpora.get(inv.corpus_ref)

    def refine(self, inv_id: str, patch: dict) -> Investigation:
        """Apply a config patch and fully recompute the artifacts.

        Validation failures leave the stored investigation untouched. The
        recompute replaces artifacts atomically: readers see the previous
        complete document until the new one is committed.
        """
        lock = self._lock_for(inv_id)
        with lock:
            inv = self._read(inv_id)
            new_config = inv.config.patched(patch)
            new_config.validate()
            corpus = self.corpora.get(inv.corpus_ref)
            if new_config.investigative_tweet_id not in corpus.records:
                raise UnknownTweetError(new_config.investigative_tweet_id)
            artifacts = run_pipeline(corpus, new_config, params=self.params)
            inv.config = new_config
            inv.artifacts = artifact_documents(artifacts)
            inv.state = STATE_COMPUTED
            inv.error = None
            inv.updated_at = _utc_now()
            self._write(inv)
            return inv

    def dataset(self, inv_id: str, kind: str) -> dict:
        if kind not in DATASET_KINDS:
            raise UnknownDatasetError(kind)
        inv = self._read(inv_id)
        if inv.state != STATE_COMPUTED or not inv.artifacts:
            raise DraftArtifactsError(inv_id)
        return inv.artifacts[kind]

    def ids(self) -> list[str]:
        out = []
        for child in sorted(self.root.iterdir()):
            if (child / DOC_NAME).exists():
                out.append(child.name)
        return out

    def list_stories(self, view: str = "condensed") -> list[dict]:
        """Gallery rows; `condensed` is the at-a-glance table, `full`
        carries the whole summary and artifact links."""
        if view not in ("condensed", "full"):
            raise ValueError(f"unknown view {view!r}")
        rows = []
        for inv_id in self.ids():
            inv = self._read(inv_id)
            corpus = self.corpora.get(inv.corpus_ref)
            tweet = corpus.records.get(inv.config.investigative_tweet_id)
            metrics_doc = (inv.artifacts or {}).get("metrics")
            row = {
                "id": inv.id,
                "state": inv.state,
                "tweet_id": inv.config.investigative_tweet_id,
                "tweet_text": tweet.text if tweet else None,
                "propagation_level": metrics_doc["propagation_level"] if metrics_doc else None,
                "skepticism": metrics_doc["skepticism"] if metrics_doc else None,
                "category": metrics_doc["category"] if metrics_doc else None,
            }
            if view == "full":
                row["summary"] = (inv.artifacts or {}).get("summary")
                row["metrics"] = metrics_doc
                row["datasets"] = {
                    kind: f"/investigations/{inv.id}/datasets/{kind}"
                    for kind in DATASET_KINDS
                }
                row["created_at"] = inv.created_at
                row["updated_at"] = inv.updated_at
            rows.append(row)
        return rows

    def scatter_rows(self) -> list[tuple[str, dict]]:
        rows = []
        for inv_id in self.ids():
            inv = self._read(inv_id)
            if inv.state == STATE_COMPUTED and inv.artifacts:
                rows.append((inv.id, inv.artifacts["metrics"]))
        return rows

    # -- story browsing (per-bin listings, tweet and profile lookups) -----

    def _story_records(self, inv: Investigation) -> list[TweetRecord]:
        if inv.state != STATE_COMPUTED or not inv.artifacts:
            raise DraftArtifactsError(inv.id)
        corpus = self.corpora.get(inv.corpus_ref)
        return [corpus.records[i] for i in inv.artifacts["relevant"]["tweet_ids"]]

    @staticmethod
    def _tweet_doc(rec: TweetRecord) -> dict:
        return {
            "tweet_id": rec.tweet_id,
            "created_at": format_utc(rec.created_at),
            "text": rec.text,
            "retweet_count": rec.retweet_count,
            "is_retweet": rec.is_retweet,
            "retweet_of": rec.retweet_of,
            "user": {
                "user_id": rec.author.user_id,
                "screen_name": rec.author.screen_name,
                "followers_count": rec.author.followers_count,
                "verified": rec.author.verified,
            },
        }

    def bin_listing(
        self, inv_id: str, interval_start: str, sort: str = "time", direction: str = "asc"
    ) -> list[dict]:
        """One timeline bin's tweets under a server-side ordering."""
        inv = self._read(inv_id)
        records = self._story_records(inv)
        start = parse_utc(interval_start)
        return [self._tweet_doc(r) for r in list_bin(records, start, sort, direction)]

    def tweet_detail(self, inv_id: str, tweet_id: int) -> dict:
        inv = self._read(inv_id)
        records = self._story_records(inv)
        for rec in records:
            if rec.tweet_id == tweet_id:
                return self._tweet_doc(rec)
        raise KeyError(tweet_id)

    def user_profile(self, inv_id: str, user_id: int) -> dict:
        """Profile fields plus the user's tweets inside this story."""
        inv = self._read(inv_id)
        records = self._story_records(inv)
        authored = [r for r in records if r.author.user_id == user_id]
        if not authored:
            raise KeyError(user_id)
        author = authored[0].author
        return {
            "user_id": author.user_id,
            "screen_name": author.screen_name,
            "description": author.description,
            "followers_count": author.followers_count,
            "verified": author.verified,
            "account_created_at": format_utc(author.account_created_at)
            if author.account_created_at
            else None,
            "tweets": [self._tweet_doc(r) for r in authored],
        }

"""HTTP API over the investigation store.

Thin by design: every number a client sees is computed by the pipeline
and read back verbatim from the stored artifacts.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel

from .models import ConfigValidationError
from .relevance import rate_keyword, suggest_keywords
from .store import (
    DraftArtifactsError,
    InvestigationStore,
    UnknownDatasetError,
    UnknownInvestigationError,
    UnknownTweetError,
)


class CreateInvestigationBody(BaseModel):
    tweet_id: int
    corpus: Optional[str] = None


def create_app(store: InvestigationStore) -> FastAPI:
    app = FastAPI(title="storytrace", version="0.1.0")
    app.state.store = store

    def _get_or_404(inv_id: str):
        try:
            return store.get(inv_id)
        except UnknownInvestigationError:
            raise HTTPException(status_code=404, detail=f"unknown investigation {inv_id}")

    @app.post("/investigations", status_code=201)
    def create_investigation(body: CreateInvestigationBody):
        try:
            inv = store.create(body.tweet_id, body.corpus)
        except UnknownTweetError:
            raise HTTPException(status_code=404, detail=f"tweet {body.tweet_id} not in corpus")
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"id": inv.id, "state": inv.state}

    @app.get("/investigations/{inv_id}")
    def get_investigation(inv_id: str):
        return _get_or_404(inv_id).to_document(include_artifacts=False)

    @app.put("/investigations/{inv_id}/config")
    def put_config(inv_id: str, patch: dict):
        _get_or_404(inv_id)
        try:
            inv = store.refine(inv_id, patch)
        except ConfigValidationError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except UnknownTweetError as exc:
            raise HTTPException(status_code=404, detail=f"tweet {exc.args[0]} not in corpus")
        return inv.to_document(include_artifacts=False)

    @app.get("/investigations/{inv_id}/datasets/{kind}")
    def get_dataset(inv_id: str, kind: str):
        _get_or_404(inv_id)
        try:
            return store.dataset(inv_id, kind)
        except UnknownDatasetError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except DraftArtifactsError:
            raise HTTPException(
                status_code=409,
                detail="investigation has no computed artifacts yet; refine it first",
            )

    @app.get("/investigations/{inv_id}/bins/{interval_start}")
    def get_bin(
        inv_id: str,
        interval_start: str,
        sort: str = Query("time"),
        direction: str = Query("asc"),
    ):
        _get_or_404(inv_id)
        try:
            return store.bin_listing(inv_id, interval_start, sort, direction)
        except DraftArtifactsError:
            raise HTTPException(status_code=409, detail="no computed artifacts yet")
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/investigations/{inv_id}/tweets/{tweet_id}")
    def get_tweet(inv_id: str, tweet_id: int):
        _get_or_404(inv_id)
        try:
            return store.tweet_detail(inv_id, tweet_id)
        except DraftArtifactsError:
            raise HTTPException(status_code=409, detail="no computed artifacts yet")
        except KeyError:
            raise HTTPException(status_code=404, detail=f"tweet {tweet_id} not in this story")

    @app.get("/investigations/{inv_id}/users/{user_id}")
    def get_user(inv_id: str, user_id: int):
        _get_or_404(inv_id)
        try:
            return store.user_profile(inv_id, user_id)
        except DraftArtifactsError:
            raise HTTPException(status_code=409, detail="no computed artifacts yet")
        except KeyError:
            raise HTTPException(status_code=404, detail=f"user {user_id} not in this story")

    @app.get("/stories")
    def stories(view: str = Query("condensed")):
        try:
            return store.list_stories(view)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/keywords/rate")
    def keywords_rate(investigation: str, term: str):
        inv = _get_or_404(investigation)
        if not term.strip():
            raise HTTPException(status_code=422, detail="empty term")
        corpus = store.corpus_for(inv)
        pivot = corpus.records.get(inv.config.investigative_tweet_id)
        if pivot is None:
            raise HTTPException(status_code=404, detail="investigative tweet not in corpus")
        rating = rate_keyword(corpus, term, pivot)
        return {
            "term": rating.term,
            "cohesion": rating.cohesion,
            "affinity": rating.affinity,
            "rating": rating.rating,
        }

    @app.get("/keywords/suggest")
    def keywords_suggest(investigation: str, k: int = Query(10, ge=1)):
        inv = _get_or_404(investigation)
        corpus = store.corpus_for(inv)
        pivot = corpus.records.get(inv.config.investigative_tweet_id)
        if pivot is None:
            raise HTTPException(status_code=404, detail="investigative tweet not in corpus")
        return {"terms": suggest_keywords(corpus, pivot, inv.config, k)}

    return app

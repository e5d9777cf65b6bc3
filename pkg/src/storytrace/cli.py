"""Command-line entry points: one-shot investigation, API server, scatter export."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .corpus import load_corpus
from .metrics import StoryMetrics, write_scatter_csv
from .models import ConfigValidationError, InvestigationConfig
from .pipeline import artifact_documents, canonical_json, run_pipeline, STATUS_OK
from .store import InvestigationStore


@click.group()
def main():
    """Investigate how a story spread through an archived tweet corpus."""


@main.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--tweet", "tweet_id", required=True, type=int, help="Investigative tweet id.")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_dir", type=click.Path(), default=None, help="Write artifact JSON here.")
@click.option("--summary-only", is_flag=True, help="Write/print only the summary.")
def investigate(corpus_path, tweet_id, config_path, out_dir, summary_only):
    """Run the full pipeline once and print the report."""
    corpus = load_corpus(corpus_path)
    doc = json.loads(Path(config_path).read_text(encoding="utf-8"))
    doc["investigative_tweet_id"] = tweet_id
    try:
        config = InvestigationConfig.from_document(doc)
        config.validate()
    except ConfigValidationError as exc:
        raise click.ClickException(f"invalid config: {exc}")
    if tweet_id not in corpus.records:
        raise click.ClickException(f"tweet {tweet_id} not found in corpus")

    artifacts = run_pipeline(corpus, config)
    if artifacts.status != STATUS_OK:
        click.echo("Empty story: no tweets passed the filter. Loosen the config and retry.")
        sys.exit(0)

    click.echo(artifacts.summary.headline_text)
    click.echo(f"Relevant tweets: {len(artifacts.relevant.tweet_ids)} "
               f"({artifacts.relevant.originals_count} originals, "
               f"{artifacts.relevant.retweets_count} retweets)")

    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        docs = artifact_documents(artifacts)
        kinds = ["summary"] if summary_only else sorted(docs)
        for kind in kinds:
            (out / f"{kind}.json").write_text(canonical_json(docs[kind]), encoding="utf-8")
        click.echo(f"Wrote {len(kinds)} artifact file(s) to {out}")


@main.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--listen", default="127.0.0.1:8000", show_default=True)
def serve(corpus_path, store_dir, listen):
    """Serve the investigation API over HTTP."""
    import uvicorn

    from .service import create_app

    store = InvestigationStore(store_dir, default_corpus=corpus_path)
    store.corpora.get(corpus_path)  # fail fast on an unreadable corpus
    host, _, port = listen.rpartition(":")
    app = create_app(store)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


@main.command()
@click.option("--store", "store_dir", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
def scatter(store_dir, out_path):
    """Export propagation-vs-skepticism rows for every computed story."""
    store = InvestigationStore(store_dir)
    rows = [
        (story_id, StoryMetrics.from_document(doc))
        for story_id, doc in store.scatter_rows()
    ]
    count = write_scatter_csv(out_path, rows)
    click.echo(f"Wrote {count} story row(s) to {out_path}")


if __name__ == "__main__":
    main()

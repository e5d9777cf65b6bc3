import json
import random
from datetime import datetime, timedelta, timezone

import pytest

from storytrace.corpus import Corpus
from storytrace.models import TweetRecord, UserRef, serialize_record

T0 = datetime(2014, 3, 27, 14, 0, tzinfo=timezone.utc)


def at(minutes=0, seconds=0):
    return T0 + timedelta(minutes=minutes, seconds=seconds)


def make_user(user_id, screen_name=None, followers=100, verified=False):
    return UserRef(
        user_id=user_id,
        screen_name=screen_name or f"user{user_id}",
        followers_count=followers,
        verified=verified,
    )


def make_tweet(
    tweet_id,
    text="hello world",
    created_at=None,
    user=None,
    retweet_count=0,
    retweet_of=None,
    urls=(),
    hashtags=(),
    lang=None,
):
    return TweetRecord(
        tweet_id=tweet_id,
        created_at=created_at or T0,
        text=text,
        author=user or make_user(1000 + tweet_id),
        retweet_count=retweet_count,
        retweet_of=retweet_of,
        urls=tuple(urls),
        hashtags=tuple(hashtags),
        lang=lang,
    )


def make_corpus(*records):
    return Corpus.from_records(records)


@pytest.fixture(scope="session")
def story_fixture():
    from .fixture_story import build_story

    return build_story()


@pytest.fixture(scope="session")
def story_corpus(story_fixture):
    return Corpus.from_records(story_fixture.records)


def write_corpus_file(path, records, seed=20140327):
    """Write records as shuffled newline-delimited JSON, like a real dump."""
    shuffled = list(records)
    random.Random(seed).shuffle(shuffled)
    with open(path, "w", encoding="utf-8") as fh:
        for rec in shuffled:
            fh.write(json.dumps(serialize_record(rec), ensure_ascii=False) + "\n")
    return path


@pytest.fixture(scope="session")
def corpus_file(tmp_path_factory, story_fixture):
    path = tmp_path_factory.mktemp("corpus") / "story.jsonl"
    return str(write_corpus_file(path, story_fixture.records))


def graph_from_events(events):
    """Build a retweet graph straight from (retweeter, author) pairs."""
    from storytrace.networks import GraphNode, RetweetGraph

    graph = RetweetGraph()
    users = sorted({u for pair in events for u in pair})
    graph.nodes = {
        uid: GraphNode(user_id=uid, screen_name=f"u{uid}", verified=False, tweets_in_story=0)
        for uid in users
    }
    weights = {}
    for src, dst in events:
        weights[(src, dst)] = weights.get((src, dst), 0) + 1
    graph.edges = dict(sorted(weights.items()))
    return graph


@pytest.fixture
def plane_mini_corpus():
    """A tiny hand-checkable story: one original, two retweets, one refutation."""
    original = make_tweet(
        1,
        text="Picture of the airplane in the sea right now in Telde Gran Canaria",
        created_at=at(53),
        user=make_user(11, "reporter", followers=8000),
        retweet_count=600,
    )
    records = [
        original,
        make_tweet(
            2,
            text="RT @reporter: Picture of the airplane in the sea right now in Telde Gran Canaria",
            created_at=at(55),
            user=make_user(12),
            retweet_of=1,
        ),
        make_tweet(
            3,
            text="RT @reporter: Picture of the airplane in the sea right now in Telde Gran Canaria",
            created_at=at(57),
            user=make_user(13),
            retweet_of=1,
        ),
        make_tweet(
            4,
            text="The airplane story is fake, it was a tug boat",
            created_at=at(75),
            user=make_user(14, "factcheck", verified=True),
            retweet_count=120,
        ),
    ]
    return make_corpus(*records)

import json
from datetime import timedelta

import pytest

from storytrace.corpus import CorpusError, SearchWindow, fetch_recent, load_corpus, search
from storytrace.models import serialize_record

from .conftest import at, make_corpus, make_tweet


def write_jsonl(path, objects):
    path.write_text("\n".join(json.dumps(o) for o in objects), encoding="utf-8")


def wire(rec):
    return serialize_record(rec)


def test_load_empty_file(tmp_path):
    f = tmp_path / "corpus.jsonl"
    f.write_text("", encoding="utf-8")
    corpus = load_corpus(f)
    assert len(corpus) == 0 and corpus.epoch is None


def test_load_skips_invalid_records(tmp_path):
    f = tmp_path / "corpus.jsonl"
    good1 = wire(make_tweet(1, text="uno"))
    bad = {"id": 2}  # no timestamp, no user
    good2 = wire(make_tweet(3, text="tres"))
    write_jsonl(f, [good1, bad, good2])
    corpus = load_corpus(f)
    assert len(corpus) == 2
    assert corpus.rejected_count == 1
    assert corpus.rejection_reasons == {"missing timestamp": 1}


def test_load_duplicate_ids_first_wins(tmp_path):
    f = tmp_path / "corpus.jsonl"
    first = wire(make_tweet(1, text="first version"))
    second = wire(make_tweet(1, text="second version"))
    write_jsonl(f, [first, second])
    corpus = load_corpus(f)
    assert len(corpus) == 1
    assert corpus.records[1].text == "first version"
    assert corpus.duplicate_count == 1


def test_load_mostly_garbage_is_fatal(tmp_path):
    f = tmp_path / "corpus.jsonl"
    write_jsonl(f, [wire(make_tweet(1)), {"junk": 1}, {"junk": 2}])
    with pytest.raises(CorpusError, match="corpus unusable"):
        load_corpus(f)


def test_load_unreadable_file_is_fatal(tmp_path):
    with pytest.raises(CorpusError):
        load_corpus(tmp_path / "missing.jsonl")


def test_search_no_match():
    corpus = make_corpus(make_tweet(1, text="nothing to see"))
    assert search(corpus, "airplane") == []


def test_search_empty_query_rejected():
    corpus = make_corpus(make_tweet(1))
    with pytest.raises(ValueError, match="empty query"):
        search(corpus, "   ")
    with pytest.raises(ValueError):
        search(corpus, "x", limit=0)
    with pytest.raises(ValueError):
        search(corpus, "x", limit=18001)


def test_search_newest_first_with_limit():
    records = [
        make_tweet(i, text="plane spotted", created_at=at(i)) for i in range(1, 6)
    ]
    corpus = make_corpus(*records)
    got = search(corpus, "plane", limit=2)
    assert [r.tweet_id for r in got] == [5, 4]


def test_search_tie_breaks_on_higher_id():
    corpus = make_corpus(
        make_tweet(1, text="plane", created_at=at(0)),
        make_tweet(2, text="plane", created_at=at(0)),
    )
    assert [r.tweet_id for r in search(corpus, "plane")] == [2, 1]


def test_search_case_insensitive_token_match():
    corpus = make_corpus(make_tweet(1, text="PLANE in the SEA"))
    assert len(search(corpus, "plane")) == 1
    # substrings of a token do not match
    assert search(corpus, "plan") == []


def test_search_phrase_requires_contiguity():
    corpus = make_corpus(
        make_tweet(1, text="tug boat in the harbor"),
        make_tweet(2, text="the tug pulled a boat"),
    )
    got = search(corpus, '"tug boat"')
    assert [r.tweet_id for r in got] == [1]


def test_search_hashtag_tokens_keep_prefix():
    corpus = make_corpus(make_tweet(1, text="breaking #telde now"))
    assert len(search(corpus, "#telde")) == 1
    assert search(corpus, "telde") == []


def test_search_window_excludes_old_records():
    old = make_tweet(1, text="plane", created_at=at(0))
    new = make_tweet(2, text="plane", created_at=at(0) + timedelta(days=12))
    corpus = make_corpus(old, new)
    # Default window: now = newest record, 9-day horizon. The 12-day-old
    # record matches the text but is outside the window.
    got = search(corpus, "plane", window=SearchWindow())
    assert [r.tweet_id for r in got] == [2]
    # A wider horizon readmits it.
    got = search(corpus, "plane", window=SearchWindow(horizon_days=30))
    assert [r.tweet_id for r in got] == [2, 1]


def test_search_window_excludes_future_of_simulation_clock():
    early = make_tweet(1, text="plane", created_at=at(0))
    late = make_tweet(2, text="plane", created_at=at(60))
    corpus = make_corpus(early, late)
    got = search(corpus, "plane", window=SearchWindow(now=at(30)))
    assert [r.tweet_id for r in got] == [1]


def test_search_matches_brute_force_scan():
    records = []
    words = ["plane", "sea", "boat", "telde", "canaria"]
    for i in range(1, 200):
        text = " ".join(words[j % 5] for j in range(i, i + 3))
        records.append(make_tweet(i, text=text, created_at=at(i % 50)))
    corpus = make_corpus(*records)
    window = SearchWindow()
    for query in words + ['"plane sea"', '"sea boat"']:
        got = [r.tweet_id for r in search(corpus, query, window=window)]
        from storytrace.textkit import match_tokens, parse_term, contains_term

        expected = [
            r.tweet_id
            for r in sorted(records, key=lambda r: (r.created_at, r.tweet_id), reverse=True)
            if contains_term(match_tokens(r.text), parse_term(query))
        ]
        assert got == expected, query


def test_fetch_recent_caps_at_count():
    records = [make_tweet(i, text="plane", created_at=at(i)) for i in range(1, 251)]
    corpus = make_corpus(*records)
    got = fetch_recent(corpus, "plane")
    assert len(got) == 100
    assert got[0].tweet_id == 250


def test_fetch_recent_undersupply_and_empty_term():
    corpus = make_corpus(*[make_tweet(i, text="plane", created_at=at(i)) for i in range(7)])
    assert len(fetch_recent(corpus, "plane")) == 7
    with pytest.raises(ValueError):
        fetch_recent(corpus, "")


def test_search_deterministic():
    records = [make_tweet(i, text="plane sea", created_at=at(i % 3)) for i in range(50)]
    corpus = make_corpus(*records)
    a = [r.tweet_id for r in search(corpus, "plane")]
    b = [r.tweet_id for r in search(corpus, "plane")]
    assert a == b

import pytest

from storytrace.negation import (
    DEFAULT_NEGATION_TERMS,
    NegationLexicon,
    is_negation,
    load_lexicon_file,
    split_story,
)

from .conftest import at, make_tweet


def test_default_lexicon_hits():
    lex = NegationLexicon()
    assert is_negation(make_tweet(1, text="This is a hoax"), lex)
    assert is_negation(make_tweet(2, text="that's FAKE news"), lex)
    assert is_negation(make_tweet(3, text="the rumor is false, move on"), lex)


def test_plain_story_text_is_not_negation():
    lex = NegationLexicon()
    assert not is_negation(make_tweet(1, text="Picture of the airplane in the sea"), lex)


def test_phrase_terms_need_contiguity():
    lex = NegationLexicon(base_terms=("not true",))
    assert is_negation(make_tweet(1, text="this is not true at all"), lex)
    assert not is_negation(make_tweet(2, text="not sure it is true"), lex)


def test_added_terms_extend_lexicon():
    lex = NegationLexicon.customized(added=["falso"])
    assert is_negation(make_tweet(1, text="Es falso"), lex)


def test_removed_terms_stop_matching():
    lex = NegationLexicon.customized(removed=["fake"])
    assert not is_negation(make_tweet(1, text="fake"), lex)
    assert is_negation(make_tweet(2, text="a hoax"), lex)


def test_lexicon_must_not_be_empty():
    with pytest.raises(ValueError):
        NegationLexicon(base_terms=(), added=(), removed=())
    with pytest.raises(ValueError):
        NegationLexicon.customized(removed=DEFAULT_NEGATION_TERMS)


def test_retweets_classified_by_own_text():
    lex = NegationLexicon()
    rt = make_tweet(2, text="RT @x: complete hoax", retweet_of=1)
    assert is_negation(rt, lex)


def test_split_story_partitions_in_order():
    lex = NegationLexicon()
    texts = [
        "airplane in the sea",          # -
        "it's a hoax people",           # +
        "more airplane photos",         # -
        "fake, that's a tug boat",      # +
        "rescue teams dispatched",      # -
        "so fake",                      # +
        "watching the news",            # -
        "nothing to add",               # -
        "eyewitness account",           # -
        "emergency services on site",   # -
    ]
    tweets = [make_tweet(i + 1, text=t, created_at=at(i)) for i, t in enumerate(texts)]
    negating, other = split_story(tweets, lex)
    assert negating == (2, 4, 6)
    assert other == (1, 3, 5, 7, 8, 9, 10)
    assert len(negating) + len(other) == len(tweets)


def test_split_story_boundaries():
    lex = NegationLexicon()
    assert split_story([], lex) == ((), ())
    all_neg = [make_tweet(1, text="hoax"), make_tweet(2, text="fake")]
    assert split_story(all_neg, lex) == ((1, 2), ())


def test_adding_term_never_shrinks_negating_side():
    tweets = [
        make_tweet(1, text="es un bulo"),
        make_tweet(2, text="complete hoax"),
        make_tweet(3, text="normal tweet"),
    ]
    base = NegationLexicon()
    extended = NegationLexicon.customized(added=["bulo"])
    neg_base, _ = split_story(tweets, base)
    neg_ext, _ = split_story(tweets, extended)
    assert set(neg_base) <= set(neg_ext)


def test_lexicon_file_round_trip(tmp_path):
    f = tmp_path / "lex.txt"
    f.write_text("# comment\nfalso\nbulo  \n\nmentira # trailing\n", encoding="utf-8")
    assert load_lexicon_file(f) == ("falso", "bulo", "mentira")

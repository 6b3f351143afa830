import io
import json
import string

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from groundkernel.errors import DictionarySyntaxError, DuplicateEntry, EmptyToken, NotClosed
from groundkernel.lexicon import (
    Dictionary,
    Word,
    normalize_token,
    parse_json,
    parse_text,
    read_text_entries,
    validate,
)


@pytest.mark.parametrize(
    "raw, expected",
    [("Apple", "apple"), ("fruit,", "fruit"), ("not", "not"), ("  (Dark).  ", "dark"), ("don't", "don't")],
)
def test_normalize_token(raw, expected):
    assert normalize_token(raw).token == expected


@pytest.mark.parametrize("raw", ["", "   ", ",", "...!"])
def test_normalize_token_rejects_empty(raw):
    with pytest.raises(EmptyToken):
        normalize_token(raw)


def test_non_ascii_kept():
    assert normalize_token("Éclair") == "éclair"


@given(st.text(min_size=1))
def test_normalize_is_idempotent(raw):
    try:
        once = normalize_token(raw)
    except ValueError:
        return
    assert normalize_token(once.token) == once
    assert normalize_token(str(once)) == once


def test_word_equality_is_token_equality():
    assert Word("a") == Word("a") == "a"
    assert hash(Word("a")) == hash("a")


def test_parse_toy(toy):
    assert len(toy) == 15
    assert toy["apple"] == {"red", "fruit"}
    assert toy["not"] == {"not"}
    assert toy["color"] == {"dark", "or", "light"}


def test_parse_text_dedups_and_normalizes():
    d = parse_text(io.StringIO("A: b B, b\nb: b\n"))
    assert d["a"] == {"b"}


def test_comments_and_blank_lines():
    d = parse_text(io.StringIO("# header\n\nx: x\n   # indented comment\n"))
    assert list(d) == ["x"]


@pytest.mark.parametrize("text, lineno", [("bad:\n", 1), ("ok: ok\nno colon here\n", 2), ("x: , ;\n", 1)])
def test_syntax_errors(text, lineno):
    with pytest.raises(DictionarySyntaxError) as info:
        read_text_entries(io.StringIO(text))
    assert info.value.lineno == lineno


def test_duplicate_entry():
    with pytest.raises(DuplicateEntry) as info:
        parse_text(io.StringIO("a: a\nA: a\n"))
    assert info.value.word == "a"


def test_parse_text_rejects_open_dictionary():
    with pytest.raises(NotClosed) as info:
        parse_text(io.StringIO("a: b\n"))
    assert info.value.report.missing_words == {("a", "b")}


def test_allow_open():
    d = parse_text(io.StringIO("a: b c\nc: a\n"), allow_open=True)
    assert d.open_words == {"b"}
    assert set(d) == {"a", "c"}


def test_parse_json():
    assert dict(parse_json(io.StringIO('{"or": ["or"]}'))) == {"or": {"or"}}
    d = parse_json(io.StringIO('{"a": ["b"], "b": ["a"]}'))
    assert len(d) == 2


@pytest.mark.parametrize(
    "src", ['{"a": []}', "[1, 2]", "[]", '{"a": "b"}', '{"a": [1]}', "{not json", '{"a": ["x y"]}']
)
def test_parse_json_errors(src):
    with pytest.raises(DictionarySyntaxError):
        parse_json(io.StringIO(src))


def test_parse_json_duplicate_key():
    with pytest.raises(DuplicateEntry):
        parse_json(io.StringIO('{"a": ["a"], "a": ["a"]}'))


def test_validate_examples(toy):
    assert validate(toy).ok
    report = validate({"a": {"b"}})
    assert not report.ok
    assert report.missing_words == {("a", "b")}
    assert validate({"a": {"a"}}).ok
    assert validate({"a": {"a"}}).self_defined == {"a"}


def test_validate_reports_every_defect():
    report = validate([("a", ["b"]), ("a", ["a"]), ("c", [])])
    assert report.missing_words == {("a", "b")}
    assert report.duplicate_definienda == {"a"}
    assert report.empty_definitions == {"c"}
    assert not report.ok
    assert json.loads(json.dumps(report.to_json()))["ok"] is False


tokens = st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=4)


@st.composite
def closed_entries(draw):
    words = draw(st.lists(tokens, min_size=1, max_size=12, unique=True))
    return {w: draw(st.sets(st.sampled_from(words), min_size=1, max_size=4)) for w in words}


@given(closed_entries())
def test_text_round_trip(entries):
    d = Dictionary(entries)
    again = parse_text(io.StringIO(d.to_text()))
    assert again == d
    assert parse_json(io.StringIO(json.dumps(d.to_json()))) == d


@given(closed_entries(), st.data())
def test_deleting_a_used_definition_breaks_closure(entries, data):
    used = sorted({d for w, ds in entries.items() for d in ds if d != w})
    assume(used)
    victim = data.draw(st.sampled_from(used))
    del entries[victim]
    assert not validate(entries).ok


def test_dictionary_is_read_only(toy):
    with pytest.raises(TypeError):
        toy["apple"] = {"x"}

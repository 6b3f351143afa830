"""Dictionary model: token normalization, parsing, closure validation."""

from __future__ import annotations

import json
import string
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import IO, Union

from groundkernel.errors import (
    DictionarySyntaxError,
    DuplicateEntry,
    EmptyToken,
    InvalidToken,
    NotClosed,
)

_EDGE_CHARS = string.whitespace + string.punctuation


class Word(str):
    """A normalized token. Compares and hashes like the plain string."""

    __slots__ = ()

    @property
    def token(self) -> str:
        return str(self)

    def __repr__(self):
        return f"Word({str(self)!r})"


def normalize_token(raw: str) -> Word:
    """Lowercase ``raw`` and strip surrounding whitespace and ASCII punctuation.

    >>> normalize_token("fruit,")
    Word('fruit')
    """
    if isinstance(raw, Word):
        return raw
    token = raw.lower().strip(_EDGE_CHARS)
    if not token:
        raise EmptyToken(f"nothing left of token {raw!r} after normalization")
    if any(ch.isspace() for ch in token):
        raise InvalidToken(f"token {raw!r} contains internal whitespace")
    return Word(token)


EntriesLike = Union[Mapping[str, Iterable[str]], Iterable[tuple[str, Iterable[str]]]]


def _pairs(entries: EntriesLike):
    if isinstance(entries, Mapping):
        return list(entries.items())
    return list(entries)


@dataclass(frozen=True)
class ValidationReport:
    missing_words: frozenset[tuple[str, str]] = frozenset()
    empty_definitions: frozenset[str] = frozenset()
    duplicate_definienda: frozenset[str] = frozenset()
    # warnings only; self-definition is legal (e.g. "not: not")
    self_defined: frozenset[str] = frozenset()

    @property
    def ok(self) -> bool:
        return not (self.missing_words or self.empty_definitions or self.duplicate_definienda)

    def summary(self) -> str:
        if self.ok:
            return "dictionary is closed"
        parts = []
        if self.missing_words:
            shown = ", ".join(f"{w}->{d}" for w, d in sorted(self.missing_words)[:5])
            parts.append(f"{len(self.missing_words)} undefined definiens use(s) ({shown})")
        if self.empty_definitions:
            parts.append(f"{len(self.empty_definitions)} empty definition(s)")
        if self.duplicate_definienda:
            parts.append(f"{len(self.duplicate_definienda)} duplicate definienda")
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "missing_words": [list(pair) for pair in sorted(self.missing_words)],
            "empty_definitions": sorted(self.empty_definitions),
            "duplicate_definienda": sorted(self.duplicate_definienda),
            "warnings": {"self_defined": sorted(self.self_defined)},
        }


def validate(entries: EntriesLike) -> ValidationReport:
    """Check raw entries for closure, empty definitions and duplicate definienda.

    ``entries`` is either a mapping or a sequence of ``(word, definientes)``
    pairs; only the pair form can carry duplicates.
    """
    pairs = _pairs(entries)
    counts = Counter(word for word, _ in pairs)
    defined = set(counts)
    missing = set()
    empty = set()
    loops = set()
    for word, definientes in pairs:
        definientes = set(definientes)
        if not definientes:
            empty.add(word)
        for d in definientes:
            if d not in defined:
                missing.add((word, d))
        if word in definientes:
            loops.add(word)
    return ValidationReport(
        missing_words=frozenset(missing),
        empty_definitions=frozenset(empty),
        duplicate_definienda=frozenset(w for w, n in counts.items() if n > 1),
        self_defined=frozenset(loops),
    )


class Dictionary(Mapping):
    """Immutable mapping from each definiendum to its set of definientes.

    Construction validates the entries and raises :class:`NotClosed` unless
    the report is ok.  With ``allow_open=True`` undefined definientes are
    tolerated and collected in :attr:`open_words`; they have no entry of
    their own.
    """

    __slots__ = ("_entries", "open_words", "report")

    def __init__(self, entries: EntriesLike, *, allow_open: bool = False):
        pairs = [
            (normalize_token(w), frozenset(normalize_token(d) for d in ds))
            for w, ds in _pairs(entries)
        ]
        report = validate(pairs)
        if report.duplicate_definienda:
            raise DuplicateEntry(min(report.duplicate_definienda))
        if report.empty_definitions or (report.missing_words and not allow_open):
            raise NotClosed(report)
        self._entries = MappingProxyType(dict(pairs))
        self.open_words = frozenset(d for _, d in report.missing_words)
        self.report = report

    def __getitem__(self, word):
        return self._entries[word]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Dictionary):
            return dict(self._entries) == dict(other._entries) and self.open_words == other.open_words
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"Dictionary({len(self)} entries, {len(self.open_words)} open)"

    @property
    def is_open(self) -> bool:
        return bool(self.open_words)

    def words(self) -> list[Word]:
        return sorted(self._entries)

    def to_text(self) -> str:
        lines = [f"{w}: {' '.join(sorted(self._entries[w]))}" for w in self.words()]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json(self) -> dict:
        return {w: sorted(self._entries[w]) for w in self.words()}


def read_text_entries(source: IO[str] | Iterable[str]) -> list[tuple[Word, frozenset[Word]]]:
    """Read ``word : tok tok ...`` lines without checking closure or duplicates."""
    pairs = []
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head, sep, tail = stripped.partition(":")
        if not sep:
            raise DictionarySyntaxError("missing ':' separator", lineno)
        try:
            word = normalize_token(head)
        except (EmptyToken, InvalidToken) as exc:
            raise DictionarySyntaxError(f"bad definiendum {head.strip()!r}", lineno) from exc
        definientes = set()
        for raw in tail.split():
            try:
                definientes.add(normalize_token(raw))
            except EmptyToken:
                continue
        if not definientes:
            raise DictionarySyntaxError(f"empty definition for {word!r}", lineno)
        pairs.append((word, frozenset(definientes)))
    return pairs


class _ObjectPairs(list):
    pass


def read_json_entries(source: IO[str] | str) -> list[tuple[Word, frozenset[Word]]]:
    """Read a JSON object of word -> list of words, keeping duplicate keys visible."""
    text = source if isinstance(source, str) else source.read()
    try:
        raw_pairs = json.loads(text, object_pairs_hook=_ObjectPairs)
    except json.JSONDecodeError as exc:
        raise DictionarySyntaxError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(raw_pairs, _ObjectPairs):
        raise DictionarySyntaxError("top level must be an object")
    pairs = []
    for key, value in raw_pairs:
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise DictionarySyntaxError(f"definition of {key!r} must be an array of strings")
        try:
            word = normalize_token(key)
            definientes = set()
            for raw in value:
                try:
                    definientes.add(normalize_token(raw))
                except EmptyToken:
                    continue
        except (EmptyToken, InvalidToken) as exc:
            raise DictionarySyntaxError(str(exc)) from exc
        if not definientes:
            raise DictionarySyntaxError(f"empty definition for {word!r}")
        pairs.append((word, frozenset(definientes)))
    return pairs


def parse_text(source, *, allow_open: bool = False) -> Dictionary:
    return Dictionary(read_text_entries(source), allow_open=allow_open)


def parse_json(source, *, allow_open: bool = False) -> Dictionary:
    return Dictionary(read_json_entries(source), allow_open=allow_open)

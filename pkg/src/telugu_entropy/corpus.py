"""Corpus ingestion, letter-frequency tables and word-length histograms."""

from __future__ import annotations

import enum
import logging
import math
import re
import string
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from os import PathLike, fspath
from typing import Iterable, Sequence

from .entropy import SPACE, FrequencyTable, char_counts
from .errors import CorpusIOError, EmptyTableError, TeluguEntropyError, UnmappedCodepointError
from .mapping import VIRAMA_TOKEN, MappingTable, load_mapping
from .syllables import Word, syllabify, tokenize
from .transliterate import to_roman

log = logging.getLogger(__name__)

# Table 1 layout: lowercase column, uppercase column, then space and '^'
LETTER_ORDER = tuple(string.ascii_lowercase) + tuple(string.ascii_uppercase) + (SPACE, VIRAMA_TOKEN)

_CHUNKS = re.compile(r"(\s+)")


class LengthUnit(str, enum.Enum):
    AKSHARA = "akshara"
    CHAR = "char"


@dataclass(frozen=True)
class Document:
    id: str
    raw: str
    roman: str
    words: tuple[Word, ...]
    skipped: tuple[str, ...] = ()   # roman tokens that do not segment (e.g. Latin passthrough)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...] = ()
    char_budget: int | None = None

    @property
    def words(self) -> list[Word]:
        return [w for d in self.documents for w in d.words]

    @property
    def roman(self) -> str:
        return "\n".join(d.roman for d in self.documents)

    @property
    def raw(self) -> str:
        return "\n".join(d.raw for d in self.documents)

    def __len__(self) -> int:
        return len(self.words)


def _segment(roman: str, table: MappingTable) -> tuple[tuple[Word, ...], tuple[str, ...]]:
    words, skipped = [], []
    for tok in tokenize(roman):
        try:
            words.append(Word(tok, tuple(syllabify(tok, table))))
        except TeluguEntropyError:
            skipped.append(tok)
    if skipped:
        log.warning("%d token(s) did not segment and were left out of syllable counts", len(skipped))
    return tuple(words), tuple(skipped)


def make_document(doc_id: str, raw: str, table: MappingTable | None = None,
                  budget: int | None = None) -> tuple[Document, int]:
    """Build one document; return it with the number of Roman chars it used.

    With a ``budget`` the text is cut after the last whitespace-delimited
    word whose Roman form still fits.
    """
    table = table or load_mapping()
    roman = to_roman(raw, table)
    if budget is not None and len(roman) > budget:
        raw_parts, roman_parts, used = [], [], 0
        parts = _CHUNKS.split(raw)
        for k in range(0, len(parts), 2):
            sep = parts[k - 1] if k else ""
            chunk = parts[k]
            if not chunk:
                continue
            r_sep = to_roman(sep, table) if raw_parts else ""
            r_chunk = to_roman(chunk, table)
            if used + len(r_sep) + len(r_chunk) > budget:
                break
            raw_parts += [sep if raw_parts else "", chunk]
            roman_parts += [r_sep, r_chunk]
            used += len(r_sep) + len(r_chunk)
        raw, roman = "".join(raw_parts), "".join(roman_parts)
    words, skipped = _segment(roman, table)
    return Document(doc_id, raw, roman, words, skipped), len(roman)


def from_texts(texts: Iterable[str], table: MappingTable | None = None,
               char_budget: int | None = None) -> Corpus:
    """Corpus from in-memory Telugu texts (ids are their positions)."""
    table = table or load_mapping()
    docs, remaining = [], char_budget
    for k, raw in enumerate(texts):
        doc, used = make_document(str(k), raw, table, remaining)
        docs.append(doc)
        if remaining is not None:
            remaining = max(remaining - used, 0)
    return Corpus(tuple(docs), char_budget)


def ingest(paths: Sequence[str | PathLike], table: MappingTable | None = None,
           char_budget: int | None = None) -> Corpus:
    """Read UTF-8 files, transliterate, tokenize and syllabify them.

    ``char_budget`` caps the Roman character count (spaces included) over
    all files in order.
    """
    table = table or load_mapping()
    texts = []
    for p in paths:
        try:
            with open(p, encoding="utf-8") as fh:
                texts.append(fh.read())
        except (OSError, UnicodeDecodeError) as exc:
            raise CorpusIOError(f"{fspath(p)}: {exc}") from exc
    docs, remaining = [], char_budget
    for p, raw in zip(paths, texts):
        try:
            doc, used = make_document(fspath(p), raw, table, remaining)
        except UnmappedCodepointError as exc:
            raise exc.with_path(fspath(p)) from None
        docs.append(doc)
        if remaining is not None:
            remaining = max(remaining - used, 0)
    return Corpus(tuple(docs), char_budget)


@dataclass(frozen=True)
class LetterFrequencyRow:
    symbol: str
    percent: float
    count: int = 0


def round_percent(count: int, total: int) -> float:
    """Exact ``100 * count / total`` rounded half-up to 2 decimals."""
    d = Fraction(100 * count, total)
    q = (Decimal(d.numerator) / Decimal(d.denominator)).quantize(Decimal("0.01"), ROUND_HALF_UP)
    return float(q)


def letter_table(corpus: Corpus | str) -> list[LetterFrequencyRow]:
    """Case-sensitive letter percentages, a-z then A-Z, space, ``^``.

    Rows for every letter, the space and ``^`` are always present, zero
    rows included.
    """
    roman = corpus.roman if isinstance(corpus, Corpus) else corpus
    counts = char_counts(roman)
    return letter_rows(counts)


def letter_rows(counts: FrequencyTable) -> list[LetterFrequencyRow]:
    total = counts.total
    if total == 0:
        raise EmptyTableError("no countable characters")
    return [LetterFrequencyRow(s, round_percent(counts[s], total), counts[s]) for s in LETTER_ORDER]


@dataclass(frozen=True)
class WordLengthHistogram:
    counts: dict[int, int]
    unit: LengthUnit = LengthUnit.AKSHARA
    fractions: dict[int, float] = field(init=False)

    def __post_init__(self):
        total = sum(self.counts.values())
        if not total:
            raise EmptyTableError("no words to measure")
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))
        object.__setattr__(self, "fractions", {k: c / total for k, c in self.counts.items()})

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def fraction_below(self, threshold: int) -> float:
        return math.fsum(f for k, f in self.fractions.items() if k < threshold)


def word_length(word: Word, unit: LengthUnit | str = LengthUnit.AKSHARA) -> int:
    return len(word.syllables) if LengthUnit(unit) is LengthUnit.AKSHARA else len(word.surface)


def word_length_histogram(corpus: Corpus | Iterable[Word],
                          unit: LengthUnit | str = LengthUnit.AKSHARA) -> WordLengthHistogram:
    """Share of words by length, in aksharas or Roman characters."""
    words = corpus.words if isinstance(corpus, Corpus) else corpus
    counts: dict[int, int] = {}
    for w in words:
        k = word_length(w, unit)
        counts[k] = counts.get(k, 0) + 1
    return WordLengthHistogram(counts, LengthUnit(unit))

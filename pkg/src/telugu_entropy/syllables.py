"""Word tokenization, akshara segmentation and n-syllable windows.

Segmentation works on the Roman form. Every consonant between two vowels
attaches to the following vowel, so conjuncts stay whole (``padma`` ->
``pa``, ``dma``); anusvara and visarga close the syllable they follow, and
a consonant run ending in ``^`` is a syllable of its own (``N^``).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import OrphanMarkerError, UndecodableSequenceError
from .mapping import VIRAMA_TOKEN, MappingTable, load_mapping

_WORD = re.compile(r"[A-Za-z^]+")
_MEMO_LIMIT = 1 << 17


class ShortWordPolicy(str, enum.Enum):
    WHOLE_WORD = "whole"
    SKIP = "skip"


@dataclass(frozen=True)
class Akshara:
    onset: tuple[str, ...]
    nucleus: str | None
    coda: tuple[str, ...] = ()

    def __post_init__(self):
        if self.nucleus is None and (VIRAMA_TOKEN not in self.coda or not self.onset):
            raise ValueError("a vowel-less akshara needs consonants and a closing '^'")

    @cached_property
    def surface(self) -> str:
        return "".join(self.onset) + (self.nucleus or "") + "".join(self.coda)

    def __str__(self) -> str:
        return self.surface


@dataclass(frozen=True)
class Word:
    surface: str
    syllables: tuple[Akshara, ...]

    def __len__(self) -> int:
        return len(self.syllables)

    @cached_property
    def _surfaces(self) -> tuple[str, ...]:
        return tuple(s.surface for s in self.syllables)

    @property
    def syllable_surfaces(self) -> list[str]:
        return list(self._surfaces)


@dataclass(frozen=True)
class WindowSpec:
    n: int = 1
    short_word_policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"window size must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "short_word_policy", ShortWordPolicy(self.short_word_policy))


def tokenize(text: str) -> list[str]:
    """Split Roman text into word surfaces.

    Anything other than an ASCII letter or ``^`` separates words, so
    whitespace, punctuation and digits all drop out.
    """
    return _WORD.findall(text)


def syllabify(word: str, table: MappingTable | None = None) -> list[Akshara]:
    """Segment one Roman word into aksharas.

    >>> [str(a) for a in syllabify("kAryAlayaM")]
    ['kA', 'ryA', 'la', 'yaM']
    """
    table = table or load_mapping()
    key = ("syllabify", word)
    hit = table.memo.get(key)
    if hit is None:
        hit = table.memo[key] = tuple(_segment(word, table))
        if len(table.memo) > _MEMO_LIMIT:
            table.memo.clear()
    return list(hit)


def _segment(word: str, table: MappingTable) -> list[Akshara]:
    out: list[Akshara] = []
    onset: list[str] = []
    i = 0
    while i < len(word):
        token = table.match_token(word, i)
        if token is None:
            raise UndecodableSequenceError(word, i, "no token matches")
        kind = table.token_category(token)
        if kind == "C":
            onset.append(token)
            i += len(token)
        elif kind == "V":
            i += len(token)
            coda = []
            while i < len(word):
                nxt = table.match_token(word, i)
                if nxt is None or table.token_category(nxt) != "M":
                    break
                coda.append(nxt)
                i += len(nxt)
            out.append(Akshara(tuple(onset), token, tuple(coda)))
            onset = []
        elif kind == "^":
            if not onset:
                raise OrphanMarkerError(word, i)
            out.append(Akshara(tuple(onset), None, (VIRAMA_TOKEN,)))
            onset = []
            i += 1
        else:
            raise OrphanMarkerError(word, i)
    if onset:
        start = len(word) - len("".join(onset))
        raise UndecodableSequenceError(word, start, "consonants without a vowel or '^'")
    return out


def analyze(text: str, table: MappingTable | None = None, skip_invalid: bool = False) -> list[Word]:
    """Tokenize and syllabify a Roman text.

    With ``skip_invalid`` words that do not segment are dropped instead of
    raising.
    """
    table = table or load_mapping()
    out = []
    for w in tokenize(text):
        try:
            out.append(Word(w, tuple(syllabify(w, table))))
        except (UndecodableSequenceError, OrphanMarkerError):
            if not skip_invalid:
                raise
    return out


def windows(word: Word | Sequence[str] | Sequence[Akshara], spec: WindowSpec | int) -> list[str]:
    """Overlapping windows of ``n`` consecutive syllables within one word.

    >>> windows(["pa", "dma", "vi", "bhU", "Sha", "N^"], 3)
    ['padmavi', 'dmavibhU', 'vibhUSha', 'bhUShaN^']
    """
    if not isinstance(spec, WindowSpec):
        spec = WindowSpec(spec)
    sylls = word._surfaces if isinstance(word, Word) else [str(s) for s in word]
    n = spec.n
    if len(sylls) < n:
        if spec.short_word_policy is ShortWordPolicy.WHOLE_WORD and sylls:
            return ["".join(sylls)]
        return []
    return ["".join(sylls[k:k + n]) for k in range(len(sylls) - n + 1)]


def iter_windows(words: Iterable[Word], spec: WindowSpec) -> Iterable[str]:
    for w in words:
        yield from windows(w, spec)

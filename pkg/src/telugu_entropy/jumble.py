"""Seeded word-interior jumbling.

Shuffling is Durstenfeld's Fisher-Yates over the interior positions, driven
by raw 64-bit draws from numpy's PCG64 bit generator with rejection sampling
for bounded integers. Only the raw PCG64 stream is used, so output depends
on the seed and nothing else. One generator serves a whole text, in
document order.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import MutableSequence, Sequence, TypeVar

import numpy as np

from .entropy import EntropyReport, Mode, char_entropy, syllable_ngram_entropy
from .errors import TeluguEntropyError
from .mapping import MappingTable, load_mapping
from .syllables import ShortWordPolicy, WindowSpec, analyze, syllabify

T = TypeVar("T")

_WORD = re.compile(r"[A-Za-z^]+")
_U64 = 1 << 64
_BLOCK = 256


class Granularity(str, enum.Enum):
    CHAR = "char"
    SYLLABLE = "syllable"


@dataclass(frozen=True)
class JumbleConfig:
    seed: int = 0
    granularity: Granularity = Granularity.SYLLABLE
    min_length: int = 4

    def __post_init__(self):
        if not 0 <= int(self.seed) < _U64:
            raise ValueError(f"seed must fit in an unsigned 64-bit integer, got {self.seed}")
        if self.min_length < 3:
            raise ValueError(f"min_length must be at least 3, got {self.min_length}")
        object.__setattr__(self, "granularity", Granularity(self.granularity))


class ShuffleRng:
    """Unbiased bounded integers from a PCG64 raw stream."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(int(seed))
        self._buf: list[int] = []

    def _raw(self) -> int:
        # draws come off the stream in blocks; the sequence is the same as one at a time
        if not self._buf:
            self._buf = self._bits.random_raw(_BLOCK).tolist()[::-1]
        return self._buf.pop()

    def below(self, bound: int) -> int:
        # reject the top partial block so every residue is equally likely
        limit = _U64 - (_U64 % bound)
        while True:
            r = self._raw()
            if r < limit:
                return r % bound


def fisher_yates(items: MutableSequence[T], rng: ShuffleRng, lo: int = 0,
                 hi: int | None = None) -> None:
    """In-place shuffle of ``items[lo:hi]``."""
    hi = len(items) if hi is None else hi
    for i in range(hi - 1, lo, -1):
        j = lo + rng.below(i - lo + 1)
        items[i], items[j] = items[j], items[i]


def jumble_word(symbols: Sequence[T], cfg: JumbleConfig, rng: ShuffleRng) -> list[T]:
    out = list(symbols)
    if len(out) < cfg.min_length:
        return out
    fisher_yates(out, rng, 1, len(out) - 1)
    return out


def jumble_text(text: str, cfg: JumbleConfig, table: MappingTable | None = None,
                rng: ShuffleRng | None = None) -> str:
    """Jumble every word of a Roman text, leaving everything between words intact.

    At syllable granularity a word that does not segment is left as is.
    Pass ``rng`` to continue one stream across several texts.
    """
    table = table or load_mapping()
    rng = rng or ShuffleRng(cfg.seed)

    def replace(m: re.Match) -> str:
        word = m.group(0)
        if cfg.granularity is Granularity.CHAR:
            return "".join(jumble_word(word, cfg, rng))
        try:
            sylls = [s.surface for s in syllabify(word, table)]
        except TeluguEntropyError:
            return word
        return "".join(jumble_word(sylls, cfg, rng))

    return _WORD.sub(replace, text)


@dataclass(frozen=True)
class JumbleComparison:
    original: EntropyReport
    jumbled: EntropyReport

    @property
    def delta(self) -> float:
        return abs(self.original.entropy_bits - self.jumbled.entropy_bits)


def measure(text: str, mode: Mode | str, n: int = 1, table: MappingTable | None = None,
            base: float = 2.0,
            short_word_policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD) -> EntropyReport:
    if Mode(mode) is Mode.CHAR:
        return char_entropy(text, base)
    words = analyze(text, table, skip_invalid=True)
    return syllable_ngram_entropy(words, WindowSpec(n, short_word_policy), base)


def compare_entropy(original: str, jumbled: str, mode: Mode | str, n: int = 1,
                    table: MappingTable | None = None, base: float = 2.0,
                    short_word_policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD,
                    ) -> JumbleComparison:
    """Entropy of a text before and after jumbling, under one mode and n."""
    kw = dict(table=table, base=base, short_word_policy=short_word_policy)
    return JumbleComparison(measure(original, mode, n, **kw), measure(jumbled, mode, n, **kw))

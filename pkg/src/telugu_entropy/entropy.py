"""Frequency tables and plug-in Shannon entropy.

Two measurement modes are supported: ``CHAR`` counts individual Roman
characters (letters, ``^`` and the word space), ``SYLLABLE`` counts
windows of ``n`` consecutive aksharas pooled over all words.
"""

from __future__ import annotations

import enum
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping

from .errors import BadBaseError, EmptyTableError
from .syllables import Word, WindowSpec, iter_windows

SPACE = " "
_NOT_COUNTED = re.compile(r"[^A-Za-z^\s]+")
_WHITESPACE = re.compile(r"\s+")


class Mode(str, enum.Enum):
    CHAR = "char"
    SYLLABLE = "syllable"


@dataclass(frozen=True, eq=False)
class FrequencyTable:
    """Symbol counts. Zero counts are never stored."""

    counts: Mapping[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for sym, c in self.counts.items():
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"count for {sym!r} must be a non-negative int, got {c!r}")
            if c:
                clean[sym] = c
        object.__setattr__(self, "counts", MappingProxyType(clean))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct(self) -> int:
        return len(self.counts)

    def __getitem__(self, sym) -> int:
        return self.counts.get(sym, 0)

    def __add__(self, other: "FrequencyTable") -> "FrequencyTable":
        return merge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        return dict(self.counts) == dict(other.counts)

    __hash__ = None


@dataclass(frozen=True)
class ProbabilityDistribution:
    probs: Mapping[Hashable, float]

    def __post_init__(self):
        if not self.probs:
            raise EmptyTableError("distribution has no outcomes")
        if any(not p > 0 for p in self.probs.values()):
            raise ValueError("probabilities must be strictly positive")
        s = math.fsum(self.probs.values())
        if abs(s - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {s!r}, not 1")
        object.__setattr__(self, "probs", MappingProxyType(dict(self.probs)))

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class EntropyReport:
    mode: Mode
    n: int
    entropy_bits: float
    per_syllable_rate: float
    distinct: int
    total_tokens: int
    log_base: float = 2.0

    def as_row(self) -> dict:
        return {
            "mode": Mode(self.mode).value,
            "n": self.n,
            "entropy_bits": self.entropy_bits,
            "per_syllable_rate": self.per_syllable_rate,
            "distinct": self.distinct,
            "total_tokens": self.total_tokens,
            "log_base": self.log_base,
        }


def count(stream: Iterable[Hashable]) -> FrequencyTable:
    return FrequencyTable(Counter(stream))


def merge(a: FrequencyTable, b: FrequencyTable) -> FrequencyTable:
    out = Counter(a.counts)
    out.update(b.counts)
    return FrequencyTable(out)


def to_distribution(t: FrequencyTable) -> ProbabilityDistribution:
    total = t.total
    if total == 0:
        raise EmptyTableError("cannot normalize an empty frequency table")
    return ProbabilityDistribution({s: c / total for s, c in t.counts.items()})


def shannon_entropy(d: ProbabilityDistribution, base: float = 2.0) -> float:
    """``-sum p log_base p``, summed in descending-probability order.

    The result is clipped to ``[0, log_base(k)]``; both bounds hold exactly
    in real arithmetic, so the clip only absorbs last-ulp rounding.
    """
    if not base > 1:
        raise BadBaseError(f"log base must be > 1, got {base!r}")
    ps = sorted(d.probs.values(), reverse=True)
    if base == 2:
        h = -math.fsum(p * math.log2(p) for p in ps)
        cap = math.log2(len(ps))
    else:
        lb = math.log(base)
        h = -math.fsum(p * math.log(p) for p in ps) / lb
        cap = math.log(len(ps)) / lb
    return min(max(h, 0.0), cap)


def char_stream(text: str) -> list[str]:
    """Countable characters of a Roman text.

    Letters (case kept) and ``^`` count as themselves; each run of
    whitespace between words counts as one space; punctuation and digits
    are dropped.
    """
    text = _NOT_COUNTED.sub("", text)
    text = _WHITESPACE.sub(SPACE, text).strip(SPACE)
    return list(text)


def report_from_table(t: FrequencyTable, mode: Mode, n: int = 1,
                      base: float = 2.0) -> EntropyReport:
    h = shannon_entropy(to_distribution(t), base)
    return EntropyReport(Mode(mode), n, h, h / n, t.distinct, t.total, float(base))


def char_counts(corpus: str) -> FrequencyTable:
    return count(char_stream(corpus))


def char_entropy(corpus: str, base: float = 2.0) -> EntropyReport:
    """Character-level entropy of a Roman text (mode ``CHAR``, ``n = 1``).

    >>> round(char_entropy("aa bb").entropy_bits, 4)
    1.5219
    """
    return report_from_table(char_counts(corpus), Mode.CHAR, 1, base)


def window_counts(corpus: Iterable[Word], spec: WindowSpec) -> FrequencyTable:
    return count(iter_windows(corpus, spec))


def syllable_ngram_entropy(corpus: Iterable[Word], spec: WindowSpec | int = 1,
                           base: float = 2.0) -> EntropyReport:
    """Block entropy ``H_n`` of pooled n-syllable windows, and ``H_n / n``."""
    if not isinstance(spec, WindowSpec):
        spec = WindowSpec(spec)
    return report_from_table(window_counts(corpus, spec), Mode.SYLLABLE, spec.n, base)

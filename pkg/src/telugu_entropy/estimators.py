"""scikit-learn style wrappers.

``X`` is always a collection of documents (strings), as for sklearn's text
vectorizers. A bare string is rejected rather than iterated per character.
"""

from __future__ import annotations

from typing import Iterable

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .entropy import FrequencyTable, Mode, char_counts, merge, report_from_table, window_counts
from .jumble import Granularity, JumbleConfig, ShuffleRng, jumble_text
from .mapping import load_mapping
from .syllables import ShortWordPolicy, WindowSpec, analyze
from .transliterate import to_roman, to_telugu


def check_documents(X) -> list[str]:
    """Validate a collection of text documents and return it as a list."""
    if isinstance(X, (str, bytes)):
        raise ValueError("expected a collection of documents, got a single string")
    try:
        docs = list(X)
    except TypeError:
        raise ValueError(f"expected an iterable of strings, got {type(X).__name__}") from None
    for k, d in enumerate(docs):
        if not isinstance(d, str):
            raise ValueError(f"document {k} is {type(d).__name__}, not str")
    return docs


class _TableMixin:
    def _fit_table(self):
        self.table_ = load_mapping(self.mapping)
        return self


class Transliterator(_TableMixin, TransformerMixin, BaseEstimator):
    """Telugu documents to Roman; ``inverse_transform`` goes back."""

    def __init__(self, mapping=None):
        self.mapping = mapping

    def fit(self, X=None, y=None):
        return self._fit_table()

    def transform(self, X) -> list[str]:
        check_is_fitted(self, "table_")
        return [to_roman(d, self.table_) for d in check_documents(X)]

    def inverse_transform(self, X) -> list[str]:
        check_is_fitted(self, "table_")
        return [to_telugu(d, self.table_) for d in check_documents(X)]


class Syllabifier(_TableMixin, TransformerMixin, BaseEstimator):
    """Roman documents to lists of words, each a list of syllable strings."""

    def __init__(self, mapping=None, skip_invalid=False):
        self.mapping = mapping
        self.skip_invalid = skip_invalid

    def fit(self, X=None, y=None):
        return self._fit_table()

    def transform(self, X) -> list[list[list[str]]]:
        check_is_fitted(self, "table_")
        return [[w.syllable_surfaces for w in analyze(d, self.table_, self.skip_invalid)]
                for d in check_documents(X)]


class WordJumbler(_TableMixin, TransformerMixin, BaseEstimator):
    """Shuffle word interiors of Roman documents.

    One generator, seeded from ``seed`` at each ``transform`` call, runs over
    all documents in order, so the output of a call is reproducible.
    """

    def __init__(self, seed=0, granularity="syllable", min_length=4, mapping=None):
        self.seed = seed
        self.granularity = granularity
        self.min_length = min_length
        self.mapping = mapping

    def fit(self, X=None, y=None):
        self.config_ = JumbleConfig(self.seed, Granularity(self.granularity), self.min_length)
        return self._fit_table()

    def transform(self, X) -> list[str]:
        check_is_fitted(self, "config_")
        rng = ShuffleRng(self.config_.seed)
        return [jumble_text(d, self.config_, self.table_, rng) for d in check_documents(X)]


class BlockEntropy(_TableMixin, BaseEstimator):
    """Plug-in entropy of characters or of n-syllable windows.

    ``fit`` counts symbols over Roman documents; ``partial_fit`` adds more
    documents by merging counts, which gives the same result as one ``fit``
    over everything.

    Attributes
    ----------
    counts_ : FrequencyTable
    report_ : EntropyReport
    entropy_ : float
    """

    def __init__(self, mode="syllable", n=1, base=2.0, short_word_policy="whole", mapping=None):
        self.mode = mode
        self.n = n
        self.base = base
        self.short_word_policy = short_word_policy
        self.mapping = mapping

    def _count(self, docs: Iterable[str]) -> FrequencyTable:
        if Mode(self.mode) is Mode.CHAR:
            total = FrequencyTable()
            for d in docs:
                total = merge(total, char_counts(d))
            return total
        spec = WindowSpec(self.n, ShortWordPolicy(self.short_word_policy))
        words = [w for d in docs for w in analyze(d, self.table_, skip_invalid=True)]
        return window_counts(words, spec)

    def _refresh(self):
        n = 1 if Mode(self.mode) is Mode.CHAR else self.n
        self.report_ = report_from_table(self.counts_, Mode(self.mode), n, self.base)
        self.entropy_ = self.report_.entropy_bits
        return self

    def fit(self, X, y=None):
        self._fit_table()
        self.counts_ = self._count(check_documents(X))
        return self._refresh()

    def partial_fit(self, X, y=None):
        if not hasattr(self, "counts_"):
            return self.fit(X)
        self.counts_ = merge(self.counts_, self._count(check_documents(X)))
        return self._refresh()

    def score(self, X=None, y=None) -> float:
        """Entropy of ``X`` under the fitted settings, or of the fitted data if ``X`` is None."""
        check_is_fitted(self, "report_")
        if X is None:
            return self.entropy_
        n = 1 if Mode(self.mode) is Mode.CHAR else self.n
        counts = self._count(check_documents(X))
        return report_from_table(counts, Mode(self.mode), n, self.base).entropy_bits


__all__ = ["Transliterator", "Syllabifier", "WordJumbler", "BlockEntropy", "check_documents"]

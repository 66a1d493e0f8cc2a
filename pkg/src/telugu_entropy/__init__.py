"""Entropy of Telugu text.

Telugu is transliterated to a case-sensitive Roman scheme, segmented into
aksharas, and measured with plug-in Shannon entropy over characters or over
overlapping n-syllable windows.
"""

__version__ = "0.1.0"

from .corpus import (  # noqa: E402
    Corpus,
    LengthUnit,
    LetterFrequencyRow,
    WordLengthHistogram,
    from_texts,
    ingest,
    letter_table,
    word_length_histogram,
)
from .entropy import (  # noqa: E402
    EntropyReport,
    FrequencyTable,
    Mode,
    ProbabilityDistribution,
    char_entropy,
    count,
    merge,
    shannon_entropy,
    syllable_ngram_entropy,
    to_distribution,
)
from .estimators import BlockEntropy, Syllabifier, Transliterator, WordJumbler  # noqa: E402
from .jumble import Granularity, JumbleConfig, compare_entropy, jumble_text, jumble_word  # noqa: E402
from .mapping import Category, MappingTable, load_mapping  # noqa: E402
from .syllables import (  # noqa: E402
    Akshara,
    ShortWordPolicy,
    WindowSpec,
    Word,
    analyze,
    syllabify,
    tokenize,
    windows,
)
from .transliterate import to_roman, to_telugu  # noqa: E402


def sample_corpus_path():
    """Path-like handle to the bundled Telugu sample text."""
    from importlib import resources
    return resources.files(__name__).joinpath("data/sample_te.txt")

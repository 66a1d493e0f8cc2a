import math

import pytest

from telugu_entropy.corpus import (
    LETTER_ORDER,
    Corpus,
    LengthUnit,
    from_texts,
    ingest,
    letter_table,
    round_percent,
    word_length_histogram,
)
from telugu_entropy.entropy import char_counts
from telugu_entropy.errors import CorpusIOError, EmptyTableError, UnmappedCodepointError
from telugu_entropy.syllables import analyze


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return _write


def test_ingest_one_word(write):
    c = ingest([write("a.txt", "వయస్సు")])
    assert len(c.words) == 1
    assert c.words[0].syllable_surfaces == ["va", "ya", "ssu"]
    assert c.roman == "vayassu"


def test_ingest_empty_file(write):
    c = ingest([write("e.txt", "")])
    assert c.words == [] and c.roman == ""


def test_char_budget_drops_word_that_does_not_fit(write):
    c = ingest([write("a.txt", "వయస్సు")], char_budget=5)
    assert c.words == [] and c.roman == "" and c.raw == ""


def test_char_budget_cuts_at_word_boundary(write):
    path = write("a.txt", "వయస్సు కార్యాలయం పద్మవిభూషణ్")
    # "vayassu kAryAlayaM" is 18 chars; the next word would overflow
    for budget in (18, 19, 25):
        c = ingest([path], char_budget=budget)
        assert c.roman == "vayassu kAryAlayaM"
        assert c.raw == "వయస్సు కార్యాలయం"
    assert ingest([path], char_budget=100).roman == "vayassu kAryAlayaM padmavibhUShaN^"


def test_char_budget_spans_files(write):
    a = write("a.txt", "వయస్సు")
    b = write("b.txt", "కార్యాలయం వయస్సు")
    c = ingest([a, b], char_budget=18)
    assert [d.roman for d in c.documents] == ["vayassu", "kAryAlayaM"]


def test_ingest_idempotent(write):
    p = write("a.txt", "కార్యాలయం, వయస్సు.")
    assert ingest([p]) == ingest([p])


def test_unmapped_reports_file_and_offset(write):
    p = write("bad.txt", "వయస్సు అఁ")
    with pytest.raises(UnmappedCodepointError) as exc:
        ingest([p])
    assert exc.value.path == p
    assert exc.value.offset == len("వయస్సు అ".encode())


def test_io_error(tmp_path):
    with pytest.raises(CorpusIOError) as exc:
        ingest([tmp_path / "missing.txt"])
    assert exc.value.code == "IO_ERROR"


def test_latin_words_are_skipped_for_syllables():
    c = from_texts(["వయస్సు fox"])
    assert [w.surface for w in c.words] == ["vayassu"]
    assert c.documents[0].skipped == ("fox",)


def test_letter_table_forced_ratios():
    rows = {r.symbol: r.percent for r in letter_table("aA a")}
    assert rows["a"] == 50.00 and rows["A"] == 25.00 and rows[" "] == 25.00
    assert rows["^"] == 0.00
    assert [r.symbol for r in letter_table("aA a")] == list(LETTER_ORDER)


def test_letter_table_empty():
    with pytest.raises(EmptyTableError):
        letter_table("")


def test_letter_table_recomputes_from_counts(sample_corpus):
    counts = char_counts(sample_corpus.roman)
    for row in letter_table(sample_corpus):
        assert row.count == counts[row.symbol]
        assert row.percent == round_percent(counts[row.symbol], counts.total)
    assert abs(sum(r.percent for r in letter_table(sample_corpus)) - 100) <= 0.5


@pytest.mark.parametrize(("count", "total", "expected"), [
    (1, 8, 12.5), (1, 3, 33.33), (2, 3, 66.67), (1, 800, 0.13), (1, 1600, 0.06), (0, 5, 0.0),
])
def test_round_percent_half_up(count, total, expected):
    assert round_percent(count, total) == expected


def test_histogram_two_words():
    h = word_length_histogram(analyze("kAryAlayaM vayassu"), LengthUnit.AKSHARA)
    assert h.fractions == {3: 0.5, 4: 0.5}
    assert h.fraction_below(4) == 0.5


def test_histogram_single_word():
    assert word_length_histogram(analyze("vayassu")).fractions == {3: 1.0}
    assert word_length_histogram(analyze("vayassu"), "char").fractions == {7: 1.0}


def test_histogram_empty():
    with pytest.raises(EmptyTableError):
        word_length_histogram([])


def test_histogram_sample(sample_corpus):
    h = word_length_histogram(sample_corpus)
    assert abs(math.fsum(h.fractions.values()) - 1) <= 1e-12
    for t in range(0, 12):
        assert h.fraction_below(t) == math.fsum(f for k, f in h.fractions.items() if k < t)
    assert sum(h.counts.values()) == len(sample_corpus.words) >= 2000


def test_corpus_len(sample_corpus):
    assert isinstance(sample_corpus, Corpus)
    assert len(sample_corpus) == len(sample_corpus.words)

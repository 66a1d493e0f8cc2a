import pytest

from telugu_entropy.errors import (
    BadCategoryError,
    DuplicateTokenError,
    IncompleteTableError,
    MalformedRowError,
)
from telugu_entropy.mapping import Category, load_mapping, parse_mapping

MINIMAL = """\
# tiny table
అ\ta\tVOWEL_INDEPENDENT
ఆ\tA\tVOWEL_INDEPENDENT
ా\tA\tVOWEL_SIGN
క\tk\tCONSONANT
్\t^\tVIRAMA
"""


def test_builtin_has_ka(table):
    entry = table.by_unit["క"]
    assert entry.roman_token == "k"
    assert entry.category is Category.CONSONANT
    assert table.inherent_vowel == "a"


def test_builtin_is_cached_and_immutable():
    t = load_mapping()
    assert load_mapping() is t
    with pytest.raises(AttributeError):
        t.source = "x"


def test_builtin_covers_example_words(table):
    needed = set("కార్యాలయంప్రతిపాదించినట్లుపద్మవిభూషణ్వయస్సుసాధ్యమైనంత")
    assert needed <= {c for u in table.by_unit for c in u}


def test_parse_minimal():
    t = parse_mapping(MINIMAL.splitlines())
    assert t.consonants == {"k": "క"}
    assert t.vowel_signs == {"A": "ా"}


def test_codepoint_notation():
    text = MINIMAL.replace("ా\tA", "U+0C3E\tA")
    assert parse_mapping(text.splitlines()).vowel_signs == {"A": "ా"}


def test_load_from_file(tmp_path):
    p = tmp_path / "m.tsv"
    p.write_text(MINIMAL, encoding="utf-8")
    t = load_mapping(p)
    assert t.source == str(p)
    assert t.max_token_len == 1


def test_roundtrip_through_tsv(table):
    again = parse_mapping(table.to_tsv().splitlines())
    assert again.entries == table.entries


def test_duplicate_token_two_vowels():
    bad = MINIMAL + "ఇ\tA\tVOWEL_INDEPENDENT\n"
    with pytest.raises(DuplicateTokenError) as exc:
        parse_mapping(bad.splitlines())
    assert exc.value.code == "DUPLICATE_TOKEN"


def test_duplicate_token_across_classes():
    bad = MINIMAL + "గ\tA\tCONSONANT\n"
    with pytest.raises(DuplicateTokenError):
        parse_mapping(bad.splitlines())


def test_duplicate_unit():
    bad = MINIMAL + "క\tq\tCONSONANT\n"
    with pytest.raises(DuplicateTokenError):
        parse_mapping(bad.splitlines())


def test_bad_category():
    bad = MINIMAL + "గ\tg\tGLYPH\n"
    with pytest.raises(BadCategoryError) as exc:
        parse_mapping(bad.splitlines())
    assert exc.value.code == "BAD_CATEGORY"
    assert exc.value.line == 7


@pytest.mark.parametrize("row", [
    "గ\tg",                      # two columns
    "గ\tg\tCONSONANT\textra",    # four columns
    "గ\t\tCONSONANT",            # empty token
    "గ\tgggg\tCONSONANT",        # token too long
    "గ\tg1\tCONSONANT",          # non-letter
    "గాా\tg\tCONSONANT",         # three codepoints
    "ః\t^\tVISARGA",             # '^' reserved for the virama
])
def test_malformed_rows(row):
    with pytest.raises(MalformedRowError) as exc:
        parse_mapping((MINIMAL + row + "\n").splitlines())
    assert exc.value.code == "MALFORMED_ROW"


def test_incomplete_table_without_virama():
    text = "\n".join(l for l in MINIMAL.splitlines() if "VIRAMA" not in l)
    with pytest.raises(IncompleteTableError):
        parse_mapping(text.splitlines())


def test_longest_match(table):
    assert table.match_token("Sha", 0) == "Sh"
    assert table.match_token("Sa", 0) == "S"
    assert table.match_token("dhya", 0) == "dh"
    assert table.match_token("mai", 1) == "ai"
    assert table.match_token("f", 0) is None

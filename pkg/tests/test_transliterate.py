import unicodedata

import pytest
from hypothesis import given, settings, strategies as st

from telugu_entropy.errors import UndecodableSequenceError, UnmappedCodepointError
from telugu_entropy.transliterate import to_roman, to_telugu

PAIRS = [
    ("కార్యాలయం", "kAryAlayaM"),
    ("ప్రతిపాదించినట్లు", "pratipAdiMcinaTlu"),
    ("పద్మవిభూషణ్", "padmavibhUShaN^"),
    ("వయస్సు", "vayassu"),
    ("సాధ్యమైనంత", "sAdhyamainaMta"),
]


@pytest.mark.parametrize(("telugu", "roman"), PAIRS)
def test_example_pairs(telugu, roman):
    assert to_roman(telugu) == roman
    assert to_telugu(roman) == telugu


def test_empty():
    assert to_roman("") == ""
    assert to_telugu("") == ""


def test_passthrough_of_non_telugu():
    assert to_roman("Hello, world 42!") == "Hello, world 42!"
    assert to_roman("వయస్సు. కార్యాలయం") == "vayassu. kAryAlayaM"


def test_nfc_input_is_normalized():
    decomposed = unicodedata.normalize("NFD", "సాధ్యమైనంత")
    assert to_roman(decomposed) == "sAdhyamainaMta"


def test_ambiguous_cluster_gets_explicit_virama():
    # శ + virama + హ would otherwise read back as ష
    assert to_roman("శ్హ") == "S^ha"
    assert to_telugu("S^ha") == "శ్హ"
    assert to_roman("క్హ") == "k^ha"
    assert to_roman("క్ష") == "kSha"   # unambiguous conjunct stays silent


def test_final_virama_then_punctuation():
    assert to_roman("పద్మవిభూషణ్,") == "padmavibhUShaN^,"


def test_unmapped_codepoint_offset():
    # U+0C01 (candrabindu) is not in the built-in table
    with pytest.raises(UnmappedCodepointError) as exc:
        to_roman("అఁ")
    assert exc.value.offset == 3
    assert exc.value.code == "UNMAPPED_CODEPOINT"


def test_dangling_sign_rejected():
    with pytest.raises(UnmappedCodepointError):
        to_roman("ా")


@pytest.mark.parametrize(("text", "offset"), [
    ("kf", 1),        # no such token
    ("k", 0),         # consonant never closed
    ("a^", 1),        # virama after a vowel
    ("Ma", 0),        # anusvara with nothing before it
    ("k ka", 0),
])
def test_undecodable(text, offset):
    with pytest.raises(UndecodableSequenceError) as exc:
        to_telugu(text)
    assert exc.value.offset == offset


def test_deterministic():
    assert to_roman("కార్యాలయం" * 3) == to_roman("కార్యాలయం" * 3)


# Random well-formed aksharas: onset (0-3 consonants) + vowel sign/inherent
# or final virama, optional anusvara/visarga.
CONS = list("కఖగఘచఛజఝటఠడఢణతథదధనపఫబభమయరలళవశషసహ")
SIGNS = ["", "ా", "ి", "ీ", "ు", "ూ", "ృ", "ె", "ే",
         "ై", "ొ", "ో", "ౌ"]
INDEP = list("అఆఇఈఉఊఋఎఏఐఒఓఔ")

akshara = st.one_of(
    st.tuples(st.lists(st.sampled_from(CONS), min_size=1, max_size=3), st.sampled_from(SIGNS),
              st.sampled_from(["", "ం", "ః"])).map(
        lambda t: "్".join(t[0]) + t[1] + t[2]),
    st.sampled_from(INDEP),
)


@st.composite
def telugu_words(draw):
    first = draw(akshara)
    rest = draw(st.lists(st.tuples(st.lists(st.sampled_from(CONS), min_size=1, max_size=3),
                                   st.sampled_from(SIGNS), st.sampled_from(["", "ం"])),
                         max_size=5))
    word = first + "".join("్".join(c) + s + m for c, s, m in rest)
    if draw(st.booleans()):
        word += draw(st.sampled_from(CONS)) + "్"
    return word


@settings(max_examples=500, deadline=None)
@given(telugu_words())
def test_roundtrip_property(word):
    roman = to_roman(word)
    assert to_telugu(roman) == word
    assert set(roman) <= set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ^")


def test_inherent_vowel_before_independent_i_is_not_recoverable():
    # Known scheme limitation: "a" + "i" reads as the single vowel "ai".
    assert to_roman("కఇ") == "kai"
    assert to_telugu("kai") == "కై"

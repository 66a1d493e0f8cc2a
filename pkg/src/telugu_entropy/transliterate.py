"""Telugu Unicode <-> Roman conversion.

Encoding walks the text unit by unit with a one-consonant lookbehind:

* a consonant with no sign and no virama gets the inherent vowel (``a``);
* a virama between two consonants is silent (``ద్మ`` -> ``dma``), except
  where the joined tokens would re-scan as a different token (``శ్హ``
  would read as ``ష``), in which case it is written as ``^``;
* any other virama is written as ``^``.

Characters outside the Telugu block pass through unchanged in both
directions.
"""

from __future__ import annotations

import unicodedata

from .errors import UnmappedCodepointError, UndecodableSequenceError
from .mapping import VIRAMA_TOKEN, Category, MappingTable, is_telugu, load_mapping


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def to_roman(text: str, table: MappingTable | None = None) -> str:
    """Transliterate Telugu text to the case-sensitive Roman scheme.

    >>> to_roman("కార్యాలయం")
    'kAryAlayaM'
    """
    table = table or load_mapping()
    text = unicodedata.normalize("NFC", text)
    inherent = table.inherent_vowel

    pieces: list[str] = []
    kinds: list[str] = []      # 'C' consonant token, 'V' vowel, 'M' marker, '^', 'x' passthrough
    joints: list[int] = []     # piece indices preceded by a silent (cluster) virama
    pending = False            # last consonant still awaits its vowel
    silent_virama = False      # virama seen; decided by what follows

    def emit(piece: str, kind: str) -> None:
        pieces.append(piece)
        kinds.append(kind)

    def close_virama() -> None:
        nonlocal silent_virama
        if silent_virama:
            emit(VIRAMA_TOKEN, "^")
            silent_virama = False

    def close_consonant() -> None:
        nonlocal pending
        if pending:
            emit(inherent, "V")
            pending = False

    def fail(i: int, reason: str):
        return UnmappedCodepointError(text[i], _byte_offset(text, i), reason)

    i = 0
    while i < len(text):
        ch = text[i]
        if not is_telugu(ch):
            close_consonant()
            close_virama()
            emit(ch, "x")
            i += 1
            continue
        entry = table.match_unit(text, i)
        if entry is None:
            raise fail(i, "not in mapping table")
        cat = entry.category
        if cat is Category.CONSONANT:
            close_consonant()
            if silent_virama:
                joints.append(len(pieces))
                silent_virama = False
            emit(entry.roman_token, "C")
            pending = True
        elif cat is Category.VOWEL_SIGN:
            if not pending:
                raise fail(i, "vowel sign without a consonant")
            emit(entry.roman_token, "V")
            pending = False
        elif cat is Category.VIRAMA:
            if not pending:
                raise fail(i, "virama without a consonant")
            pending = False
            silent_virama = True
        elif cat is Category.VOWEL_INDEPENDENT:
            close_consonant()
            close_virama()
            emit(entry.roman_token, "V")
        else:  # anusvara / visarga
            close_consonant()
            if silent_virama or not kinds or kinds[-1] not in ("V", "M"):
                raise fail(i, f"{cat.value.lower()} without a preceding letter")
            emit(entry.roman_token, "M")
        i += len(entry.telugu_unit)
    close_consonant()
    close_virama()

    # right to left, so each check sees the already-resolved suffix
    for j in reversed(joints):
        head = pieces[j - 1]
        tail = "".join(pieces[j - 1:j - 1 + table.max_token_len + 1])
        if table.match_token(tail, 0) != head:
            pieces.insert(j, VIRAMA_TOKEN)
    return "".join(pieces)


def to_telugu(text: str, table: MappingTable | None = None) -> str:
    """Inverse of :func:`to_roman` on its image.

    >>> to_telugu("vayassu")
    'వయస్సు'
    """
    table = table or load_mapping()
    inherent = table.inherent_vowel
    out: list[str] = []
    pending = False        # consonant emitted, vowel not yet seen
    after_letter = False   # an anusvara/visarga may attach here
    pending_at = 0

    i = 0
    while i < len(text):
        ch = text[i]
        if not (ch.isascii() and (ch.isalpha() or ch == VIRAMA_TOKEN)):
            if pending:
                raise UndecodableSequenceError(text, pending_at, "consonant without vowel or '^'")
            out.append(ch)
            after_letter = False
            i += 1
            continue
        token = table.match_token(text, i)
        if token is None:
            raise UndecodableSequenceError(text, i, "no token matches")
        kind = table.token_category(token)
        if kind == "C":
            if pending:
                out.append(table.virama_unit)
            out.append(table.consonants[token])
            pending, pending_at = True, i
            after_letter = False
        elif kind == "V":
            if pending:
                if token != inherent:
                    out.append(table.vowel_signs[token])
                pending = False
            else:
                out.append(table.independent_vowels[token])
            after_letter = True
        elif kind == "^":
            if not pending:
                raise UndecodableSequenceError(text, i, "'^' must follow a consonant")
            out.append(table.virama_unit)
            pending = False
            after_letter = False
        else:
            if not after_letter:
                raise UndecodableSequenceError(text, i, f"{token!r} must follow a vowel")
            out.append(table.markers[token])
        i += len(token)
    if pending:
        raise UndecodableSequenceError(text, pending_at, "consonant without vowel or '^'")
    return "".join(out)

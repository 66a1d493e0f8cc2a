"""Telugu <-> Roman mapping tables.

A table is a list of ``(telugu_unit, roman_token, category)`` rows. The
built-in table lives in ``data/telugu_roman.tsv``; a user table in the same
TSV format can be passed to :func:`load_mapping`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from os import PathLike
from typing import Iterable

from .errors import (
    BadCategoryError,
    DuplicateTokenError,
    IncompleteTableError,
    MalformedRowError,
)

TELUGU_BLOCK = range(0x0C00, 0x0C80)
VIRAMA_TOKEN = "^"

_LETTER_TOKEN = re.compile(r"[A-Za-z]{1,3}")
_CODEPOINT_SPEC = re.compile(r"U\+([0-9A-Fa-f]{4,6})")


class Category(str, enum.Enum):
    VOWEL_INDEPENDENT = "VOWEL_INDEPENDENT"
    VOWEL_SIGN = "VOWEL_SIGN"
    CONSONANT = "CONSONANT"
    ANUSVARA = "ANUSVARA"
    VISARGA = "VISARGA"
    VIRAMA = "VIRAMA"


VOWELS = frozenset({Category.VOWEL_INDEPENDENT, Category.VOWEL_SIGN})
MARKERS = frozenset({Category.ANUSVARA, Category.VISARGA})


def is_telugu(char: str) -> bool:
    return ord(char) in TELUGU_BLOCK


@dataclass(frozen=True)
class MappingEntry:
    telugu_unit: str
    roman_token: str
    category: Category
    line: int | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class MappingTable:
    """Validated, immutable mapping table.

    Decoding context tells an independent vowel from a vowel sign, so the
    same Roman token may serve one ``VOWEL_INDEPENDENT`` and one
    ``VOWEL_SIGN`` row; any other token reuse is rejected. The one
    independent vowel without a sign counterpart is the inherent vowel.
    """

    entries: tuple[MappingEntry, ...]
    source: str = "built-in"

    # derived lookups, filled in __post_init__
    by_unit: dict = field(init=False, repr=False, compare=False)
    consonants: dict = field(init=False, repr=False, compare=False)
    independent_vowels: dict = field(init=False, repr=False, compare=False)
    vowel_signs: dict = field(init=False, repr=False, compare=False)
    markers: dict = field(init=False, repr=False, compare=False)
    inherent_vowel: str = field(init=False, repr=False, compare=False)
    virama_unit: str = field(init=False, repr=False, compare=False)
    max_unit_len: int = field(init=False, repr=False, compare=False)
    max_token_len: int = field(init=False, repr=False, compare=False)
    # per-table memo for results derived from the table (word segmentations)
    memo: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        by_unit: dict[str, MappingEntry] = {}
        by_token: dict[str, list[MappingEntry]] = {}
        for e in self.entries:
            _check_entry(e)
            if e.telugu_unit in by_unit:
                raise DuplicateTokenError(
                    f"telugu unit {e.telugu_unit!r} mapped twice", e.line)
            by_unit[e.telugu_unit] = e
            by_token.setdefault(e.roman_token, []).append(e)

        for token, group in by_token.items():
            cats = [e.category for e in group]
            ok = len(group) == 1 or (len(group) == 2 and set(cats) == VOWELS)
            if not ok:
                raise DuplicateTokenError(
                    f"roman token {token!r} decodes as more than one unit "
                    f"({', '.join(e.telugu_unit for e in group)})", group[-1].line)

        consonants = {e.roman_token: e.telugu_unit for e in self.entries
                      if e.category is Category.CONSONANT}
        independent = {e.roman_token: e.telugu_unit for e in self.entries
                       if e.category is Category.VOWEL_INDEPENDENT}
        signs = {e.roman_token: e.telugu_unit for e in self.entries
                 if e.category is Category.VOWEL_SIGN}
        markers = {e.roman_token: e.telugu_unit for e in self.entries
                   if e.category in MARKERS}
        viramas = [e for e in self.entries if e.category is Category.VIRAMA]

        if not consonants:
            raise IncompleteTableError("table has no CONSONANT rows")
        if len(viramas) != 1:
            raise IncompleteTableError(f"table needs exactly one VIRAMA row, found {len(viramas)}")
        inherent = [t for t in independent if t not in signs]
        if len(inherent) != 1:
            raise IncompleteTableError(
                "exactly one independent vowel must lack a sign (the inherent vowel); "
                f"found {sorted(inherent)}")

        object.__setattr__(self, "by_unit", by_unit)
        object.__setattr__(self, "consonants", consonants)
        object.__setattr__(self, "independent_vowels", independent)
        object.__setattr__(self, "vowel_signs", signs)
        object.__setattr__(self, "markers", markers)
        object.__setattr__(self, "inherent_vowel", inherent[0])
        object.__setattr__(self, "virama_unit", viramas[0].telugu_unit)
        object.__setattr__(self, "max_unit_len", max(len(u) for u in by_unit))
        object.__setattr__(self, "max_token_len", max(len(t) for t in by_token))

    @property
    def vowel_tokens(self) -> frozenset[str]:
        return frozenset(self.independent_vowels) | frozenset(self.vowel_signs)

    def token_category(self, token: str) -> str | None:
        """Decode class of a Roman token: 'C', 'V', 'M' (anusvara/visarga) or '^'."""
        if token in self.consonants:
            return "C"
        if token in self.independent_vowels or token in self.vowel_signs:
            return "V"
        if token in self.markers:
            return "M"
        if token == VIRAMA_TOKEN:
            return "^"
        return None

    def match_token(self, text: str, pos: int) -> str | None:
        """Longest Roman token starting at ``text[pos]``, or None."""
        for size in range(min(self.max_token_len, len(text) - pos), 0, -1):
            candidate = text[pos:pos + size]
            if self.token_category(candidate) is not None:
                return candidate
        return None

    def match_unit(self, text: str, pos: int) -> MappingEntry | None:
        """Longest Telugu unit starting at ``text[pos]``, or None."""
        for size in range(min(self.max_unit_len, len(text) - pos), 0, -1):
            entry = self.by_unit.get(text[pos:pos + size])
            if entry is not None:
                return entry
        return None

    def to_tsv(self) -> str:
        lines = ["# telugu_unit\troman_token\tcategory"]
        lines += [f"{e.telugu_unit}\t{e.roman_token}\t{e.category.value}" for e in self.entries]
        return "\n".join(lines) + "\n"


def _check_entry(e: MappingEntry) -> None:
    if not isinstance(e.category, Category):
        raise BadCategoryError(f"unknown category {e.category!r}", e.line)
    if not 1 <= len(e.telugu_unit) <= 2:
        raise MalformedRowError(
            f"telugu_unit must be 1 or 2 codepoints, got {len(e.telugu_unit)}", e.line)
    if e.category is Category.VIRAMA:
        if e.roman_token != VIRAMA_TOKEN:
            raise MalformedRowError(f"VIRAMA token must be {VIRAMA_TOKEN!r}", e.line)
    elif not _LETTER_TOKEN.fullmatch(e.roman_token):
        raise MalformedRowError(
            f"roman token {e.roman_token!r} must be 1-3 ASCII letters", e.line)


def _parse_unit(cell: str) -> str:
    # accepts literal characters or "U+0C15 U+0C4D" notation
    parts = cell.split()
    if parts and all(_CODEPOINT_SPEC.fullmatch(p) for p in parts):
        return "".join(chr(int(_CODEPOINT_SPEC.fullmatch(p).group(1), 16)) for p in parts)
    return cell


def parse_mapping(lines: Iterable[str], source: str = "<string>") -> MappingTable:
    entries = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3 or not all(c.strip() for c in cols):
            raise MalformedRowError(f"expected 3 tab-separated columns, got {line!r}", lineno)
        unit, token, cat = (_parse_unit(cols[0].strip()), cols[1].strip(), cols[2].strip())
        try:
            category = Category(cat)
        except ValueError:
            raise BadCategoryError(f"unknown category {cat!r}", lineno) from None
        entries.append(MappingEntry(unit, token, category, line=lineno))
    return MappingTable(tuple(entries), source=source)


@lru_cache(maxsize=1)
def _builtin() -> MappingTable:
    text = resources.files(__package__).joinpath("data/telugu_roman.tsv").read_text(encoding="utf-8")
    return parse_mapping(text.splitlines(), source="built-in")


def load_mapping(source: str | PathLike | None = None) -> MappingTable:
    """Load and validate a mapping table.

    With no ``source`` the built-in table is returned (cached; tables are
    immutable so sharing is safe).
    """
    if source is None:
        return _builtin()
    with open(source, encoding="utf-8") as fh:
        return parse_mapping(fh, source=str(source))

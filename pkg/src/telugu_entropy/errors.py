"""Exception hierarchy.

Every error carries a stable ``code`` string so the CLI and callers can
branch on it without matching message text.
"""

from __future__ import annotations


class TeluguEntropyError(Exception):
    code = "ERROR"


class MappingError(TeluguEntropyError, ValueError):
    code = "MAPPING_ERROR"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateTokenError(MappingError):
    code = "DUPLICATE_TOKEN"


class BadCategoryError(MappingError):
    code = "BAD_CATEGORY"


class MalformedRowError(MappingError):
    code = "MALFORMED_ROW"


class IncompleteTableError(MappingError):
    code = "INCOMPLETE_TABLE"


class UnmappedCodepointError(TeluguEntropyError, ValueError):
    """A Telugu-block codepoint that the table cannot encode at its position.

    ``offset`` is a UTF-8 byte offset into the input text.
    """

    code = "UNMAPPED_CODEPOINT"

    def __init__(self, char: str, offset: int, reason: str = "not in mapping table",
                 path: str | None = None):
        self.char = char
        self.offset = offset
        self.reason = reason
        self.path = path
        super().__init__(self._message())

    def _message(self) -> str:
        where = f"{self.path}: " if self.path else ""
        return f"{where}U+{ord(self.char):04X} at byte {self.offset}: {self.reason}"

    def with_path(self, path: str, base_offset: int = 0) -> "UnmappedCodepointError":
        return UnmappedCodepointError(self.char, self.offset + base_offset, self.reason, path)


class UndecodableSequenceError(TeluguEntropyError, ValueError):
    """Roman text that does not parse under the mapping grammar.

    ``offset`` is a character offset.
    """

    code = "UNDECODABLE_SEQUENCE"

    def __init__(self, text: str, offset: int, reason: str):
        self.text = text
        self.offset = offset
        self.reason = reason
        snippet = text[offset:offset + 8]
        super().__init__(f"character {offset} ({snippet!r}): {reason}")


class OrphanMarkerError(TeluguEntropyError, ValueError):
    code = "ORPHAN_MARKER"

    def __init__(self, word: str, offset: int):
        self.word = word
        self.offset = offset
        super().__init__(f"marker {word[offset]!r} at {offset} in {word!r} has nothing to attach to")


class EmptyTableError(TeluguEntropyError, ValueError):
    code = "EMPTY_TABLE"


class BadBaseError(TeluguEntropyError, ValueError):
    code = "BAD_BASE"


class CorpusIOError(TeluguEntropyError, OSError):
    code = "IO_ERROR"

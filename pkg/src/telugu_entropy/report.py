"""Serialization of reports and plot-ready graph series.

Tables are written as CSV (first line ``# manifest: {...}``, then a header)
or as JSON (``{"manifest", "columns", "rows"}``). Floats are written with
``repr`` so a reader gets back the exact double that was computed.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from os import PathLike
from typing import Iterable, Sequence

from . import __version__
from .corpus import Corpus, WordLengthHistogram, letter_table
from .entropy import EntropyReport, Mode, char_entropy, syllable_ngram_entropy
from .jumble import JumbleConfig, compare_entropy, jumble_text
from .mapping import MappingTable, load_mapping
from .syllables import ShortWordPolicy, WindowSpec

MANIFEST_PREFIX = "# manifest: "

ENTROPY_COLUMNS = ("mode", "n", "entropy_bits", "per_syllable_rate", "distinct",
                   "total_tokens", "log_base")


def digest_bytes(chunks: Iterable[bytes]) -> str:
    """SHA-256 over length-prefixed chunks, so file boundaries matter."""
    h = hashlib.sha256()
    for b in chunks:
        h.update(len(b).to_bytes(8, "big"))
        h.update(b)
    return "sha256:" + h.hexdigest()


def digest_files(paths: Sequence[str | PathLike]) -> str:
    def read(p):
        with open(p, "rb") as fh:
            return fh.read()
    return digest_bytes(read(p) for p in paths)


@dataclass(frozen=True)
class RunManifest:
    command: str
    inputs: tuple[str, ...]
    mapping: str = "built-in"
    seed: int | None = None
    n_range: tuple[int, int] | None = None
    flags: dict = field(default_factory=dict)
    version: str = __version__
    digest: str = ""

    @classmethod
    def for_inputs(cls, command: str, inputs: Sequence[str | PathLike], **kw) -> "RunManifest":
        return cls(command, tuple(str(p) for p in inputs), digest=digest_files(inputs), **kw)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["inputs"] = list(self.inputs)
        d["n_range"] = list(self.n_range) if self.n_range else None
        d["flags"] = dict(sorted(self.flags.items()))
        return d


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def format_table(columns: Sequence[str], rows: Sequence[dict], manifest: RunManifest | None,
                 fmt: str = "csv") -> str:
    if fmt == "json":
        doc = {"manifest": manifest.to_dict() if manifest else None,
               "columns": list(columns),
               "rows": [{c: r[c] for c in columns} for r in rows]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    if manifest is not None:
        buf.write(MANIFEST_PREFIX + json.dumps(manifest.to_dict(), ensure_ascii=False) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r[c]) for c in columns])
    return buf.getvalue()


def parse_table(text: str) -> tuple[dict | None, list[str], list[dict]]:
    """Inverse of :func:`format_table`. CSV cells come back as strings."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        return doc["manifest"], doc["columns"], doc["rows"]
    manifest = None
    lines = text.splitlines()
    if lines and lines[0].startswith(MANIFEST_PREFIX):
        manifest = json.loads(lines[0][len(MANIFEST_PREFIX):])
        lines = lines[1:]
    reader = csv.DictReader(lines)
    return manifest, list(reader.fieldnames or []), list(reader)


def write_text(path: str | PathLike | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# --- report builders -------------------------------------------------------

def entropy_reports(corpus: Corpus, mode: Mode | str, n_min: int = 1, n_max: int = 6,
                    base: float = 2.0,
                    policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD) -> list[EntropyReport]:
    if Mode(mode) is Mode.CHAR:
        return [char_entropy(corpus.roman, base)]
    words = corpus.words
    return [syllable_ngram_entropy(words, WindowSpec(n, policy), base)
            for n in range(n_min, n_max + 1)]


def letter_table_rows(corpus: Corpus | str) -> list[dict]:
    """Two-column layout: lowercase and uppercase side by side, space and '^' last."""
    rows = {r.symbol: r for r in letter_table(corpus)}
    out = []
    for lo in "abcdefghijklmnopqrstuvwxyz":
        up = lo.upper()
        out.append({"symbol_lower": lo, "count_lower": rows[lo].count,
                    "percent_lower": rows[lo].percent,
                    "symbol_upper": up, "count_upper": rows[up].count,
                    "percent_upper": rows[up].percent})
    out.append({"symbol_lower": "space", "count_lower": rows[" "].count,
                "percent_lower": rows[" "].percent,
                "symbol_upper": "^", "count_upper": rows["^"].count,
                "percent_upper": rows["^"].percent})
    return out


LETTER_COLUMNS = ("symbol_lower", "count_lower", "percent_lower",
                  "symbol_upper", "count_upper", "percent_upper")
LENGTH_COLUMNS = ("length", "count", "fraction", "cumulative_fraction")


def histogram_rows(hist: WordLengthHistogram) -> list[dict]:
    return [{"length": k, "count": c, "fraction": hist.fractions[k],
             "cumulative_fraction": hist.fraction_below(k + 1)}
            for k, c in hist.counts.items()]


# --- graph series ------------------------------------------------------------

GRAPHS = ("graph1", "graph2", "graph3", "graph22")


def graph1(corpus: Corpus, base: float = 2.0) -> tuple[tuple[str, ...], list[dict]]:
    """Entropy by measurement mode: characters vs single syllables."""
    ch = char_entropy(corpus.roman, base)
    sy = syllable_ngram_entropy(corpus.words, WindowSpec(1), base)
    return ("measure", "entropy_bits"), [
        {"measure": "char", "entropy_bits": ch.entropy_bits},
        {"measure": "syllable", "entropy_bits": sy.entropy_bits},
    ]


def graph2(corpus: Corpus, base: float = 2.0,
           policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD, n_max: int = 6):
    reports = entropy_reports(corpus, Mode.SYLLABLE, 1, n_max, base, policy)
    rows = [{"series": "block_entropy", "n": r.n, "value": r.entropy_bits} for r in reports]
    rows += [{"series": "per_syllable_rate", "n": r.n, "value": r.per_syllable_rate} for r in reports]
    return ("series", "n", "value"), rows


def graph3(corpus: Corpus, cfg: JumbleConfig, table: MappingTable | None = None,
           base: float = 2.0, policy: ShortWordPolicy = ShortWordPolicy.WHOLE_WORD,
           n_max: int = 6):
    """Original vs jumbled entropy, for characters and for n = 1..n_max syllables."""
    table = table or load_mapping()
    original = corpus.roman
    jumbled = jumble_text(original, cfg, table)
    measures = [(Mode.CHAR, 1)] + [(Mode.SYLLABLE, n) for n in range(1, n_max + 1)]
    rows = []
    for mode, n in measures:
        cmp = compare_entropy(original, jumbled, mode, n, table, base, policy)
        rows.append({"measure": mode.value, "n": n,
                     "original": cmp.original.entropy_bits,
                     "jumbled": cmp.jumbled.entropy_bits,
                     "delta": cmp.delta})
    return ("measure", "n", "original", "jumbled", "delta"), rows


def graph22(hist: WordLengthHistogram):
    rows = [{"length": k, "fraction": f, "percent": 100 * f} for k, f in hist.fractions.items()]
    return ("length", "fraction", "percent"), rows


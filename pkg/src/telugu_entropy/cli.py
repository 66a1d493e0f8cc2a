"""Command-line driver.

Exit status: 0 on success, 1 on a data or IO error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus import LengthUnit, ingest, word_length_histogram
from .entropy import Mode
from .errors import TeluguEntropyError
from .jumble import Granularity, JumbleConfig, jumble_text
from .mapping import load_mapping
from .report import (
    ENTROPY_COLUMNS,
    LENGTH_COLUMNS,
    LETTER_COLUMNS,
    GRAPHS,
    RunManifest,
    entropy_reports,
    format_table,
    graph1,
    graph2,
    graph3,
    graph22,
    histogram_rows,
    letter_table_rows,
    write_text,
)
from .syllables import ShortWordPolicy
from .transliterate import to_roman, to_telugu

log = logging.getLogger("telugu_entropy")

N_LIMIT = 12


def _u64(value: str) -> int:
    v = int(value)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _base(value: str) -> float:
    v = float(value)
    if not v > 1:
        raise argparse.ArgumentTypeError("log base must be > 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mapping", help="mapping table TSV (default: built-in)")
    common.add_argument("--base", type=_base, default=2.0, help="logarithm base (default 2)")
    common.add_argument("--seed", type=_u64, default=0, help="jumbling seed (unsigned 64-bit)")
    common.add_argument("--short-word-policy", choices=[p.value for p in ShortWordPolicy],
                        default=ShortWordPolicy.WHOLE_WORD.value,
                        help="words with fewer than n syllables: one whole-word token, or none")
    common.add_argument("--char-budget", type=int, default=None,
                        help="cap the corpus at this many Roman characters (whole words)")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")

    p = argparse.ArgumentParser(prog="telugu-entropy",
                                description="Entropy of Telugu text via Roman transliteration.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("translit", parents=[common], help="convert between Telugu and Roman")
    t.add_argument("input")
    t.add_argument("--direction", choices=["to-roman", "to-telugu"], default="to-roman")

    e = sub.add_parser("entropy", parents=[common], help="character or n-syllable entropy")
    e.add_argument("inputs", nargs="+")
    e.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.SYLLABLE.value)
    e.add_argument("--n-min", type=int, default=1)
    e.add_argument("--n-max", type=int, default=6)

    j = sub.add_parser("jumble", parents=[common], help="shuffle word interiors")
    j.add_argument("input")
    j.add_argument("--granularity", choices=[g.value for g in Granularity],
                   default=Granularity.SYLLABLE.value)
    j.add_argument("--min-length", type=int, default=4)

    s = sub.add_parser("stats", parents=[common],
                       help="letter-frequency table and word-length histogram")
    s.add_argument("inputs", nargs="+")
    s.add_argument("--unit", choices=[u.value for u in LengthUnit], default=LengthUnit.AKSHARA.value)
    s.add_argument("--threshold", type=int, default=4,
                   help="report the share of words shorter than this")

    g = sub.add_parser("graphdata", parents=[common], help="plot-ready series")
    g.add_argument("inputs", nargs="+")
    g.add_argument("--which", choices=GRAPHS, required=True)
    g.add_argument("--granularity", choices=[g.value for g in Granularity],
                   default=Granularity.SYLLABLE.value)
    g.add_argument("--unit", choices=[u.value for u in LengthUnit], default=LengthUnit.AKSHARA.value)
    return p


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _sidecar(out: str | None, manifest: RunManifest) -> None:
    if out is None:
        return
    with open(out + ".manifest.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest.to_dict(), fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def cmd_translit(args, table) -> int:
    text = _read(args.input)
    out = to_roman(text, table) if args.direction == "to-roman" else to_telugu(text, table)
    write_text(args.out, out)
    _sidecar(args.out, RunManifest.for_inputs(
        "translit", [args.input], mapping=table.source, flags={"direction": args.direction}))
    return 0


def cmd_entropy(args, table) -> int:
    corpus = ingest(args.inputs, table, args.char_budget)
    reports = entropy_reports(corpus, args.mode, args.n_min, args.n_max, args.base,
                              ShortWordPolicy(args.short_word_policy))
    manifest = RunManifest.for_inputs(
        "entropy", args.inputs, mapping=table.source,
        n_range=(args.n_min, args.n_max) if args.mode == Mode.SYLLABLE.value else None,
        flags={"mode": args.mode, "base": args.base, "short_word_policy": args.short_word_policy,
               "char_budget": args.char_budget})
    write_text(args.out, format_table(ENTROPY_COLUMNS, [r.as_row() for r in reports],
                                      manifest, args.format))
    return 0


def cmd_jumble(args, table) -> int:
    cfg = JumbleConfig(args.seed, Granularity(args.granularity), args.min_length)
    roman = to_roman(_read(args.input), table)
    write_text(args.out, jumble_text(roman, cfg, table))
    _sidecar(args.out, RunManifest.for_inputs(
        "jumble", [args.input], mapping=table.source, seed=args.seed,
        flags={"granularity": args.granularity, "min_length": args.min_length}))
    return 0


def _stats_paths(out: str | None, fmt: str) -> tuple[str | None, str | None]:
    if out is None:
        return None, None
    stem = out[: -len("." + fmt)] if out.endswith("." + fmt) else out
    return f"{stem}.letters.{fmt}", f"{stem}.lengths.{fmt}"


def cmd_stats(args, table) -> int:
    corpus = ingest(args.inputs, table, args.char_budget)
    hist = word_length_histogram(corpus, args.unit)
    flags = {"unit": args.unit, "threshold": args.threshold, "char_budget": args.char_budget}
    letters_m = RunManifest.for_inputs("stats.letters", args.inputs, mapping=table.source,
                                       flags=flags)
    lengths_m = RunManifest.for_inputs(
        "stats.lengths", args.inputs, mapping=table.source,
        flags={**flags, "fraction_below_threshold": hist.fraction_below(args.threshold)})
    letters_path, lengths_path = _stats_paths(args.out, args.format)
    write_text(letters_path, format_table(LETTER_COLUMNS, letter_table_rows(corpus),
                                          letters_m, args.format))
    write_text(lengths_path, format_table(LENGTH_COLUMNS, histogram_rows(hist),
                                          lengths_m, args.format))
    return 0


def cmd_graphdata(args, table) -> int:
    corpus = ingest(args.inputs, table, args.char_budget)
    policy = ShortWordPolicy(args.short_word_policy)
    flags = {"which": args.which, "base": args.base, "short_word_policy": args.short_word_policy}
    seed = None
    if args.which == "graph1":
        columns, rows = graph1(corpus, args.base)
    elif args.which == "graph2":
        columns, rows = graph2(corpus, args.base, policy)
    elif args.which == "graph3":
        seed = args.seed
        flags["granularity"] = args.granularity
        cfg = JumbleConfig(args.seed, Granularity(args.granularity))
        columns, rows = graph3(corpus, cfg, table, args.base, policy)
    else:
        flags["unit"] = args.unit
        columns, rows = graph22(word_length_histogram(corpus, args.unit))
    manifest = RunManifest.for_inputs("graphdata", args.inputs, mapping=table.source,
                                      seed=seed, flags=flags)
    write_text(args.out, format_table(columns, rows, manifest, args.format))
    return 0


COMMANDS = {
    "translit": cmd_translit,
    "entropy": cmd_entropy,
    "jumble": cmd_jumble,
    "stats": cmd_stats,
    "graphdata": cmd_graphdata,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "entropy" and not 1 <= args.n_min <= args.n_max <= N_LIMIT:
        parser.error(f"need 1 <= --n-min <= --n-max <= {N_LIMIT}")
    if args.char_budget is not None and args.char_budget < 0:
        parser.error("--char-budget must be non-negative")
    if getattr(args, "min_length", 4) < 3:
        parser.error("--min-length must be at least 3")
    if args.out is not None:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    try:
        table = load_mapping(args.mapping)
        return COMMANDS[args.command](args, table)
    except TeluguEntropyError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error [IO_ERROR]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

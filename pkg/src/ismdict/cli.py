"""Command-line interface.

Commands:
    build        construct a dictionary file from a corpus
    query        expand one name to the forms a search should try
    standardize  report the form to store for one name
    patch        apply curation patches and write the amended dictionary
    stats        compare two dictionaries (curation accounting)
    rules        dump the active rule table

Output goes to stdout as TSV by default; --format jsonl switches to JSON
lines.  Exit codes: 0 success, 1 unusable input (parse, IO, consistency),
2 unusable name argument.  Identical inputs always produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .builder import CorpusError, DuplicateName, build, read_corpus
from .curate import (
    Patch,
    RedundantOp,
    UniverseMismatch,
    UnknownName,
    apply_patch,
    stats,
)
from .query import search_read, standardize_write
from .rules import DEFAULT_TABLE, RuleId, RuleTable
from .store import InvariantViolation, ParseError, load, save
from .textprep import EmptyAfterCleaning

__all__ = ["main"]


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _rule_id(value: str) -> RuleId:
    try:
        return RuleId(value)
    except ValueError:
        known = ", ".join(r.value for r in RuleId)
        raise argparse.ArgumentTypeError(
            f"unknown rule id {value!r} (known: {known})"
        ) from None


def _table_from(args) -> RuleTable:
    disabled = frozenset(args.disable) - frozenset(args.enable)
    if not disabled:
        return DEFAULT_TABLE
    return RuleTable(disabled=disabled)


def _emit(rows, header, args) -> None:
    """rows: list of dicts sharing ``header``'s keys, already ordered."""
    if args.format == "jsonl":
        for row in rows:
            print(json.dumps(row, ensure_ascii=False, sort_keys=True))
    else:
        for row in rows:
            print("\t".join(str(row[key]) for key in header))


def cmd_build(args) -> int:
    try:
        records = read_corpus(args.corpus, merge_duplicates=args.merge_duplicates)
    except (DuplicateName, CorpusError) as exc:
        return _fail(str(exc), 1)
    except OSError as exc:
        return _fail(str(exc), 1)
    if not records:
        return _fail("empty corpus", 1)
    d = build(records, table=_table_from(args), jobs=args.jobs)
    try:
        save(d, args.out)
    except OSError as exc:
        return _fail(str(exc), 1)
    with_alts = sum(1 for e in d if e.alternatives)
    rows = [
        {"key": "names", "value": len(d)},
        {"key": "names_with_alternatives", "value": with_alts},
        {"key": "components", "value": len(d.components())},
        {"key": "max_alternatives", "value": max((len(e.alternatives) for e in d), default=0)},
    ]
    _emit(rows, ("key", "value"), args)
    if args.fig_dir:
        from . import report

        fig_dir = Path(args.fig_dir)
        fig_dir.mkdir(parents=True, exist_ok=True)
        report.alternatives_histogram_png(d, fig_dir / "alternatives_histogram.png")
    return 0


def _dictionary_with_patches(args):
    d = load(args.dict)
    for patch_path in args.patch:
        d = apply_patch(d, Patch.load(patch_path))
    return d


def cmd_query(args) -> int:
    try:
        d = _dictionary_with_patches(args)
    except (ParseError, InvariantViolation, UnknownName, OSError) as exc:
        return _fail(str(exc), 1)
    try:
        result = search_read(d, args.name, whole_component=args.whole_component)
    except EmptyAfterCleaning as exc:
        return _fail(str(exc), 2)
    rows = [
        {
            "name": name,
            "count": count,
            "standard": "standard" if name == result.standard else "-",
        }
        for name, count in result.expansion
    ]
    if args.format == "jsonl":
        for row in rows:
            row["standard"] = row["standard"] == "standard"
    _emit(rows, ("name", "count", "standard"), args)
    return 0


def cmd_standardize(args) -> int:
    try:
        d = _dictionary_with_patches(args)
    except (ParseError, InvariantViolation, UnknownName, OSError) as exc:
        return _fail(str(exc), 1)
    try:
        advice = standardize_write(d, args.name)
    except EmptyAfterCleaning as exc:
        return _fail(str(exc), 2)
    row = {
        "entered": advice.entered,
        "standard": advice.standard,
        "nonstandard": int(advice.is_nonstandard),
    }
    if args.format == "jsonl":
        row["nonstandard"] = bool(row["nonstandard"])
    _emit([row], ("entered", "standard", "nonstandard"), args)
    return 0


def cmd_patch(args) -> int:
    try:
        d = load(args.dict)
        applied = 0
        for patch_path in args.patch:
            patch = Patch.load(patch_path)
            d = apply_patch(d, patch)
            applied += len(patch.ops)
        save(d, args.out)
    except (ParseError, InvariantViolation, UnknownName, OSError) as exc:
        return _fail(str(exc), 1)
    _emit([{"key": "ops_applied", "value": applied}], ("key", "value"), args)
    return 0


def cmd_stats(args) -> int:
    try:
        before = load(args.before)
        after = load(args.after)
        st = stats(before, after)
    except (ParseError, InvariantViolation, UniverseMismatch, OSError) as exc:
        return _fail(str(exc), 1)
    rows = [
        {
            "alternatives": row.alternatives,
            "before": row.before,
            "after": row.after,
            "change": row.change,
        }
        for row in st.bucket_table
    ]
    rows.append(
        {
            "alternatives": "total",
            "before": st.names_with_alts_before,
            "after": st.names_with_alts_after,
            "change": st.names_with_alts_after - st.names_with_alts_before,
        }
    )
    _emit(rows, ("alternatives", "before", "after", "change"), args)
    summary = [
        {"key": "auto_pairs", "value": st.auto_pairs},
        {"key": "rejected_pairs", "value": st.rejected_pairs},
        {"key": "added_pairs", "value": st.added_pairs},
        {"key": "acceptance_error_rate", "value": f"{st.acceptance_error_rate:.6f}"},
        {"key": "rejection_error_rate", "value": f"{st.rejection_error_rate:.6f}"},
    ]
    _emit(summary, ("key", "value"), args)
    if args.fig_dir:
        from . import report

        fig_dir = Path(args.fig_dir)
        fig_dir.mkdir(parents=True, exist_ok=True)
        report.curation_histogram_png(st, fig_dir / "curation_histogram.png")
    return 0


def cmd_rules(args) -> int:
    for row in _table_from(args).rows():
        print("\t".join(row))
    return 0


def _add_rule_flags(parser) -> None:
    parser.add_argument(
        "--disable",
        action="append",
        default=[],
        type=_rule_id,
        metavar="RULE",
        help="switch a rule off (repeatable)",
    )
    parser.add_argument(
        "--enable",
        action="append",
        default=[],
        type=_rule_id,
        metavar="RULE",
        help="switch a rule back on (repeatable, wins over --disable)",
    )


def _add_format_flag(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("tsv", "jsonl"),
        default="tsv",
        help="output format (default: tsv)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ismdict",
        description="Dictionary of alternative written forms of Arabic first names.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a dictionary from a corpus")
    p.add_argument("--corpus", required=True, help="corpus file: name<TAB>count per line")
    p.add_argument("--out", required=True, help="dictionary file to write")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument(
        "--merge-duplicates",
        action="store_true",
        help="sum counts when several raw lines clean to one name",
    )
    p.add_argument("--fig-dir", help="also render report figures into this directory")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="expand a name for reading-mode search")
    p.add_argument("--dict", required=True, help="dictionary file")
    p.add_argument("--patch", action="append", default=[], help="patch file, applied in order")
    p.add_argument("--whole-component", action="store_true", help="expand to the full variant group")
    p.add_argument("name")
    _add_format_flag(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("standardize", help="report the form to store for a name")
    p.add_argument("--dict", required=True, help="dictionary file")
    p.add_argument("--patch", action="append", default=[], help="patch file, applied in order")
    p.add_argument("name")
    _add_format_flag(p)
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("patch", help="apply curation patches and write the result")
    p.add_argument("--dict", required=True, help="dictionary file to start from")
    p.add_argument("--patch", action="append", required=True, help="patch file, applied in order")
    p.add_argument("--out", required=True, help="dictionary file to write")
    _add_format_flag(p)
    p.set_defaults(func=cmd_patch)

    p = sub.add_parser("stats", help="compare two dictionaries")
    p.add_argument("--before", required=True, help="dictionary before curation")
    p.add_argument("--after", required=True, help="dictionary after curation")
    p.add_argument("--fig-dir", help="also render report figures into this directory")
    _add_format_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("rules", help="dump the active rule table")
    _add_rule_flags(p)
    p.set_defaults(func=cmd_rules)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    import warnings as _warnings

    with _warnings.catch_warnings():
        _warnings.simplefilter("always", RedundantOp)

        def _show(message, category, *rest, **kw):
            print(f"warning: {message}", file=sys.stderr)

        _warnings.showwarning = _show
        return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

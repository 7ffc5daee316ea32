"""Command-line entry point: ``tspecific {words,scan,index,dot,oracle-check}``.

Positions in scan output are 0-based and end-inclusive: a row ``id 2 3 aa``
means the target bytes ``[2, 3]``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import BinaryIO, TextIO

from . import oracle
from .dawg import SourceTag, build_dawg
from .dot import dawg_dot, trie_dot
from .index import IndexFormatError, load_index, save_index
from .records import FormatError, InputFormat, SequenceRecord, parse_input
from .scan import LinkMode, ReferenceMachine, build_reference_machine, ts_pairs, ts_table
from .specific import build_specific_trie, specific_words

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _text(word: bytes) -> str:
    # latin-1 maps every byte to one code point, so output round-trips
    return word.decode("latin-1")


def _read(path: str, args) -> list[SequenceRecord]:
    return parse_input(path, InputFormat(args.format), args.normalize_case)


def _write(out: BinaryIO, text: str) -> None:
    out.write(text.encode("latin-1"))


def cmd_words(args, out: BinaryIO, err: TextIO) -> int:
    reference = [r.data for r in _read(args.reference, args)]
    target = [r.data for r in _read(args.target, args)]
    report = specific_words(reference, target)
    if args.output == "json":
        _write(out, json.dumps([_text(w) for w in report.words]) + "\n")
    else:
        for w in report.words:
            _write(out, f"{_text(w)}\t{len(w)}\n")
    err.write(f"count={report.count} bound={report.bound}\n")
    if args.oracle and report.words != oracle.specific_naive(reference, target):
        err.write("oracle mismatch: specific word sets differ\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _machine(args) -> ReferenceMachine:
    if args.index:
        return load_index(args.reference)
    return build_reference_machine(r.data for r in _read(args.reference, args))


def cmd_scan(args, out: BinaryIO, err: TextIO) -> int:
    machine = _machine(args)
    mode = LinkMode(args.link_mode)
    targets = _read(args.target, args)
    reference = _reference_words(args) if args.oracle else []
    mismatched = []
    json_rows = []
    for rec in targets:
        if args.table or args.oracle:
            table = ts_table(machine, rec.data, mode)
        if args.oracle:
            if table != oracle.ts_table_naive(reference, rec.data):
                mismatched.append(rec.id)
        if args.table:
            if args.output == "json":
                json_rows.append({"id": rec.id, "table": table})
            else:
                _write(out, f"{rec.id}\t{','.join(map(str, table))}\n")
            continue
        pairs = ts_pairs(machine, rec.data, mode)
        if args.output == "json":
            json_rows.append(
                {"id": rec.id, "pairs": [[i, j, _text(rec.data[i : j + 1])] for i, j in pairs]}
            )
        else:
            for i, j in pairs:
                _write(out, f"{rec.id}\t{i}\t{j}\t{_text(rec.data[i : j + 1])}\n")
    if args.output == "json":
        _write(out, json.dumps(json_rows) + "\n")
    if mismatched:
        err.write(f"oracle mismatch on records: {', '.join(mismatched)}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _reference_words(args) -> list[bytes]:
    if args.index:
        raise ValueError("--oracle needs the reference sequences, not an index")
    return [r.data for r in _read(args.reference, args)]


def cmd_index(args, out: BinaryIO, err: TextIO) -> int:
    machine = build_reference_machine(r.data for r in _read(args.reference, args))
    save_index(machine, args.output_path)
    err.write(
        f"wrote {args.output_path}: {machine.dawg.num_states} states, "
        f"{machine.dawg.num_transitions} transitions\n"
    )
    return EXIT_OK


def cmd_dot(args, out: BinaryIO, err: TextIO) -> int:
    tagged = [(r.data, SourceTag.REF) for r in _read(args.reference, args)]
    tagged += [(r.data, SourceTag.TGT) for r in _read(args.target, args)]
    d = build_dawg(tagged)
    if args.which == "dawg":
        lines = dawg_dot(d)
    else:
        trie = build_specific_trie(d)
        lines = trie_dot(trie.pruned() if args.prune else trie, d)
    for line in lines:
        _write(out, line)
    return EXIT_OK


def cmd_oracle_check(args, out: BinaryIO, err: TextIO) -> int:
    reference = [r.data for r in _read(args.reference, args)]
    targets = _read(args.target, args)
    failures = 0
    fast = specific_words(reference, [r.data for r in targets]).words
    ok = fast == oracle.specific_naive(reference, [r.data for r in targets])
    failures += not ok
    _write(out, f"words\t{'ok' if ok else 'MISMATCH'}\t{len(fast)}\n")
    machine = build_reference_machine(reference)
    for rec in targets:
        expected = oracle.ts_table_naive(reference, rec.data)
        for mode in LinkMode:
            ok = ts_table(machine, rec.data, mode) == expected
            failures += not ok
            _write(out, f"scan:{mode.value}\t{'ok' if ok else 'MISMATCH'}\t{rec.id}\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=[f.value for f in InputFormat], default="fasta")
    p.add_argument("--normalize-case", action="store_true", help="upper-case ASCII letters")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tspecific", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("words", help="list target-specific words of TARGET against REFERENCE")
    p.add_argument("reference")
    p.add_argument("target")
    _add_input_flags(p)
    p.add_argument("--output", choices=["tsv", "json"], default="tsv")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("scan", help="report occurrences of specific factors in each target record")
    p.add_argument("reference", help="reference sequences, or an index file with --index")
    p.add_argument("target")
    _add_input_flags(p)
    p.add_argument("--index", action="store_true", help="REFERENCE is a prebuilt index")
    p.add_argument("--output", choices=["tsv", "json"], default="tsv")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--plain-s", dest="link_mode", action="store_const", const=LinkMode.PLAIN_S.value
    )
    mode.add_argument(
        "--optimized-g", dest="link_mode", action="store_const", const=LinkMode.OPTIMIZED_G.value
    )
    p.set_defaults(link_mode=LinkMode.OPTIMIZED_G.value)
    p.add_argument("--table", action="store_true", help="print the full per-position table")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("index", help="preprocess REFERENCE into an index file")
    p.add_argument("reference")
    p.add_argument("output_path")
    _add_input_flags(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("dot", help="emit Graphviz for the DAWG of R and T or the specific trie")
    p.add_argument("reference")
    p.add_argument("target")
    _add_input_flags(p)
    p.add_argument("--which", choices=["dawg", "trie"], default="dawg")
    p.add_argument("--prune", action="store_true", help="drop trie branches without sinks")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("oracle-check", help="compare every fast result with brute force")
    p.add_argument("reference")
    p.add_argument("target")
    _add_input_flags(p)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None, out: BinaryIO | None = None, err: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout.buffer
    err = err if err is not None else sys.stderr
    try:
        code = args.func(args, out, err)
    except (OSError, FormatError, IndexFormatError, ValueError) as exc:
        err.write(f"tspecific: error: {exc}\n")
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())

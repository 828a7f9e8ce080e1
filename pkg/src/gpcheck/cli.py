"""Command-line interface: ``gpcheck check|genus|fuzz|partitions``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .checker import (
    INDETERMINATE,
    NOT_REALIZABLE,
    REALIZABLE,
    SCHEMA_ID,
    check_virtual_string,
    decide_pair,
    realizable,
)
from .conditions import CONDITION_IDS
from .cyclic import DEFAULT_CAP
from .errors import GaussError, NotWordWise
from .gauss import GaussParagraph, parse_paragraph
from .generate import random_virtual_string
from .partition import WordWisePartition, enumerate_partitions, is_word_wise
from .surface import embedding_certificate, genus
from .vstring import VirtualString, construct_from_pair

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; argparse's own exit 2 means "indeterminate" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_paragraph(path: str) -> GaussParagraph:
    try:
        return parse_paragraph(_read(path))
    except GaussError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_partition(path: str, p: GaussParagraph) -> WordWisePartition:
    try:
        P = WordWisePartition.from_json(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed partition ({exc})") from None
    try:
        ok, clause = is_word_wise(p, P)
    except (GaussError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if not ok:
        raise InputError(f"{path}: {NotWordWise(clause)}")
    return P


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _print_report(decision) -> None:
    out = sys.stdout
    out.write(f"verdict: {decision.verdict}\n")
    if decision.reason:
        out.write(f"reason: {decision.reason}\n")
    if decision.partition is not None:
        out.write(f"partition: {decision.partition}\n")
    if decision.report is not None:
        for cid in CONDITION_IDS:
            r = decision.report.results[cid]
            status = {True: "pass", False: "FAIL", None: "indeterminate"}[r.passed]
            line = f"  ({cid}) {status} checked={r.checked}"
            if r.witness is not None:
                line += " witness=" + json.dumps(r.witness, sort_keys=True)
            out.write(line + "\n")
    if decision.oracle is not None:
        o = decision.oracle
        out.write(f"oracle: genus {o.genus}, boundary {o.boundary}\n")


def cmd_check(args) -> int:
    p = _load_paragraph(args.paragraph)
    if args.partition:
        P = _load_partition(args.partition, p)
        decision = decide_pair(p, P, cap=args.max_cyclic, fast=args.fast)
    else:
        decision = realizable(p, cap=args.max_cyclic, fast=args.fast)
    if args.json:
        _emit(dict(decision.to_dict(), kind="check"))
    else:
        _print_report(decision)
    return {REALIZABLE: EXIT_OK, NOT_REALIZABLE: EXIT_NO, INDETERMINATE: EXIT_UNKNOWN}[decision.verdict]


def _load_string(path: str, partition: Optional[str]) -> VirtualString:
    text = _read(path)
    if text.lstrip().startswith("{"):
        try:
            return VirtualString.from_json(text)
        except GaussError as exc:
            raise InputError(f"{path}: {exc}") from None
    if not partition:
        raise InputError(f"{path}: a paragraph needs --partition to build a virtual string")
    p = _load_paragraph(path)
    P = _load_partition(partition, p)
    try:
        return construct_from_pair(p, P)
    except GaussError as exc:
        raise InputError(str(exc)) from None


def cmd_genus(args) -> int:
    alpha = _load_string(args.input, args.partition)
    s = genus(alpha)
    if args.json:
        doc = {"schema": SCHEMA_ID, "kind": "genus", "boundary": s.boundary,
               "euler": s.euler, "genus": s.genus, "planar": s.planar}
        if s.planar:
            doc["boundary_cycles"] = embedding_certificate(alpha)
        _emit(doc)
    else:
        sys.stdout.write(f"boundary: {s.boundary}\neuler: {s.euler}\ngenus: {s.genus}\n"
                         f"planar: {'yes' if s.planar else 'no'}\n")
    return EXIT_OK


def _fuzz_case(index: int, case_seed: int, arrows: int, circles: int, cap: int) -> dict:
    alpha = random_virtual_string(random.Random(case_seed), arrows, circles)
    verdict, g, agreement = check_virtual_string(alpha, cap=cap)
    agree = (verdict == (g == 0)) if agreement is None else agreement.agree and verdict is not None
    return {
        "case": index,
        "seed": case_seed,
        "string": alpha.to_tokens(),
        "genus": g,
        "verdict": {True: "pass", False: "fail", None: "indeterminate"}[verdict],
        "agree": agree,
    }


def cmd_fuzz(args) -> int:
    if args.case_seed is not None:
        seeds = [args.case_seed]
    else:
        master = random.Random(args.seed)
        seeds = [master.getrandbits(64) for _ in range(args.count)]
    cases = [_fuzz_case(k, s, args.arrows, args.circles, args.max_cyclic) for k, s in enumerate(seeds)]
    summary = {
        "cases": len(cases),
        "agree": sum(c["agree"] for c in cases),
        "planar": sum(c["genus"] == 0 for c in cases),
    }
    if args.json:
        _emit({"schema": SCHEMA_ID, "kind": "fuzz", "seed": args.seed, "cases": cases, "summary": summary})
    else:
        for c in cases:
            mark = "agree" if c["agree"] else "DISAGREE"
            sys.stdout.write(f"case {c['case']} seed={c['seed']} genus={c['genus']} "
                             f"verdict={c['verdict']} {mark}\n")
        sys.stdout.write(f"{summary['agree']}/{summary['cases']} agree, {summary['planar']} planar\n")
    for c in cases:
        if not c["agree"]:
            sys.stderr.write(f"disagreement: replay with `gpcheck fuzz --case-seed {c['seed']} "
                             f"--arrows {args.arrows} --circles {args.circles}`\n")
    return EXIT_OK if summary["agree"] == summary["cases"] else EXIT_NO


def cmd_partitions(args) -> int:
    p = _load_paragraph(args.paragraph)
    for P in enumerate_partitions(p):
        sys.stdout.write(P.to_json() + "\n")
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpcheck", description="Planarity of Gauss paragraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide realizability, or check one partition")
    c.add_argument("paragraph", help="paragraph file, one word per line ('-' for stdin)")
    c.add_argument("--partition", help="partition JSON file")
    c.add_argument("--json", action="store_true")
    c.add_argument("--max-cyclic", type=_positive, default=DEFAULT_CAP)
    c.add_argument("--fast", action="store_true", help="check (vii) on the basis cycles only")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("genus", help="genus of a virtual string's surface")
    g.add_argument("input", help="virtual string JSON, or a paragraph with --partition")
    g.add_argument("--partition")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_genus)

    f = sub.add_parser("fuzz", help="random cross-check against the genus oracle")
    f.add_argument("--seed", type=_nonnegative, default=0)
    f.add_argument("--count", type=_nonnegative, default=100)
    f.add_argument("--arrows", type=_positive, default=8)
    f.add_argument("--circles", type=_positive, default=4)
    f.add_argument("--case-seed", type=_nonnegative, help="replay a single case")
    f.add_argument("--max-cyclic", type=_positive, default=DEFAULT_CAP)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fuzz)

    pt = sub.add_parser("partitions", help="list word-wise partitions as JSON lines")
    pt.add_argument("paragraph")
    pt.set_defaults(func=cmd_partitions)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"gpcheck: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

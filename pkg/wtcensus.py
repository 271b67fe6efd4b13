#!/usr/bin/env python3
"""
wtcensus: count, list, encode, decode and cross-verify weighted bicolored
plane trees.

    python wtcensus.py count a --max 8
    python wtcensus.py list --weight 4 --edges 3
    python wtcensus.py decode "(2 (1 ) ) (3 )"
    python wtcensus.py verify --n-max 8 --format json
    python wtcensus.py oeis --max 30
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, Tuple

from backend.oeis_service import OeisService
from logic.census import a_rec, b_explicit, b_row, c_exact, census_rows
from logic.config import CensusSettings
from logic.dyck import enumerate_words, enumerate_words_with_edges
from logic.errors import BoundExceeded, TreeError, WtCensusError
from logic.report_generator import OutputFormat, ReportGenerator
from logic.tree import unrooted_census
from logic.verifier import cross_verify
from parsers.tree_json import decode_projection, encode_json
from parsers.word_parser import parse_text, render_text

logger = logging.getLogger("wtcensus")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Flags that parse but do not make sense together"""


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat],
                        help="Output format (default: json for decode, table otherwise)")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="wtcensus",
        description="Exact enumeration of weighted bicolored plane trees",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    count = commands.add_parser("count", parents=[common], help="a_n, b_(m,n) or c_n")
    count.add_argument("kind", choices=["a", "b", "c"])
    count.add_argument("--max", type=_non_negative, dest="max_n", metavar="N")
    count.add_argument("--n", type=_non_negative, metavar="N")
    count.add_argument("--m", type=_non_negative, metavar="M")

    listing = commands.add_parser("list", parents=[common], help="Every word of a given weight")
    listing.add_argument("--weight", type=_non_negative, required=True, metavar="N")
    listing.add_argument("--edges", type=_non_negative, metavar="M")

    encode = commands.add_parser("encode", parents=[common], help="Tree JSON to word")
    encode.add_argument("input", help="Tree JSON, or - for stdin")

    decode = commands.add_parser("decode", parents=[common], help="Word to tree JSON")
    decode.add_argument("input", help="Word text, or - for stdin")

    verify = commands.add_parser("verify", parents=[common], help="Cross-verify every formula")
    verify.add_argument("--n-max", type=_non_negative, default=8, metavar="N")
    verify.add_argument("--bound", type=_non_negative, metavar="N",
                        help="Enumeration bound (default: WTCENSUS_BOUND)")

    census = commands.add_parser("census", parents=[common], help="Unrooted classes or count table")
    group = census.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_non_negative, metavar="N", help="Class table for weight N")
    group.add_argument("--max", type=_non_negative, dest="max_n", metavar="N",
                       help="a_n, b-row, c_n and the estimate for n = 0..N")

    oeis = commands.add_parser("oeis", parents=[common], help="Compare a_n with OEIS A002212")
    source = oeis.add_mutually_exclusive_group()
    source.add_argument("--fixture", metavar="PATH", help="Local b-file (default: bundled)")
    source.add_argument("--fetch", action="store_true", help="Download the b-file from oeis.org")
    oeis.add_argument("--max", type=_non_negative, dest="max_n", default=30, metavar="N")

    return parser


def _output_format(args) -> OutputFormat:
    if args.format is not None:
        return OutputFormat(args.format)
    return OutputFormat.JSON if args.command == "decode" else OutputFormat.TABLE


def _read_input(value: str) -> str:
    return sys.stdin.read() if value == "-" else value


def cmd_count(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    if args.kind == "a":
        if args.m is not None:
            raise UsageError("count a takes --max or --n, not --m")
        if args.n is not None and args.max_n is not None:
            raise UsageError("count a takes --max or --n, not both")
        if args.n is not None:
            return reports.render_values("a", [args.n], [a_rec(args.n)[args.n]], fmt), EXIT_OK
        max_n = args.max_n if args.max_n is not None else 8
        return reports.render_values("a", list(range(max_n + 1)), a_rec(max_n), fmt), EXIT_OK

    if args.kind == "b":
        if args.n is None:
            raise UsageError("count b needs --n (and optionally --m)")
        if args.max_n is not None:
            raise UsageError("count b takes --n and --m, not --max")
        if args.m is not None:
            if not 1 <= args.m <= args.n:
                raise UsageError(f"count b needs 1 <= m <= n, got m={args.m}, n={args.n}")
            value = b_explicit(args.m, args.n)
            return reports.render_values("b", [args.m], [value], fmt, index_name="m"), EXIT_OK
        row = b_row(args.n)
        return reports.render_values("b", list(range(1, args.n + 1)), row, fmt, index_name="m"), EXIT_OK

    if args.m is not None:
        raise UsageError("count c takes --max or --n, not --m")
    if args.n is not None and args.max_n is not None:
        raise UsageError("count c takes --max or --n, not both")
    if args.n is not None:
        if args.n < 1:
            raise UsageError("c_n is defined for n >= 1")
        return reports.render_values("c", [args.n], [c_exact(args.n)], fmt), EXIT_OK
    if args.max_n is None:
        raise UsageError("count c needs --n or --max")
    indices = list(range(1, args.max_n + 1))
    return reports.render_values("c", indices, [c_exact(n) for n in indices], fmt), EXIT_OK


def cmd_list(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    if args.weight > settings.list_bound:
        raise BoundExceeded("Listing weight", args.weight, settings.list_bound)
    if args.edges is None:
        words = enumerate_words(args.weight)
    else:
        words = enumerate_words_with_edges(args.weight, args.edges)
    return reports.render_words(words, fmt, args.weight, args.edges), EXIT_OK


def cmd_encode(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    text = _read_input(args.input)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise TreeError(f"input is not JSON: {e}")
    word = encode_json(payload)
    if fmt is OutputFormat.JSON:
        return json.dumps({'word': render_text(word)}, indent=2), EXIT_OK
    return render_text(word), EXIT_OK


def cmd_decode(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    word = parse_text(_read_input(args.input).rstrip("\n"))
    return reports.render_projection(decode_projection(word), fmt), EXIT_OK


def cmd_verify(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    bound = args.bound if args.bound is not None else settings.enumeration_bound
    passport_bound = min(settings.passport_bound, bound)
    report = cross_verify(args.n_max, bound=bound, passport_bound=passport_bound)
    return reports.render_verification(report, fmt), EXIT_OK if report.passed else EXIT_FAILURE


def cmd_census(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    if args.max_n is not None:
        return reports.render_census_rows(census_rows(args.max_n), fmt), EXIT_OK
    if args.n < 1:
        raise UsageError("the unrooted census needs --n >= 1")
    if args.n > settings.enumeration_bound:
        raise BoundExceeded("Census weight", args.n, settings.enumeration_bound)
    return reports.render_classes(args.n, unrooted_census(args.n), fmt), EXIT_OK


def cmd_oeis(args, settings: CensusSettings, reports: ReportGenerator, fmt: OutputFormat) -> Tuple[str, int]:
    service = OeisService(settings)
    comparison = service.run(args.max_n, fixture=args.fixture, fetch=args.fetch)
    return reports.render_oeis(comparison, fmt), EXIT_OK if comparison.matches else EXIT_FAILURE


COMMANDS = {
    "count": cmd_count,
    "list": cmd_list,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "census": cmd_census,
    "oeis": cmd_oeis,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = CensusSettings()
    except WtCensusError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    handler = COMMANDS[args.command]
    try:
        output, status = handler(args, settings, ReportGenerator(), _output_format(args))
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"wtcensus {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (WtCensusError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""
regtool: command-line entry point.

Subcommands: classify, op, family, verify, census, query. Command output goes
to stdout, logging to stderr. Exit codes: 0 success, 1 a verifier disagreed,
2 usage, input or configuration error.
"""

import argparse
import asyncio
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from config import ConfigurationError, config, reload_config
from database.engine import close_db, init_db
from graphs.classify import classify
from graphs.core import Graph, GraphError
from graphs.families import generate, parse_spec
from graphs.formats import FormatError, encode_graph6, read_graph_file, write_graph_file
from graphs.isomorphism import canonical_form
from graphs.ops import OperationKind, apply_operation
from regtool_version import __version__
from services.catalog import CensusCatalog, read_jsonl, write_jsonl
from services.census import (
    CensusError,
    CensusRecord,
    census_graphs,
    parse_filter,
    query,
    run_census,
)
from services.render import (
    render_records,
    render_report,
    render_summary,
    render_verdict_table,
    render_verdicts_jsonl,
)
from services.theorems import (
    TheoremId,
    TheoremVerdict,
    example_corpus,
    input_arity,
    run_theorem,
    summarize,
    verify_all,
)

logger = logging.getLogger("regtool.cli")

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2


def setup_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, config.logging.level, logging.WARNING),
        format=config.logging.format,
        stream=sys.stderr,
    )
    # Quiet noisy libs
    logging.getLogger("sqlalchemy.engine").setLevel(logging.WARNING)
    logging.getLogger("aiosqlite").setLevel(logging.WARNING)


# ── Helpers ──────────────────────────────────────────


def _read_graph(name: str) -> Graph:
    return read_graph_file(Path(name))


def _emit_graph(g: Graph, output: str | None) -> None:
    if output is None:
        sys.stdout.write(encode_graph6(g) + "\n")
        return
    write_graph_file(Path(output), g)
    logger.info("Wrote %s", output)


def _finish_verdicts(verdicts: Sequence[TheoremVerdict], as_json: bool) -> int:
    if as_json:
        sys.stdout.write(render_verdicts_jsonl(verdicts))
        sys.stderr.write(render_summary(summarize(verdicts)))
    else:
        sys.stdout.write(render_verdict_table(verdicts))
    return EXIT_DISAGREEMENT if any(not v.agree for v in verdicts) else EXIT_OK


async def _save_to_catalog(records: Sequence[CensusRecord]) -> int:
    await init_db()
    try:
        return await CensusCatalog.save_records(records)
    finally:
        await close_db()


async def _load_from_catalog(n: int | None, k: int | None) -> list[CensusRecord]:
    await init_db()
    try:
        return await CensusCatalog.load_records(n, k)
    finally:
        await close_db()


# ── Subcommands ──────────────────────────────────────


def _cmd_classify(args: argparse.Namespace) -> int:
    report = classify(_read_graph(args.file))
    sys.stdout.write(render_report(report, args.json))
    return EXIT_OK


def _cmd_op(args: argparse.Namespace) -> int:
    kind = OperationKind(args.kind)
    expected = 2 if kind.binary else 1
    if len(args.inputs) != expected:
        raise GraphError(f"operation {kind} takes {expected} input file(s), got {len(args.inputs)}")
    graphs = [_read_graph(name) for name in args.inputs]
    _emit_graph(apply_operation(kind, *graphs), args.output)
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    _emit_graph(generate(parse_spec(args.name, args.params)), args.output)
    return EXIT_OK


def _verify_corpus(max_n: int | None, workers: int | None) -> list[Graph]:
    corpus = list(example_corpus().values())
    if max_n is not None:
        corpus.extend(census_graphs(max_n, connected_only=True, workers=workers))
    seen: set[bytes] = set()
    unique = []
    for g in corpus:
        form = canonical_form(g)
        if form not in seen:
            seen.add(form)
            unique.append(g)
    return unique


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.all:
        if args.theorem or args.inputs:
            raise CensusError("--all takes no theorem or inputs")
        corpus = _verify_corpus(args.max_n, args.threads)
        verdicts = verify_all(corpus, args.max_n, workers=args.threads)
        return _finish_verdicts(verdicts, args.json)
    if not args.theorem:
        raise CensusError("verify needs --theorem <id> or --all")
    theorem = TheoremId(args.theorem)
    arity = input_arity(theorem)
    if arity in ("graph", "pair"):
        verdict = run_theorem(theorem, [_read_graph(name) for name in args.inputs])
    elif arity == "sweep":
        if args.inputs:
            raise CensusError(f"{theorem} is a census sweep; pass --max-n instead of inputs")
        verdict = run_theorem(theorem, max_n=args.max_n or config.census.max_n)
    else:
        if len(args.inputs) != 1:
            raise CensusError(f"{theorem} takes one integer parameter n")
        verdict = run_theorem(theorem, parameter=int(args.inputs[0]))
    return _finish_verdicts([verdict], args.json)


def _cmd_census(args: argparse.Namespace) -> int:
    records = run_census(args.max_n, connected_only=args.connected, workers=args.threads)
    if args.output:
        write_jsonl(Path(args.output), records)
    if args.db:
        added = asyncio.run(_save_to_catalog(records))
        logger.info("Stored %d new records in the catalog", added)
    if not args.output:
        sys.stdout.write(render_records(records, args.json))
    return EXIT_OK


def _cmd_query(args: argparse.Namespace) -> int:
    if args.db == (args.catalog is not None):
        raise CensusError("query needs exactly one source: a catalog file or --db")
    predicate = parse_filter(args.filter)
    if args.db:
        records = asyncio.run(_load_from_catalog(args.n, args.k))
    else:
        records = [
            record
            for record in read_jsonl(Path(args.catalog))
            if (args.n is None or record.n == args.n) and (args.k is None or record.k == args.k)
        ]
    sys.stdout.write(render_records(query(records, predicate), args.json))
    return EXIT_OK


# ── Parser ───────────────────────────────────────────


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regtool",
        description="Regularity classification of graphs and their operations.",
    )
    parser.add_argument("--version", action="version", version=f"regtool {__version__}")
    parser.add_argument(
        "--threads",
        type=_positive,
        default=None,
        help="worker processes for census and verify (default: REGTOOL_THREADS)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a graph file (.g6 or .el)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("op", help="apply a graph operation")
    p.add_argument("--kind", required=True, choices=[kind.value for kind in OperationKind])
    p.add_argument("inputs", nargs="+", metavar="GRAPH")
    p.add_argument("-o", "--output", help="output file (.g6, .el or .dot); stdout when omitted")
    p.set_defaults(handler=_cmd_op)

    p = sub.add_parser("family", help="generate a named graph")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", help="output file (.g6, .el or .dot); stdout when omitted")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("verify", help="check theorems against brute-force classification")
    p.add_argument("--theorem", choices=[theorem.value for theorem in TheoremId])
    p.add_argument("--all", action="store_true", help="run every verifier over the corpus")
    p.add_argument("--max-n", type=_positive, default=None, help="census bound for sweeps")
    p.add_argument("inputs", nargs="*", metavar="INPUT")
    p.add_argument("--json", action="store_true", help="print verdicts as JSON lines")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("census", help="enumerate and classify regular graphs")
    p.add_argument("--max-n", type=_positive, default=config.census.max_n)
    p.add_argument("--connected", action="store_true", help="connected graphs only")
    p.add_argument("-o", "--output", help="JSON-lines catalog file")
    p.add_argument("--db", action="store_true", help="also store records in the database")
    p.add_argument("--json", action="store_true", help="print records as JSON lines")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("query", help="filter a census catalog")
    p.add_argument("catalog", nargs="?", default=None)
    p.add_argument("--db", action="store_true", help="read from the database instead of a file")
    p.add_argument("--filter", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("-n", type=int, default=None, help="only graphs on n vertices")
    p.add_argument("-k", type=int, default=None, help="only k-regular graphs")
    p.add_argument("--json", action="store_true", help="print records as JSON lines")
    p.set_defaults(handler=_cmd_query)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        reload_config()
    except ConfigurationError as e:
        sys.stderr.write(f"regtool: error: {e}\n")
        return EXIT_USAGE
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup_logging()
    try:
        return args.handler(args)
    except (GraphError, FormatError, CensusError, ConfigurationError, ValueError) as e:
        sys.stderr.write(f"regtool: error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        where = e.filename if e.filename is not None else "file"
        sys.stderr.write(f"regtool: error: {where}: {e.strerror or e}\n")
        return EXIT_USAGE


def run() -> None:
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    run()

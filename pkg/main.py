"""
Main entry point for toppleperm
"""

import argparse
import sys
from typing import Callable, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from src.combinatorics.bijections import (
    auso_to_exc,
    exc_to_auso,
    no_left_sink_orientations,
    tie_break_sort,
    topp_to_exc,
)
from src.combinatorics.excedance import (
    count_class,
    count_class_formula,
    enumerate_class,
    toppleable_count,
)
from src.combinatorics.genocchi import (
    enumerate_collapsed,
    enumerate_dellac,
    render_dellac,
)
from src.combinatorics.perm_core import format_cycles, parse_permutation, to_cycles
from src.combinatorics.toppling import count_r_toppleable, run_toppling, toppleable_permutations
from src.generators.base import Record
from src.generators.emitter import emit
from src.graphs.extremal import find_max_ao
from src.graphs.formulas import (
    count_ao_multipartite,
    count_auso_multipartite,
    count_R_bipartite,
    turan_parts,
    turan_u,
)
from src.graphs.orientations import (
    canonical_sorts,
    chromatic_polynomial,
    count_ao_brute,
    count_ao_chromatic,
    count_auso_brute,
    count_auso_chromatic,
)
from src.services.table_service import (
    build_excedance_table,
    build_seidel_rows,
    build_toppleable_sequence,
    build_toppling_table,
    build_turan_table,
)
from src.services.verification_service import CheckResult, VerificationService
from src.utils.config import Config
from src.utils.constants import ExitCodes, OutputConstants, TopplingConstants
from src.utils.error_handlers import exit_code_for, get_friendly_message
from src.utils.logger import logger, setup_logging
from src.utils.models import CompleteMultipartiteGraph, ExcedanceClass, Graph


def _parse_parts(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Part sizes must be comma-separated integers, got '{text}'") from e


def _write(text: str) -> None:
    if text:
        print(text)


class App:
    """Dispatches parsed command-line arguments to library calls"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config = Config.from_args(args)
        self.workers = self.config.parallel.workers

    @property
    def fmt(self) -> str:
        return self.config.output.format

    def output(self, records: List[Record], fields: Optional[Sequence[str]] = None) -> None:
        _write(emit(records, self.fmt, fields))

    # topple

    def topple(self) -> int:
        args = self.args
        p = parse_permutation(args.perm)
        outcome = run_toppling(
            p, args.r, schedule=args.schedule, seed=args.seed,
            trace=args.trace and args.schedule == TopplingConstants.SCHEDULE_PASS,
        )
        if args.trace:
            if outcome.pass_trace is None:
                logger.warning("Pass trace is only kept for the pass schedule")
            for snapshot in outcome.pass_trace or []:
                print(snapshot)
            return ExitCodes.SUCCESS
        identity = outcome.result.word == tuple(range(1, p.n + 2))
        self.output([{
            "perm": str(p),
            "r": args.r,
            "result": str(outcome.result),
            "topples": outcome.topple_count,
            "passes": outcome.pass_count,
            "toppleable": identity,
        }])
        return ExitCodes.SUCCESS

    # count

    def count_exc(self) -> int:
        args = self.args
        c = ExcedanceClass(n=args.n, m=args.m)
        if args.method == "enumerate":
            value = count_class(c, self.workers)
        else:
            value = count_class_formula(c.m, c.n - c.m)
        self.output([{"n": c.n, "m": c.m, "count": value}])
        return ExitCodes.SUCCESS

    def _multipartite(self) -> CompleteMultipartiteGraph:
        return CompleteMultipartiteGraph(part_sizes=tuple(self.args.parts))

    def count_ao(self) -> int:
        k = self._multipartite()
        method = self.args.method
        if method == "brute":
            value = count_ao_brute(k.to_graph(), self.workers)
        elif method == "sorts":
            value = sum(1 for _ in canonical_sorts(k))
        elif method == "chromatic":
            value = count_ao_chromatic(k.to_graph())
        else:
            value = count_ao_multipartite(k.part_sizes) if len(k.part_sizes) > 1 else 1
        self.output([{"parts": ",".join(map(str, k.part_sizes)), "method": method, "count": value}])
        return ExitCodes.SUCCESS

    def count_auso(self) -> int:
        k = self._multipartite()
        sink = self.args.sink
        if not 1 <= sink <= k.vertex_count:
            raise ValueError(f"Sink {sink} is not a vertex of K_{k.part_sizes}")
        method = self.args.method
        if method == "brute":
            value = count_auso_brute(k.to_graph(), sink, self.workers)
        elif method == "sorts":
            part = k.part_index()
            value = sum(
                1 for sort in canonical_sorts(k)
                if sort.order[-1] == sink and (len(sort.order) == 1 or part[sort.order[-2]] != part[sink])
            )
        elif method == "chromatic":
            value = count_auso_chromatic(k.to_graph())
        else:
            # the closed form puts the sink in the first part
            home = k.part_index()[sink]
            parts = (k.part_sizes[home],) + k.part_sizes[:home] + k.part_sizes[home + 1:]
            value = count_auso_multipartite(parts) if len(parts) > 1 else int(parts[0] == 1)
        self.output([{
            "parts": ",".join(map(str, k.part_sizes)), "sink": sink, "method": method, "count": value,
        }])
        return ExitCodes.SUCCESS

    def count_topp(self) -> int:
        args = self.args
        if args.r is not None:
            value = count_r_toppleable(args.n, args.r, self.workers)
        elif args.method == "simulate":
            value = sum(1 for _ in toppleable_permutations(args.n))
        else:
            value = toppleable_count(args.n)
        self.output([{"n": args.n, "r": args.r, "count": value}])
        return ExitCodes.SUCCESS

    def count_r(self) -> int:
        args = self.args
        if args.method == "brute":
            value = sum(1 for _ in no_left_sink_orientations(args.m, args.n))
        else:
            value = count_R_bipartite(args.m, args.n)
        self.output([{"m": args.m, "n": args.n, "count": value}])
        return ExitCodes.SUCCESS

    # tables

    def table(self) -> int:
        args = self.args
        kind = args.table
        if kind == "t_r":
            records = build_toppling_table(args.n_max, args.n_min or 3, self.workers)
        elif kind == "t":
            records = build_toppleable_sequence(args.n_max, args.n_min or 2, simulate=args.simulate)
        elif kind == "turan":
            records = build_turan_table(args.n_max)
        else:
            records = build_excedance_table(args.n_max, args.m)
        self.output(records)
        return ExitCodes.SUCCESS

    def seidel(self) -> int:
        self.output(build_seidel_rows(self.args.rows))
        return ExitCodes.SUCCESS

    def collapsed(self) -> int:
        n = self.args.n
        if self.args.list:
            self.output(
                [{"index": i, "perm": str(c.permutation)} for i, c in enumerate(enumerate_collapsed(n), start=1)],
                fields=["index", "perm"],
            )
        else:
            self.output([{"n": n, "count": sum(1 for _ in enumerate_collapsed(n))}])
        return ExitCodes.SUCCESS

    def dellac(self) -> int:
        order = self.args.order
        if self.args.render:
            print("\n\n".join(render_dellac(d) for d in enumerate_dellac(order)))
        elif self.args.list:
            self.output(
                [
                    {"index": i, "points": " ".join(f"{r}:{c}" for r, c in d.points)}
                    for i, d in enumerate(enumerate_dellac(order), start=1)
                ],
                fields=["index", "points"],
            )
        else:
            self.output([{"order": order, "count": sum(1 for _ in enumerate_dellac(order))}])
        return ExitCodes.SUCCESS

    # bijections

    def bij_topp2exc(self) -> int:
        p = parse_permutation(self.args.perm)
        self.output([{"perm": str(p), "image": str(topp_to_exc(p))}])
        return ExitCodes.SUCCESS

    def bij_exc2auso(self) -> int:
        args = self.args
        p = parse_permutation(args.perm)
        if args.n is not None and args.m + args.n != p.n:
            raise ValueError(f"m + n must equal the permutation size {p.n}")
        o = exc_to_auso(p, args.m)
        self.output([{
            "perm": str(p),
            "cycles": format_cycles(to_cycles(p)),
            "sort": ",".join(map(str, tie_break_sort(o, args.m))),
            "arcs": " ".join(f"{a}>{b}" for a, b in o.arcs()),
        }])
        return ExitCodes.SUCCESS

    def bij_roundtrip(self) -> int:
        args = self.args
        m, n = args.m, args.n
        failures = 0
        perms = list(enumerate_class(ExcedanceClass(n=m + n, m=m)))
        for p in perms:
            if auso_to_exc(exc_to_auso(p, m), m) != p:
                failures += 1
        orientations = list(no_left_sink_orientations(m, n))
        for o in orientations:
            if exc_to_auso(auso_to_exc(o, m), m).mask != o.mask:
                failures += 1
        if len(perms) != len(orientations):
            failures += 1
        self.output([{
            "m": m, "n": n, "permutations": len(perms), "orientations": len(orientations), "failures": failures,
        }])
        return ExitCodes.SUCCESS if failures == 0 else ExitCodes.VERIFICATION_FAILED

    # graphs

    def turan(self) -> int:
        args = self.args
        value = turan_u(args.n, args.r, args.method)
        self.output([{
            "n": args.n, "r": args.r, "parts": ",".join(map(str, turan_parts(args.n, args.r))), "u": value,
        }])
        return ExitCodes.SUCCESS

    def extremal(self) -> int:
        args = self.args
        result = find_max_ao(args.n, args.m, self.workers)
        reported = result.maximizers if args.report_all else result.maximizers[:1]
        if args.format is None:
            blocks = [f"max_ao {result.max_count}", f"maximizers {len(result.maximizers)}"]
            blocks.extend(f"degrees {seq} count {k}" for seq, k in result.by_degree_sequence.items())
            print("\n".join(blocks))
            for g in reported:
                print()
                print(g.to_text())
            return ExitCodes.SUCCESS
        self.output([
            {"n": result.n, "m": result.m, "max_count": result.max_count,
             "edges": " ".join(f"{u}-{v}" for u, v in g.edges)}
            for g in reported
        ])
        return ExitCodes.SUCCESS

    def chromatic(self) -> int:
        with open(self.args.graph, encoding="utf-8") as f:
            g = Graph.from_text(f.read())
        coeffs = chromatic_polynomial(g)
        logger.info(f"AO = {count_ao_chromatic(g)}, AUSO per sink = {count_auso_chromatic(g)}")
        self.output([{"power": i, "coefficient": c} for i, c in enumerate(coeffs)])
        return ExitCodes.SUCCESS

    # verification

    def verify(self) -> int:
        args = self.args
        suites = [s for s in args.suites or [] if s != "all"] or None
        service = VerificationService(self.config, max_n=args.max_n)
        results = service.run(suites)
        if args.format is None:
            _render_report(results)
        else:
            self.output([r.model_dump() for r in results], fields=list(CheckResult.model_fields))
        failed = sum(1 for r in results if not r.passed)
        logger.info(f"{len(results) - failed} of {len(results)} checks passed")
        return ExitCodes.SUCCESS if failed == 0 else ExitCodes.VERIFICATION_FAILED


def _render_report(results: List[CheckResult]) -> None:
    table = Table(title="Verification report")
    table.add_column("Suite", style="cyan")
    table.add_column("Check")
    table.add_column("Status")
    table.add_column("Detail", overflow="fold")
    for r in results:
        status = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
        table.add_row(r.suite, r.name, status, "" if r.passed else r.detail)
    console = Console(file=sys.stdout, width=160)
    console.print(table)
    failed = sum(1 for r in results if not r.passed)
    console.print(f"{len(results) - failed} passed, {failed} failed")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OutputConstants.FORMATS, default=None,
                        help="Output format (default: csv; reports and traces default to text)")
    common.add_argument("--workers", type=int, default=1, help="Parallel workers for exhaustive scans")
    common.add_argument("--log-level", default="WARNING", help="Log level for stderr")
    common.add_argument("--log-file", default=None, help="Also log to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="toppleperm",
        description="Toppling permutations, excedances, Genocchi numbers and acyclic orientations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topple", parents=[common], help="Evolve conf(perm, r)")
    p.add_argument("--perm", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="Print the configuration after every pass")
    p.add_argument("--schedule", choices=TopplingConstants.SCHEDULES, default=TopplingConstants.SCHEDULE_PASS)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=App.topple)

    count = sub.add_parser("count", help="Counting commands")
    count_sub = count.add_subparsers(dest="what", required=True)

    c = count_sub.add_parser("exc", parents=[common], help="|E(n, m)|")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--method", choices=("formula", "enumerate"), default="formula")
    c.set_defaults(handler=App.count_exc)

    c = count_sub.add_parser("ao", parents=[common], help="Acyclic orientations of K_parts")
    c.add_argument("--parts", type=_parse_parts, required=True)
    c.add_argument("--method", choices=("formula", "brute", "sorts", "chromatic"), default="formula")
    c.set_defaults(handler=App.count_ao)

    c = count_sub.add_parser("auso", parents=[common], help="AUSOs of K_parts with a fixed sink")
    c.add_argument("--parts", type=_parse_parts, required=True)
    c.add_argument("--sink", type=int, default=1)
    c.add_argument("--method", choices=("formula", "brute", "sorts", "chromatic"), default="formula")
    c.set_defaults(handler=App.count_auso)

    c = count_sub.add_parser("topp", parents=[common], help="t(n), or t_r(n) with --r")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, default=None)
    c.add_argument("--method", choices=("formula", "simulate"), default="formula")
    c.set_defaults(handler=App.count_topp)

    c = count_sub.add_parser("r", parents=[common], help="|R(m, n)|")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=("formula", "brute"), default="formula")
    c.set_defaults(handler=App.count_r)

    t = sub.add_parser("table", parents=[common], help="Reproduce a table of values")
    t.add_argument("table", choices=("t_r", "t", "turan", "exc"))
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--n-min", type=int, default=None)
    t.add_argument("--m", type=int, default=None, help="Single excedance level for 'exc'")
    t.add_argument("--simulate", action="store_true", help="Simulate instead of the closed form for 't'")
    t.set_defaults(handler=App.table)

    s = sub.add_parser("seidel", parents=[common], help="Seidel triangle rows")
    s.add_argument("--rows", type=int, default=10)
    s.set_defaults(handler=App.seidel)

    s = sub.add_parser("collapsed", parents=[common], help="Collapsed permutations G_n")
    s.add_argument("--n", type=int, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")
    s.set_defaults(handler=App.collapsed)

    s = sub.add_parser("dellac", parents=[common], help="Dellac configurations")
    s.add_argument("--order", type=int, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--render", action="store_true", help="Print each configuration as a grid")
    s.set_defaults(handler=App.dellac)

    bij = sub.add_parser("bij", help="Bijections")
    bij_sub = bij.add_subparsers(dest="which", required=True)

    b = bij_sub.add_parser("topp2exc", parents=[common], help="Toppleable permutation to E(n, floor((n-1)/2))")
    b.add_argument("--perm", required=True)
    b.set_defaults(handler=App.bij_topp2exc)

    b = bij_sub.add_parser("exc2auso", parents=[common], help="E(m+n, m) to an orientation of K_{m,n}")
    b.add_argument("--perm", required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--n", type=int, default=None)
    b.set_defaults(handler=App.bij_exc2auso)

    b = bij_sub.add_parser("roundtrip", parents=[common], help="Exhaustive round trips between E(m+n, m) and R(m, n)")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(handler=App.bij_roundtrip)

    g = sub.add_parser("turan", parents=[common], help="u_{n,r} for the Turán graph T(n, r)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--method", choices=("auto", "formula", "multipartite"), default="auto")
    g.set_defaults(handler=App.turan)

    g = sub.add_parser("extremal", parents=[common], help="Maximum AO count over graphs with n vertices, m edges")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--report-all", action="store_true")
    g.set_defaults(handler=App.extremal)

    g = sub.add_parser("chromatic", parents=[common], help="Chromatic polynomial of a graph file")
    g.add_argument("--graph", required=True, help="File with an 'n m' header and m 'u v' lines")
    g.set_defaults(handler=App.chromatic)

    v = sub.add_parser("verify", parents=[common], help="Run verification suites")
    v.add_argument("suites", nargs="*", metavar="SUITE",
                   help="Suite names or 'all': " + ", ".join(VerificationService.SUITES))
    v.add_argument("--max-n", type=int, default=8)
    v.set_defaults(handler=App.verify)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCodes.SUCCESS if e.code in (0, None) else ExitCodes.USAGE_ERROR

    try:
        app = App(args)
    except ValueError as e:
        print(get_friendly_message(e), file=sys.stderr)
        return ExitCodes.USAGE_ERROR

    setup_logging(app.config.logging.level, app.config.logging.file)
    handler: Callable[[App], int] = args.handler
    try:
        return handler(app)
    except Exception as e:
        print(get_friendly_message(e), file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(run())

"""Command-line entry point: verify, treegraph, search, certify and export."""

from collections import Counter
from pathlib import Path
from typing import List, Optional
import argparse
import logging
import os
import sys

from pydantic import ValidationError

from .config import HarnessConfig, VerifyConfig, load_limits
from .counterexample import arboreal_induction_check, build_cycle_family, find_alpha_beta, verify_counterexample
from .errors import ArborealError, ClaimFailedError, InputError, LimitExceededError
from .harness import random_harness
from .models import CounterexampleReport
from .plane import certify_decomposition, certify_lemma, layered_octahedron, octahedron
from .spanning import enumerate_spanning_trees
from .tools import read_cycle_file, read_graph_file, serialize_cycles, serialize_graph, tree_graph_to_dot
from .treegraph import ALL, CycleFamily, build_tree_graph, components_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_GUARD = 2
EXIT_CLAIM = 3
EXIT_INPUT = 4
EXIT_USAGE = 64

BANNER = "=" * 50


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def configure_logging(verbose: bool = False) -> None:
    level = "DEBUG" if verbose else os.getenv("LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )


def _plural(count: int, word: str) -> str:
    return f"{count} {word}" if count == 1 else f"{count} {word}s"


def _sizes(sizes: List[int]) -> str:
    counts = Counter(sizes)
    return ", ".join(f"{size} x{counts[size]}" for size in sorted(counts, reverse=True))


def print_report(report: CounterexampleReport) -> None:
    print(BANNER)
    print(f"Layered octahedron G_{report.n}")
    print(BANNER)
    print(f"Vertices: {report.graph.vertices}  Edges: {report.graph.edges}  Faces: {report.graph.faces}")
    print(f"alpha = face {report.binding.alpha}, beta = face {report.binding.beta}, rho = face {report.binding.rho}")
    print(f"Spanning trees: {report.tree_count}")
    print(f"Cycles: {report.cycle_count}")
    print(f"Components: {len(report.components)} ({_sizes(report.components)})")
    print(f"Size-3 components: {report.size3_components}, first {report.binding.trees}")
    print(f"rho persists from G_0: {'yes' if report.rho_persists else 'no'}")
    print("-" * 50)
    for name, value in report.checks.model_dump().items():
        print(f"{name:>12}: {'ok' if value else 'FAILED'}")
    print("-" * 50)
    print(f"Verdict: {'counterexample verified' if report.verdict else 'not a counterexample'}")


def cmd_verify(args: argparse.Namespace) -> int:
    config = VerifyConfig(
        n=args.n,
        limits=load_limits(args.max_trees, args.max_cycles),
        witnesses=args.witnesses,
    )
    logger.info(f"Verifying G_{config.n} with limits {config.limits}")
    try:
        report = verify_counterexample(config.n, config.limits, config.witnesses)
    except ClaimFailedError as e:
        if args.json and e.report is not None:
            Path(args.json).write_text(e.report.model_dump_json(indent=2) + "\n")
        raise
    print_report(report)
    if args.json:
        Path(args.json).write_text(report.model_dump_json(indent=2) + "\n")
    return EXIT_OK if report.verdict else EXIT_CLAIM


def cmd_treegraph(args: argparse.Namespace) -> int:
    graph_file = read_graph_file(args.graph)
    g = graph_file.graph
    limits = load_limits(args.max_trees, None)
    if args.all:
        family = ALL
    else:
        family = CycleFamily.from_cycles(g, read_cycle_file(args.cycles, g))
    trees = enumerate_spanning_trees(g, limits.max_trees)
    tg = build_tree_graph(g, trees, family)
    print(f"{_plural(tg.tree_count, 'tree')}, {_plural(tg.component_count, 'component')}")
    if args.components:
        for component in components_summary(tg):
            print(f"  {_plural(component.size, 'tree')} (representative {component.representative})")
    if args.dot:
        Path(args.dot).write_text(tree_graph_to_dot(tg))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    config = HarnessConfig(
        seed=args.seed,
        max_vertices=args.max_vertices,
        samples=args.samples,
        workers=args.workers,
        include_octahedron=args.include_octahedron,
    )
    summary = random_harness(config)
    print(BANNER)
    print(f"Search seed={summary.seed} max_vertices={summary.max_vertices} samples={summary.samples}")
    print(BANNER)
    print(f"Evaluated: {summary.evaluated}  Skipped: {summary.skipped}  Connected T(G,C): {summary.connected_cases}")
    print(f"Connected but not spanning: {len(summary.connected_not_spanning)}")
    print(f"Duality discrepancies: {len(summary.duality_discrepancies)}")
    print(f"Counterexamples found: {len(summary.counterexamples)}")
    if args.out:
        Path(args.out).write_text(summary.model_dump_json(indent=2) + "\n")
    if summary.duality_discrepancies:
        logger.warning(f"{len(summary.duality_discrepancies)} duality discrepancies; see the summary for the cases")
    # exit 3 only for a connected T(G, C) whose family does not span
    return EXIT_CLAIM if summary.connected_not_spanning else EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    limits = load_limits(args.max_trees, args.max_cycles)
    pg = layered_octahedron(args.n)
    binding = find_alpha_beta(octahedron(), limits)[0]
    lemma = certify_lemma(pg)
    decomposition = certify_decomposition(pg, binding.alpha, binding.beta)
    print(BANNER)
    print(f"Face certifications on G_{args.n}")
    print(BANNER)
    print(f"Two-face lemma: {lemma.checked} cycles, {len(lemma.failures)} failures")
    print(f"Decomposition (alpha={binding.alpha}, beta={binding.beta}): "
          f"{decomposition.checked} cycles, {len(decomposition.failures)} failures")
    ok = lemma.ok and decomposition.ok
    if args.induction is not None:
        induction = arboreal_induction_check(args.induction, limits)
        print(f"Induction t={induction.t}: {induction.trees_scanned} trees, "
              f"{induction.trees_in_scope} in scope ({induction.excluded_by_band} excluded by the band, "
              f"{induction.excluded_by_outer_triangle} by the outer triangle), {len(induction.violations)} violations")
        ok = ok and induction.ok
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_export(args: argparse.Namespace) -> int:
    pg = layered_octahedron(args.n)
    Path(args.graph).write_text(serialize_graph(pg.graph, pg))
    if args.cycles:
        binding = find_alpha_beta(octahedron())[0]
        family = build_cycle_family(pg, binding.alpha, binding.beta)
        Path(args.cycles).write_text(serialize_cycles(list(family)))
    return EXIT_OK


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog="arboreal", description="Tree graphs, arboreal cycle families and the layered-octahedron counterexample")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Verify the counterexample on G_n")
    verify.add_argument("n", type=_non_negative)
    verify.add_argument("--json", metavar="PATH", help="Write the report as JSON")
    verify.add_argument("--max-trees", type=int, help="Spanning tree guard (default 10^7)")
    verify.add_argument("--max-cycles", type=int, help="Cycle guard (default 10^7)")
    verify.add_argument("--witnesses", action="store_true", help="Include a spanning sequence per cycle")
    verify.set_defaults(handler=cmd_verify)

    treegraph = commands.add_parser("treegraph", help="Build T(G) or T(G, C) from files")
    treegraph.add_argument("graph", metavar="GRAPHFILE")
    source = treegraph.add_mutually_exclusive_group(required=True)
    source.add_argument("--cycles", metavar="CYCLEFILE")
    source.add_argument("--all", action="store_true", help="Allow every exchange")
    treegraph.add_argument("--components", action="store_true", help="List components")
    treegraph.add_argument("--dot", metavar="PATH", help="Write the tree graph in DOT")
    treegraph.add_argument("--max-trees", type=int)
    treegraph.set_defaults(handler=cmd_treegraph)

    search = commands.add_parser("search", help="Random consistency search on small graphs")
    search.add_argument("--seed", type=int, default=42)
    search.add_argument("--max-vertices", type=int, default=5)
    search.add_argument("--samples", type=int, default=1000)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--include-octahedron", action="store_true")
    search.add_argument("--out", metavar="PATH", help="Write the summary as JSON")
    search.set_defaults(handler=cmd_search)

    certify = commands.add_parser("certify", help="Exhaustive face-lemma and decomposition checks on G_n")
    certify.add_argument("n", type=_non_negative, nargs="?", default=0)
    certify.add_argument("--induction", type=_non_negative, metavar="T", help="Also check the layer step G_T -> G_T+1")
    certify.add_argument("--max-trees", type=int)
    certify.add_argument("--max-cycles", type=int)
    certify.set_defaults(handler=cmd_certify)

    export = commands.add_parser("export", help="Write G_n and its counterexample family to files")
    export.add_argument("n", type=_non_negative)
    export.add_argument("--graph", metavar="PATH", required=True)
    export.add_argument("--cycles", metavar="PATH")
    export.set_defaults(handler=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except ValidationError as e:
        print(f"Invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceededError as e:
        print(f"Skipped: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ClaimFailedError as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        return EXIT_CLAIM
    except (InputError, OSError) as e:
        print(f"Input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ArborealError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

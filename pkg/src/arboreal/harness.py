"""Randomized consistency harness over small graphs and random cycle families.

Every sample checks that a connected T(G, C) implies cyclic spanning, that arboreality
matches the absence of isolated trees, and records any 2-connected, arboreal, spanning
family whose tree graph is disconnected.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple
import logging
import random

from .config import EnumerationLimits, HarnessConfig
from .counterexample import build_cycle_family, find_alpha_beta
from .graph import EdgeSet, Graph, build_graph, enumerate_cycles, is_biconnected, is_connected
from .models import CaseRecord, HarnessSummary
from .plane import octahedron
from .spanning import count_spanning_trees, enumerate_spanning_trees
from .treegraph import CycleFamily, build_tree_graph, cyclically_spans, is_arboreal, min_degree

logger = logging.getLogger(__name__)

CONNECT_ATTEMPTS = 50


def sample_graph(rng: random.Random, max_vertices: int) -> Graph:
    """Random connected graph on 3..max_vertices vertices, edges kept with a per-sample percentage."""
    n = rng.randint(3, max_vertices)
    p = rng.randint(30, 90)
    pairs = list(combinations(range(n), 2))
    edges: List[Tuple[int, int]] = []
    for _ in range(CONNECT_ATTEMPTS):
        edges = [pair for pair in pairs if rng.randrange(100) < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    # give up on the filter and thread a path through the last draw
    joined = set(edges) | {(i, i + 1) for i in range(n - 1)}
    return build_graph(n, sorted(joined))


def sample_family(rng: random.Random, g: Graph, cycles: List[EdgeSet]) -> CycleFamily:
    q = rng.randint(10, 90)
    return CycleFamily.from_cycles(g, [c for c in cycles if rng.randrange(100) < q])


@dataclass
class SampleOutcome:
    index: int
    skipped: bool = False
    connected: bool = False
    connected_not_spanning: bool = False
    counterexample: bool = False
    duality_discrepancy: bool = False
    record: Optional[CaseRecord] = None


def evaluate(index: int, g: Graph, family: CycleFamily, max_trees: int) -> SampleOutcome:
    """Decide every predicate for one (G, C)."""
    tree_count = count_spanning_trees(g)
    if tree_count > max_trees:
        logger.debug(f"Sample {index}: {tree_count} trees, skipped")
        return SampleOutcome(index, skipped=True)
    trees = enumerate_spanning_trees(g, max_trees)
    cycles = enumerate_cycles(g)
    tg = build_tree_graph(g, trees, family)
    spans = cyclically_spans(g, family, cycles)
    arboreal = is_arboreal(g, trees, family)
    outcome = SampleOutcome(
        index,
        connected=tg.is_connected(),
        duality_discrepancy=bool(arboreal) != (min_degree(tg) >= 1),
    )
    outcome.connected_not_spanning = outcome.connected and not spans
    outcome.counterexample = not outcome.connected and bool(arboreal) and bool(spans) and is_biconnected(g)
    outcome.record = CaseRecord(
        sample=index,
        vertices=g.vertex_count,
        edges=[list(e) for e in g.edges],
        family=[c.ids() for c in family],
        tree_count=tree_count,
        components=tg.component_count,
    )
    return outcome


def run_sample(config: HarnessConfig, index: int) -> SampleOutcome:
    if index == 0 and config.include_octahedron:
        pg = octahedron()
        binding = find_alpha_beta(pg, EnumerationLimits(max_trees=config.max_trees_per_sample))[0]
        return evaluate(index, pg.graph, build_cycle_family(pg, binding.alpha, binding.beta), config.max_trees_per_sample)
    rng = random.Random(f"{config.seed}:{index}")
    g = sample_graph(rng, config.max_vertices)
    family = sample_family(rng, g, enumerate_cycles(g))
    return evaluate(index, g, family, config.max_trees_per_sample)


def _run_sample_args(args: Tuple[HarnessConfig, int]) -> SampleOutcome:
    return run_sample(*args)


def random_harness(config: HarnessConfig) -> HarnessSummary:
    """Run ``config.samples`` samples; the summary depends only on the seed, never on ``workers``."""
    jobs = [(config, index) for index in range(config.samples)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(_run_sample_args, jobs, chunksize=32))
    else:
        outcomes = [_run_sample_args(job) for job in jobs]

    summary = HarnessSummary(seed=config.seed, max_vertices=config.max_vertices, samples=config.samples)
    for outcome in sorted(outcomes, key=lambda o: o.index):
        if outcome.skipped:
            summary.skipped += 1
            continue
        summary.evaluated += 1
        summary.connected_cases += outcome.connected
        if outcome.connected_not_spanning:
            logger.error(f"Sample {outcome.index}: tree graph connected but family does not cyclically span")
            summary.connected_not_spanning.append(outcome.record)
        if outcome.duality_discrepancy:
            logger.error(f"Sample {outcome.index}: arboreality disagrees with the minimum degree of T(G, C)")
            summary.duality_discrepancies.append(outcome.record)
        if outcome.counterexample:
            logger.info(f"Sample {outcome.index}: arboreal spanning family with a disconnected tree graph")
            summary.counterexamples.append(outcome.record)
    logger.info(
        f"Harness seed={config.seed}: {summary.evaluated} evaluated, {summary.skipped} skipped, "
        f"{len(summary.counterexamples)} counterexamples"
    )
    return summary

"""The layered-octahedron counterexample: face binding, the replaced-face family and its verification."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import logging

from .config import EnumerationLimits
from .errors import (
    Claim,
    ClaimFailedError,
    FacesNotAdjacentError,
    NoBindingFoundError,
    OuterFaceChosenError,
    TreeLimitExceededError,
)
from .graph import EdgeSet, enumerate_cycles, is_biconnected
from .models import (
    BindingInfo,
    Checks,
    CounterexampleReport,
    GraphStats,
    InductionReport,
    InductionViolation,
    WitnessEntry,
)
from .plane import PlaneGraph, layered_octahedron, octahedron
from .spanning import (
    SpanningTree,
    TreeIndex,
    count_spanning_trees,
    enumerate_spanning_trees,
    is_spanning_tree_bits,
)
from .treegraph import (
    ArborealResult,
    ComponentSummary,
    CycleFamily,
    SpanResult,
    TreeGraphAdjacency,
    build_tree_graph,
    component_members,
    components_summary,
    cyclically_spans,
    family_fundamental_cycles,
    is_arboreal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelBinding:
    """Faces alpha, beta (alpha is replaced by alpha + beta), the derived rho, and the trees of the small component."""
    alpha: int
    beta: int
    rho: int
    small_component_tree_ids: Tuple[int, ...]
    size3_components: Tuple[Tuple[int, ...], ...] = ()


def build_cycle_family(pg: PlaneGraph, alpha: int, beta: int) -> CycleFamily:
    """Internal faces in id order, with alpha's slot holding alpha + beta."""
    for face_id in (alpha, beta):
        if face_id == pg.outer_face:
            raise OuterFaceChosenError(f"face {face_id} is the outer face")
        if not 0 <= face_id < pg.face_count:
            raise FacesNotAdjacentError(f"face {face_id} does not exist")
    if alpha == beta or len(pg.shared_edges(alpha, beta)) != 1:
        raise FacesNotAdjacentError(f"faces {alpha} and {beta} do not share exactly one edge")
    members = [
        pg.faces[alpha] ^ pg.faces[beta] if face_id == alpha else pg.faces[face_id]
        for face_id in pg.internal_faces()
    ]
    return CycleFamily.from_cycles(pg.graph, members)


@dataclass
class Analysis:
    """Everything decided about one (alpha, beta) family on one plane graph."""
    alpha: int
    beta: int
    family: CycleFamily
    arboreal: ArborealResult
    spans: SpanResult
    tree_graph: TreeGraphAdjacency
    summary: List[ComponentSummary]
    small_components: List[List[int]] = field(default_factory=list)
    rhos: List[Optional[int]] = field(default_factory=list)

    @property
    def disconnected(self) -> bool:
        return self.tree_graph.component_count >= 2

    @property
    def rho_unique(self) -> bool:
        return bool(self.small_components) and all(rho is not None for rho in self.rhos)

    @property
    def rho(self) -> Optional[int]:
        return self.rhos[0] if self.rhos else None

    def binding(self) -> LabelBinding:
        return LabelBinding(
            alpha=self.alpha,
            beta=self.beta,
            rho=self.rho,
            small_component_tree_ids=tuple(self.small_components[0]),
            size3_components=tuple(tuple(c) for c in self.small_components),
        )


def _component_rho(pg: PlaneGraph, trees: Sequence[SpanningTree], family: CycleFamily, members: List[int]) -> Optional[int]:
    """Face id of the one family cycle fundamental to every tree of the component, if there is one."""
    found = set()
    for tree_id in members:
        positions = family_fundamental_cycles(pg.graph, trees[tree_id], family)
        if len(positions) != 1:
            return None
        found.add(positions[0])
    if len(found) != 1:
        return None
    return pg.internal_faces()[found.pop()]


def analyse(
    pg: PlaneGraph, trees: Sequence[SpanningTree], cycles: Sequence[EdgeSet], alpha: int, beta: int
) -> Analysis:
    family = build_cycle_family(pg, alpha, beta)
    g = pg.graph
    arboreal = is_arboreal(g, trees, family)
    spans = cyclically_spans(g, family, cycles)
    tg = build_tree_graph(g, trees, family)
    members = component_members(tg)
    small = sorted((ids for ids in members if len(ids) == 3), key=lambda ids: ids[0])
    rhos = [_component_rho(pg, trees, family, ids) for ids in small]
    logger.debug(
        f"alpha={alpha} beta={beta}: arboreal={bool(arboreal)} spans={bool(spans)} "
        f"components={tg.component_count} size3={len(small)}"
    )
    return Analysis(alpha, beta, family, arboreal, spans, tg, components_summary(tg), small, rhos)


def adjacent_pairs(pg: PlaneGraph, faces: Optional[Sequence[int]] = None) -> List[Tuple[int, int]]:
    """Ordered pairs of distinct internal faces sharing exactly one edge."""
    faces = pg.innermost_faces if faces is None else faces
    return [
        (a, b) for a in faces for b in faces
        if a != b and len(pg.shared_edges(a, b)) == 1
    ]


def find_alpha_beta(pg: PlaneGraph, limits: Optional[EnumerationLimits] = None) -> List[LabelBinding]:
    """Every (alpha, beta) of the innermost faces whose family refutes tree-graph connectivity.

    A pair is kept when its family is arboreal, cyclically spans, leaves T(G, C) disconnected
    with a component of three trees, and those trees share a single family fundamental cycle.
    """
    limits = limits or EnumerationLimits()
    trees = enumerate_spanning_trees(pg.graph, limits.max_trees)
    cycles = enumerate_cycles(pg.graph, limits.max_cycles)
    bindings = []
    for alpha, beta in adjacent_pairs(pg):
        result = analyse(pg, trees, cycles, alpha, beta)
        if result.arboreal and result.spans and result.disconnected and result.rho_unique:
            bindings.append(result.binding())
    if not bindings:
        raise NoBindingFoundError(f"none of {len(adjacent_pairs(pg))} adjacent face pairs yields a counterexample")
    bindings.sort(key=lambda b: (b.alpha, b.beta))
    logger.info(f"Found {len(bindings)} bindings; first alpha={bindings[0].alpha} beta={bindings[0].beta} rho={bindings[0].rho}")
    return bindings


def _guard_trees(pg: PlaneGraph, limits: EnumerationLimits) -> int:
    total = count_spanning_trees(pg.graph)
    if total > limits.max_trees:
        logger.warning(f"{total} spanning trees exceed the limit of {limits.max_trees}")
        raise TreeLimitExceededError(limits.max_trees, total)
    return total


def _fail(claim: Claim, message: str, report: CounterexampleReport) -> ClaimFailedError:
    logger.error(f"Claim {claim.value} failed at n={report.n}: {message}")
    return ClaimFailedError(claim, message, report)


def verify_counterexample(
    n: int, limits: Optional[EnumerationLimits] = None, witnesses: bool = False
) -> CounterexampleReport:
    """Build G_n and its family and check every claim of the construction, in order."""
    limits = limits or EnumerationLimits()
    pg = layered_octahedron(n)
    g = pg.graph
    total = _guard_trees(pg, limits)

    base = find_alpha_beta(octahedron(), limits)[0]
    trees = enumerate_spanning_trees(g, limits.max_trees)
    cycles = enumerate_cycles(g, limits.max_cycles)
    result = analyse(pg, trees, cycles, base.alpha, base.beta)

    report = CounterexampleReport(
        n=n,
        graph=GraphStats(vertices=g.vertex_count, edges=g.edge_count, faces=pg.face_count),
        binding=BindingInfo(
            alpha=base.alpha,
            beta=base.beta,
            rho=result.rho,
            trees=result.small_components[0] if result.small_components else [],
        ),
        checks=Checks(
            biconnected=is_biconnected(g),
            arboreal=bool(result.arboreal),
            spans=bool(result.spans),
            disconnected=result.disconnected,
            rho_unique=result.rho_unique,
        ),
        components=[c.size for c in result.summary],
        tree_count=str(total),
        cycle_count=len(cycles),
        size3_components=len(result.small_components),
        small_component=[trees[i].edges.ids() for i in (result.small_components[0] if result.small_components else [])],
        rho_persists=base.rho in result.rhos,
    )
    if witnesses:
        report.witnesses = [
            WitnessEntry(cycle=w.target.ids(), sequence=list(w.sequence))
            for _, w in sorted(result.spans.witnesses.items())
        ]
    report.conclude()

    checks = report.checks
    if not checks.biconnected:
        raise _fail(Claim.BICONNECTED, "graph has a cut vertex", report)
    if not checks.arboreal:
        raise _fail(Claim.ARBOREAL, f"tree {result.arboreal.witness.edges.ids()} has no fundamental cycle in the family", report)
    if not checks.spans:
        raise _fail(Claim.SPANS, f"{len(result.spans.unreached)} cycles are not cyclically spanned", report)
    if not checks.disconnected:
        raise _fail(Claim.DISCONNECTED, "tree graph is connected", report)
    if not result.small_components:
        raise _fail(Claim.DISCONNECTED, "no component of exactly three trees", report)
    if not checks.rho_unique:
        raise _fail(Claim.RHO_UNIQUE, "a three-tree component has more than one family fundamental cycle", report)

    logger.info(f"G_{n} verified: {report.tree_count} trees in {len(report.components)} components")
    return report


def _is_path(pg: PlaneGraph, bits: int, length: int) -> bool:
    if bits.bit_count() != length:
        return False
    degree = {}
    for edge_id in pg.graph.edge_set_from_bits(bits):
        for vertex in pg.graph.edges[edge_id]:
            degree[vertex] = degree.get(vertex, 0) + 1
    # an acyclic edge set with one more vertex than edges is connected
    return len(degree) == length + 1 and max(degree.values()) <= 2


def arboreal_induction_check(t: int, limits: Optional[EnumerationLimits] = None) -> InductionReport:
    """Check the layer-by-layer arboreality argument on every tree of G_{t+1}.

    A tree is in scope when no triangle of the outermost band is one of its fundamental
    cycles and it uses exactly two edges of the outer triangle. For those trees the edges
    outside G_t must form a path of three edges, and the rest must be a spanning tree of G_t.
    """
    limits = limits or EnumerationLimits()
    inner = layered_octahedron(t)
    outer = layered_octahedron(t + 1)
    _guard_trees(outer, limits)
    base = find_alpha_beta(octahedron(), limits)[0]
    family = build_cycle_family(outer, base.alpha, base.beta)

    g = outer.graph
    new_vertices = set(outer.outer_vertices)
    band = {
        outer.faces[f].bits for f in outer.internal_faces()
        if g.vertices_of(outer.faces[f]) & new_vertices
    }
    omega = outer.faces[outer.outer_face].bits
    old_mask = (1 << inner.graph.edge_count) - 1

    report = InductionReport(t=t, arboreal=True)
    for tree in enumerate_spanning_trees(g, limits.max_trees):
        report.trees_scanned += 1
        fundamentals = [bits for _, bits in TreeIndex(g, tree.bits).fundamental_cycle_bits()]
        if not any(family.position(bits) is not None for bits in fundamentals):
            report.arboreal = False
            report.violations.append(InductionViolation(tree=tree.edges.ids(), reason="no fundamental cycle in the family"))
        if any(bits in band for bits in fundamentals):
            report.excluded_by_band += 1
            continue
        if (tree.bits & omega).bit_count() != 2:
            report.excluded_by_outer_triangle += 1
            continue
        report.trees_in_scope += 1
        if not _is_path(outer, tree.bits & ~old_mask, 3):
            report.violations.append(InductionViolation(tree=tree.edges.ids(), reason="outer-layer edges are not a 3-edge path"))
        elif not is_spanning_tree_bits(inner.graph, tree.bits & old_mask):
            report.violations.append(InductionViolation(tree=tree.edges.ids(), reason="inner part is not a spanning tree of G_t"))
    logger.info(
        f"Induction check t={t}: {report.trees_scanned} trees, {report.trees_in_scope} in scope, "
        f"{report.excluded_by_band} excluded by the band, {report.excluded_by_outer_triangle} by the outer triangle, "
        f"{len(report.violations)} violations"
    )
    return report

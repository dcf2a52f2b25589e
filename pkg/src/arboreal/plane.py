"""Plane graphs with explicit faces: interior counting, diagonals, the two-face lemma,
cyclic face decompositions, and the octahedron / layered-octahedron builders."""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple
import logging

from .errors import (
    Claim,
    ClaimFailedError,
    InvalidEmbeddingError,
    KTooSmallError,
    NotACycleError,
    NotInFamilyFormError,
    NotTriangulatedError,
)
from .graph import (
    EdgeSet,
    Graph,
    build_graph,
    cycle_space_rank,
    enumerate_cycles,
    is_cycle,
    is_cycle_bits,
    iter_bits,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlaneGraph:
    """A graph together with the edge sets of its faces and the id of its outer face."""
    graph: Graph
    faces: Tuple[EdgeSet, ...]
    outer_face: int
    innermost_faces: Tuple[int, ...] = ()
    outer_vertices: Tuple[int, ...] = ()
    _edge_faces: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        incidence: List[List[int]] = [[] for _ in range(self.graph.edge_count)]
        for face_id, face in enumerate(self.faces):
            for edge_id in face:
                incidence[edge_id].append(face_id)
        object.__setattr__(self, "_edge_faces", tuple(tuple(row) for row in incidence))
        if not self.innermost_faces:
            object.__setattr__(self, "innermost_faces", tuple(self.internal_faces()))

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def internal_faces(self) -> List[int]:
        return [face_id for face_id in range(len(self.faces)) if face_id != self.outer_face]

    def edge_faces(self, edge_id: int) -> Tuple[int, ...]:
        """The faces bordering ``edge_id`` (two of them in a valid embedding)."""
        return self._edge_faces[edge_id]

    def is_triangulated(self) -> bool:
        return all(len(self.faces[f]) == 3 for f in self.internal_faces())

    def shared_edges(self, a: int, b: int) -> EdgeSet:
        return self.faces[a] & self.faces[b]

    def validate(self) -> None:
        """Check the embedding invariants; raise InvalidEmbeddingError on the first violation."""
        g = self.graph
        if not 0 <= self.outer_face < len(self.faces):
            raise InvalidEmbeddingError(f"outer face {self.outer_face} out of range")
        for face_id, face in enumerate(self.faces):
            if not is_cycle(g, face):
                raise InvalidEmbeddingError(f"face {face_id} is not a simple cycle")
        expected = g.edge_count - g.vertex_count + 2
        if len(self.faces) != expected:
            raise InvalidEmbeddingError(f"{len(self.faces)} faces given, Euler's formula needs {expected}")
        for edge_id, incident in enumerate(self._edge_faces):
            if len(incident) != 2:
                raise InvalidEmbeddingError(f"edge {edge_id} lies on {len(incident)} faces")
        internal = [self.faces[f] for f in self.internal_faces()]
        if cycle_space_rank(internal) != g.edge_count - g.vertex_count + 1:
            raise InvalidEmbeddingError("internal faces do not form a basis of the cycle space")


@dataclass(frozen=True)
class FacePair:
    phi: int
    psi: int


def build_plane_graph(graph: Graph, faces: Sequence[EdgeSet], outer_face: int) -> PlaneGraph:
    pg = PlaneGraph(graph=graph, faces=tuple(faces), outer_face=outer_face)
    pg.validate()
    return pg


def _band(old: Sequence[int], new: Sequence[int]) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int, int]]]:
    """Edges and triangles joining triangle ``old`` to the surrounding triangle ``new``.

    new[i] is adjacent to old[i] and old[i + 1]; the band holds six triangles.
    """
    edges = [(new[0], new[1]), (new[1], new[2]), (new[2], new[0])]
    triangles = []
    for i in range(3):
        edges.append((new[i], old[i]))
        edges.append((new[i], old[(i + 1) % 3]))
    for i in range(3):
        triangles.append((new[i], old[i], old[(i + 1) % 3]))
    for i in range(3):
        triangles.append((new[i], new[(i + 1) % 3], old[(i + 1) % 3]))
    return edges, triangles


def _triangle(graph: Graph, vertices: Sequence[int]) -> EdgeSet:
    return graph.path_set(vertices, closed=True)


def octahedron() -> PlaneGraph:
    """Plane octahedron: outer triangle 0,1,2 around inner triangle 3,4,5.

    Internal faces are numbered by their sorted vertex triples; the outer face is last.
    """
    inner, outer = (3, 4, 5), (0, 1, 2)
    band_edges, band_triangles = _band(inner, outer)
    edges = band_edges[:3] + [(3, 4), (4, 5), (5, 3)] + band_edges[3:]
    graph = build_graph(6, edges)
    internal = sorted(tuple(sorted(t)) for t in band_triangles + [inner])
    faces = [_triangle(graph, t) for t in internal] + [_triangle(graph, outer)]
    pg = PlaneGraph(
        graph=graph,
        faces=tuple(faces),
        outer_face=len(faces) - 1,
        innermost_faces=tuple(range(len(internal))),
        outer_vertices=outer,
    )
    logger.debug("Built octahedron")
    return pg


def layered_octahedron(n: int) -> PlaneGraph:
    """G_n: the octahedron wrapped in ``n`` further octahedral shells.

    Every layer keeps the vertex, edge and internal face ids of the graph it wraps, appends
    its six band triangles and replaces the outer face, so the innermost copy always has
    face ids 0..6 and G_t's edges are a prefix of G_{t+1}'s.
    """
    if n < 0:
        raise ValueError(f"layer count must be non-negative, got {n}")
    base = octahedron()
    edges = list(base.graph.edges)
    triangles: List[Tuple[int, ...]] = []
    for face_id in base.internal_faces():
        triangles.append(tuple(sorted(base.graph.vertices_of(base.faces[face_id]))))
    old = base.outer_vertices
    vertex_count = 6
    for _ in range(n):
        new = (vertex_count, vertex_count + 1, vertex_count + 2)
        band_edges, band_triangles = _band(old, new)
        edges.extend(band_edges)
        triangles.extend(band_triangles)
        vertex_count += 3
        old = new
    graph = build_graph(vertex_count, edges)
    faces = [_triangle(graph, t) for t in triangles] + [_triangle(graph, old)]
    pg = PlaneGraph(
        graph=graph,
        faces=tuple(faces),
        outer_face=len(faces) - 1,
        innermost_faces=base.innermost_faces,
        outer_vertices=old,
    )
    logger.info(f"Built G_{n}: {graph.vertex_count} vertices, {graph.edge_count} edges, {len(faces)} faces")
    return pg


def _require_cycle(pg: PlaneGraph, sigma: EdgeSet) -> None:
    if not is_cycle(pg.graph, sigma):
        raise NotACycleError(f"edge set {sigma.ids()} is not a cycle")


def _interior_bits(pg: PlaneGraph, bits: int) -> FrozenSet[int]:
    # flood the dual from the outer face without crossing edges of the cycle
    exterior = {pg.outer_face}
    frontier = [pg.outer_face]
    for face_id in frontier:
        for edge_id in iter_bits(pg.faces[face_id].bits & ~bits):
            for neighbour in pg.edge_faces(edge_id):
                if neighbour not in exterior:
                    exterior.add(neighbour)
                    frontier.append(neighbour)
    return frozenset(f for f in range(len(pg.faces)) if f not in exterior)


def interior_faces(pg: PlaneGraph, sigma: EdgeSet) -> FrozenSet[int]:
    """Faces strictly inside the cycle ``sigma``; k(sigma) is the size of the result."""
    _require_cycle(pg, sigma)
    return _interior_bits(pg, sigma.bits)


def diagonal_edges(pg: PlaneGraph, sigma: EdgeSet) -> EdgeSet:
    """Edges inside ``sigma`` whose two endpoints both lie on ``sigma``."""
    inside = interior_faces(pg, sigma)
    on_cycle = pg.graph.vertices_of(sigma)
    bits = 0
    for edge_id, (u, v) in enumerate(pg.graph.edges):
        if edge_id in sigma or u not in on_cycle or v not in on_cycle:
            continue
        if all(f in inside for f in pg.edge_faces(edge_id)):
            bits |= 1 << edge_id
    return pg.graph.edge_set_from_bits(bits)


def _require_triangulated(pg: PlaneGraph) -> None:
    if not pg.is_triangulated():
        raise NotTriangulatedError("every internal face must be a triangle")


def _reducing_faces(pg: PlaneGraph, bits: int, inside: FrozenSet[int]) -> List[int]:
    """Interior faces sharing an edge with the cycle whose removal leaves a cycle."""
    return [
        f for f in sorted(inside)
        if pg.faces[f].bits & bits and is_cycle_bits(pg.graph, bits ^ pg.faces[f].bits)
    ]


def lemma_two_faces(pg: PlaneGraph, sigma: EdgeSet) -> FacePair:
    """Two distinct interior faces phi, psi touching ``sigma`` with sigma + phi and sigma + psi cycles."""
    _require_triangulated(pg)
    inside = interior_faces(pg, sigma)
    if len(inside) < 2:
        raise KTooSmallError(f"cycle encloses {len(inside)} face(s), at least 2 needed")
    candidates = _reducing_faces(pg, sigma.bits, inside)
    if len(candidates) < 2:
        raise ClaimFailedError(Claim.LEMMA, f"only {len(candidates)} reducing face(s) inside {sigma.ids()}")
    return FacePair(candidates[0], candidates[1])


def family_form(pg: PlaneGraph, family: Sequence[EdgeSet]) -> Tuple[int, int]:
    """Recover (alpha, beta) from a family of internal faces with alpha swapped for alpha + beta."""
    internal = {pg.faces[f].bits: f for f in pg.internal_faces()}
    members = {c.bits for c in family}
    if len(members) != len(family) or len(family) != len(internal):
        raise NotInFamilyFormError(f"family of {len(family)} cycles against {len(internal)} internal faces")
    missing = [f for bits, f in internal.items() if bits not in members]
    extra = [bits for bits in members if bits not in internal]
    if len(missing) != 1 or len(extra) != 1:
        raise NotInFamilyFormError("family must differ from the internal faces in exactly one member")
    alpha = missing[0]
    beta = internal.get(extra[0] ^ pg.faces[alpha].bits)
    if beta is None or (pg.faces[alpha].bits & pg.faces[beta].bits).bit_count() != 1:
        raise NotInFamilyFormError(f"replacement for face {alpha} is not alpha + beta for an adjacent face beta")
    return alpha, beta


def decompose(pg: PlaneGraph, alpha: int, beta: int, sigma: EdgeSet) -> List[EdgeSet]:
    """Cyclic decomposition of ``sigma`` over the faces with ``alpha`` replaced by alpha + beta.

    Faces are peeled off the cycle one at a time until what is left is a family member, or
    alpha itself, which is emitted as (alpha + beta, beta). The peeled face is the smallest
    qualifying id other than alpha and beta; beta is taken only when nothing else qualifies,
    so a region holding both usually closes on the single member alpha + beta.
    """
    _require_cycle(pg, sigma)
    faces = pg.faces
    members = {faces[f].bits for f in pg.internal_faces() if f != alpha}
    members.add(faces[alpha].bits ^ faces[beta].bits)
    peeled: List[EdgeSet] = []
    current = sigma
    while True:
        if current.bits in members:
            return [current] + peeled[::-1]
        if current.bits == faces[alpha].bits:
            return [faces[alpha] ^ faces[beta], faces[beta]] + peeled[::-1]
        inside = _interior_bits(pg, current.bits)
        choices = [f for f in _reducing_faces(pg, current.bits, inside) if f != alpha]
        if not choices:
            raise ClaimFailedError(Claim.DECOMPOSITION, f"no face other than alpha reduces {current.ids()}")
        phi = next((f for f in choices if f != beta), choices[0])
        peeled.append(faces[phi])
        current = current ^ faces[phi]


def cyclic_face_decomposition(pg: PlaneGraph, family: Sequence[EdgeSet], sigma: EdgeSet) -> List[EdgeSet]:
    """tau_1..tau_m from ``family`` with XOR sigma and every prefix XOR a cycle."""
    _require_triangulated(pg)
    alpha, beta = family_form(pg, family)
    return decompose(pg, alpha, beta, sigma)


@dataclass
class Certification:
    checked: int = 0
    failures: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def certify_lemma(pg: PlaneGraph, cycles: Optional[Sequence[EdgeSet]] = None) -> Certification:
    """Check the two-face lemma's conclusion on every cycle enclosing at least two faces."""
    result = Certification()
    g = pg.graph
    if cycles is None:
        cycles = enumerate_cycles(g)
    for sigma in cycles:
        inside = interior_faces(pg, sigma)
        if len(inside) < 2:
            continue
        result.checked += 1
        try:
            pair = lemma_two_faces(pg, sigma)
        except ClaimFailedError as e:
            result.failures.append((sigma.bits, str(e)))
            continue
        good = (
            pair.phi != pair.psi
            and {pair.phi, pair.psi} <= inside
            and bool(pg.faces[pair.phi] & sigma)
            and bool(pg.faces[pair.psi] & sigma)
            and is_cycle(g, sigma ^ pg.faces[pair.phi])
            and is_cycle(g, sigma ^ pg.faces[pair.psi])
        )
        if not good:
            result.failures.append((sigma.bits, f"pair {pair} fails the lemma's conditions"))
    logger.info(f"Lemma certification: {result.checked} cycles checked, {len(result.failures)} failures")
    return result


def certify_decomposition(
    pg: PlaneGraph, alpha: int, beta: int, cycles: Optional[Sequence[EdgeSet]] = None
) -> Certification:
    """Decompose every cycle and re-check the XOR and prefix-cycle conditions."""
    result = Certification()
    g = pg.graph
    if cycles is None:
        cycles = enumerate_cycles(g)
    allowed = {pg.faces[f].bits for f in pg.internal_faces() if f != alpha}
    allowed.add(pg.faces[alpha].bits ^ pg.faces[beta].bits)
    for sigma in cycles:
        result.checked += 1
        try:
            sequence = decompose(pg, alpha, beta, sigma)
        except ClaimFailedError as e:
            result.failures.append((sigma.bits, str(e)))
            continue
        prefix = 0
        for tau in sequence:
            prefix ^= tau.bits
            if tau.bits not in allowed or not is_cycle_bits(g, prefix):
                result.failures.append((sigma.bits, f"bad prefix {prefix:#x}"))
                break
        else:
            if prefix != sigma.bits:
                result.failures.append((sigma.bits, "sequence does not sum to the cycle"))
    logger.info(f"Decomposition certification ({alpha}, {beta}): {result.checked} cycles, {len(result.failures)} failures")
    return result

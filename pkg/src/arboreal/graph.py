"""Core graph representation, GF(2) edge-set arithmetic and cycle recognition."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple
import logging

import networkx as nx

from .config import DEFAULT_MAX_CYCLES
from .errors import (
    CapacityMismatchError,
    CycleLimitExceededError,
    DuplicateEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
)

logger = logging.getLogger(__name__)


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class EdgeSet:
    """A set of edge ids stored as a bit vector; the elements of the cycle space over GF(2).

    EdgeSets order by the integer value of their bit pattern, which is the canonical
    order used for every materialized collection in this package.
    """
    bits: int
    capacity: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.capacity:
            raise CapacityMismatchError(f"bits {self.bits:#x} do not fit capacity {self.capacity}")

    @classmethod
    def empty(cls, capacity: int) -> "EdgeSet":
        return cls(0, capacity)

    @classmethod
    def from_ids(cls, edge_ids: Iterable[int], capacity: int) -> "EdgeSet":
        bits = 0
        for edge_id in edge_ids:
            if not 0 <= edge_id < capacity:
                raise CapacityMismatchError(f"edge id {edge_id} outside capacity {capacity}")
            bits |= 1 << edge_id
        return cls(bits, capacity)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, edge_id: int) -> bool:
        return 0 <= edge_id < self.capacity and bool(self.bits >> edge_id & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        return symmetric_difference(self, other)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        _check_capacity(self, other)
        return EdgeSet(self.bits & other.bits, self.capacity)

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        _check_capacity(self, other)
        return EdgeSet(self.bits | other.bits, self.capacity)

    def __lt__(self, other: "EdgeSet") -> bool:
        return self.bits < other.bits

    def issubset(self, other: "EdgeSet") -> bool:
        _check_capacity(self, other)
        return self.bits & ~other.bits == 0

    def ids(self) -> List[int]:
        return list(iter_bits(self.bits))


def _check_capacity(a: EdgeSet, b: EdgeSet) -> None:
    if a.capacity != b.capacity:
        raise CapacityMismatchError(f"edge sets of capacity {a.capacity} and {b.capacity} cannot be combined")


def symmetric_difference(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    """GF(2) sum of two edge sets of the same graph."""
    _check_capacity(a, b)
    return EdgeSet(a.bits ^ b.bits, a.capacity)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edge ids are positions in ``edges`` and never change."""
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(repr=False)
    _index: Dict[FrozenSet[int], int] = field(repr=False, compare=False, hash=False, default_factory=dict)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._index.get(frozenset((u, v)))

    def edge_set(self, edge_ids: Iterable[int]) -> EdgeSet:
        return EdgeSet.from_ids(edge_ids, self.edge_count)

    def edge_set_from_bits(self, bits: int) -> EdgeSet:
        return EdgeSet(bits, self.edge_count)

    def empty_set(self) -> EdgeSet:
        return EdgeSet.empty(self.edge_count)

    def full_set(self) -> EdgeSet:
        return EdgeSet((1 << self.edge_count) - 1, self.edge_count)

    def path_set(self, vertices: Sequence[int], closed: bool = False) -> EdgeSet:
        """Edge set of the walk through ``vertices`` (closing it back to the start when asked)."""
        stops = list(vertices) + ([vertices[0]] if closed else [])
        ids = []
        for u, v in zip(stops, stops[1:]):
            edge_id = self.edge_id(u, v)
            if edge_id is None:
                raise VertexOutOfRangeError(f"no edge between {u} and {v}")
            ids.append(edge_id)
        return self.edge_set(ids)

    def vertices_of(self, edges: EdgeSet) -> Set[int]:
        touched = set()
        for edge_id in edges:
            touched.update(self.edges[edge_id])
        return touched

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        for edge_id, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, id=edge_id)
        return graph


def build_graph(vertex_count: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """Validate an edge list and freeze it into a Graph with edge ids in input order."""
    if vertex_count < 0:
        raise VertexOutOfRangeError(f"vertex count must be non-negative, got {vertex_count}")
    edges: List[Tuple[int, int]] = []
    index: Dict[FrozenSet[int], int] = {}
    neighbours: List[List[Tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in index:
            raise DuplicateEdgeError(f"edge ({u}, {v}) repeats edge {index[key]}")
        edge_id = len(edges)
        index[key] = edge_id
        edges.append((u, v))
        neighbours[u].append((v, edge_id))
        neighbours[v].append((u, edge_id))
    return Graph(
        vertex_count=vertex_count,
        edges=tuple(edges),
        adjacency=tuple(tuple(row) for row in neighbours),
        _index=index,
    )


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return nx.is_connected(g.to_networkx())


def is_biconnected(g: Graph) -> bool:
    """Connected, at least three vertices and no cut vertex."""
    if g.vertex_count < 3:
        return False
    return nx.is_biconnected(g.to_networkx())


def is_cycle_bits(g: Graph, bits: int) -> bool:
    if not bits:
        return False
    degree: Dict[int, int] = {}
    for edge_id in iter_bits(bits):
        for vertex in g.edges[edge_id]:
            degree[vertex] = degree.get(vertex, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    # walk the 2-regular set from its lowest edge; a single cycle returns after using every edge
    first = (bits & -bits).bit_length() - 1
    origin, current = g.edges[first]
    previous = first
    length = 1
    while current != origin:
        for neighbour, edge_id in g.adjacency[current]:
            if edge_id != previous and bits >> edge_id & 1:
                previous, current = edge_id, neighbour
                break
        length += 1
    return length == bits.bit_count()


def is_cycle(g: Graph, s: EdgeSet) -> bool:
    """True iff ``s`` is exactly one simple cycle of ``g``."""
    if s.capacity != g.edge_count:
        raise CapacityMismatchError(f"edge set of capacity {s.capacity} used with a graph of {g.edge_count} edges")
    return is_cycle_bits(g, s.bits)


def enumerate_cycle_bits(g: Graph, limit: int = DEFAULT_MAX_CYCLES) -> List[int]:
    """All simple cycles as sorted bit patterns.

    Each cycle is grown as a path from its smallest vertex through larger vertices only,
    and recorded in the single orientation whose second vertex is below its last one.
    """
    found: List[int] = []
    adjacency = g.adjacency

    def extend(start: int, second: int, vertex: int, bits: int, on_path: Set[int]) -> None:
        for neighbour, edge_id in adjacency[vertex]:
            if neighbour == start:
                if len(on_path) >= 3 and second < vertex:
                    found.append(bits | 1 << edge_id)
                    if len(found) > limit:
                        raise CycleLimitExceededError(limit)
            elif neighbour > start and neighbour not in on_path:
                on_path.add(neighbour)
                extend(start, second if second >= 0 else neighbour, neighbour, bits | 1 << edge_id, on_path)
                on_path.discard(neighbour)

    for start in range(g.vertex_count):
        extend(start, -1, start, 0, {start})
    found.sort()
    logger.debug(f"Enumerated {len(found)} cycles on {g.vertex_count} vertices / {g.edge_count} edges")
    return found


def enumerate_cycles(g: Graph, limit: int = DEFAULT_MAX_CYCLES) -> List[EdgeSet]:
    """Every simple cycle of ``g`` exactly once, in canonical order."""
    return [g.edge_set_from_bits(bits) for bits in enumerate_cycle_bits(g, limit)]


def cycle_space_rank(edge_sets: Iterable[EdgeSet]) -> int:
    """Rank over GF(2) of a collection of edge sets."""
    pivots: Dict[int, int] = {}
    for edge_set in edge_sets:
        bits = edge_set.bits
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = bits
                break
            bits ^= pivots[top]
    return len(pivots)

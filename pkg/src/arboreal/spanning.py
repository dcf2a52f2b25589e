"""Spanning-tree enumeration, Matrix-Tree counting and fundamental cycles."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple
import logging

import numpy as np

from .config import DEFAULT_MAX_TREES
from .errors import DisconnectedError, NotASpanningTreeError, TreeLimitExceededError
from .graph import EdgeSet, Graph, is_connected, iter_bits
from .unionfind import UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of a graph, held as its edge set."""
    edges: EdgeSet

    @property
    def bits(self) -> int:
        return self.edges.bits

    def __len__(self) -> int:
        return len(self.edges)

    def __lt__(self, other: "SpanningTree") -> bool:
        return self.edges.bits < other.edges.bits


def _components(g: Graph, bits: int) -> List[int]:
    """Component label of every vertex in the subgraph spanned by ``bits``."""
    uf = UnionFind(g.vertex_count)
    for edge_id in iter_bits(bits):
        uf.union(*g.edges[edge_id])
    return uf.labels()


def is_spanning_tree_bits(g: Graph, bits: int) -> bool:
    n = g.vertex_count
    if bits >> g.edge_count or bits.bit_count() != max(n - 1, 0):
        return False
    # n - 1 edges and a single component means acyclic
    labels = _components(g, bits)
    return len(set(labels)) <= 1


def is_spanning_tree(g: Graph, edges: EdgeSet) -> bool:
    return edges.capacity == g.edge_count and is_spanning_tree_bits(g, edges.bits)


def _bridges(g: Graph, mask: int) -> int:
    """Bit pattern of the bridges of the spanning subgraph with edge set ``mask`` (iterative Tarjan)."""
    n = g.vertex_count
    discovery = [-1] * n
    low = [0] * n
    clock = 0
    result = 0
    for root in range(n):
        if discovery[root] != -1:
            continue
        discovery[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            vertex, via, neighbours = stack[-1]
            descended = False
            for neighbour, edge_id in neighbours:
                if edge_id == via or not mask >> edge_id & 1:
                    continue
                if discovery[neighbour] == -1:
                    discovery[neighbour] = low[neighbour] = clock
                    clock += 1
                    stack.append((neighbour, edge_id, iter(g.adjacency[neighbour])))
                    descended = True
                    break
                if discovery[neighbour] < low[vertex]:
                    low[vertex] = discovery[neighbour]
            if descended:
                continue
            stack.pop()
            if stack:
                above = stack[-1][0]
                if low[vertex] < low[above]:
                    low[above] = low[vertex]
                if low[vertex] > discovery[above]:
                    result |= 1 << via
    return result


def enumerate_tree_bits(g: Graph, limit: int = DEFAULT_MAX_TREES) -> List[int]:
    """Every spanning tree as a bit pattern, sorted ascending.

    Contraction/deletion recursion on (forest, candidates): the forest is always acyclic,
    no candidate closes a cycle with it, and every bridge of forest + candidates is already
    in the forest, so both branches on the lowest candidate produce at least one tree.
    """
    if not is_connected(g):
        raise DisconnectedError(f"graph on {g.vertex_count} vertices is not connected")
    target = max(g.vertex_count - 1, 0)
    trees: List[int] = []

    def grow(forest: int, candidates: int) -> None:
        forced = _bridges(g, forest | candidates) & candidates
        if forced:
            forest |= forced
            candidates &= ~forced
        if forest.bit_count() == target:
            trees.append(forest)
            if len(trees) > limit:
                raise TreeLimitExceededError(limit)
            return
        low = candidates & -candidates
        rest = candidates ^ low

        # contract: keep the edge, drop candidates that would now close a cycle
        included = forest | low
        labels = _components(g, included)
        kept = 0
        for edge_id in iter_bits(rest):
            u, v = g.edges[edge_id]
            if labels[u] != labels[v]:
                kept |= 1 << edge_id
        grow(included, kept)

        # delete: the edge was not a bridge, so forest + rest stays connected
        grow(forest, rest)

    grow(0, (1 << g.edge_count) - 1)
    trees.sort()
    logger.debug(f"Enumerated {len(trees)} spanning trees on {g.vertex_count} vertices")
    return trees


def enumerate_spanning_trees(g: Graph, limit: int = DEFAULT_MAX_TREES) -> List[SpanningTree]:
    """All spanning trees of a connected graph, each once, in canonical order."""
    return [SpanningTree(g.edge_set_from_bits(bits)) for bits in enumerate_tree_bits(g, limit)]


def laplacian(g: Graph) -> np.ndarray:
    matrix = np.zeros((g.vertex_count, g.vertex_count), dtype=object)
    for u, v in g.edges:
        matrix[u, u] += 1
        matrix[v, v] += 1
        matrix[u, v] -= 1
        matrix[v, u] -= 1
    return matrix


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [[int(x) for x in row] for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            row = a[i]
            factor = row[k]
            for j in range(k + 1, size):
                row[j] = (row[j] * pivot - factor * a[k][j]) // previous
            row[k] = 0
        previous = pivot
    return sign * a[-1][-1]


def count_spanning_trees(g: Graph) -> int:
    """Kirchhoff count: determinant of the Laplacian with row and column 0 removed."""
    if not is_connected(g):
        raise DisconnectedError(f"graph on {g.vertex_count} vertices is not connected")
    if g.vertex_count <= 1:
        return 1
    minor = laplacian(g)[1:, 1:]
    return bareiss_determinant(minor.tolist())


class TreeIndex:
    """Rooted view of one spanning tree for fast tree-path queries."""

    def __init__(self, g: Graph, bits: int):
        self.graph = g
        self.bits = bits
        n = g.vertex_count
        self.parent = [-1] * n
        self.parent_edge = [-1] * n
        self.depth = [0] * n
        if n == 0:
            return
        seen = [False] * n
        seen[0] = True
        frontier = [0]
        for vertex in frontier:
            for neighbour, edge_id in g.adjacency[vertex]:
                if bits >> edge_id & 1 and not seen[neighbour]:
                    seen[neighbour] = True
                    self.parent[neighbour] = vertex
                    self.parent_edge[neighbour] = edge_id
                    self.depth[neighbour] = self.depth[vertex] + 1
                    frontier.append(neighbour)

    def path_bits(self, u: int, v: int) -> int:
        bits = 0
        depth, parent, parent_edge = self.depth, self.parent, self.parent_edge
        while depth[u] > depth[v]:
            bits |= 1 << parent_edge[u]
            u = parent[u]
        while depth[v] > depth[u]:
            bits |= 1 << parent_edge[v]
            v = parent[v]
        while u != v:
            bits |= 1 << parent_edge[u] | 1 << parent_edge[v]
            u, v = parent[u], parent[v]
        return bits

    def fundamental_cycle_bits(self) -> List[Tuple[int, int]]:
        """(non-tree edge, its fundamental cycle) for every non-tree edge in id order."""
        result = []
        for edge_id, (u, v) in enumerate(self.graph.edges):
            if not self.bits >> edge_id & 1:
                result.append((edge_id, self.path_bits(u, v) | 1 << edge_id))
        return result


def fundamental_cycles(g: Graph, t: SpanningTree) -> List[EdgeSet]:
    """The m - n + 1 fundamental cycles of ``t``, ordered by their non-tree edge."""
    if not is_spanning_tree(g, t.edges):
        raise NotASpanningTreeError(f"edge set {t.edges.ids()} is not a spanning tree")
    return [g.edge_set_from_bits(bits) for _, bits in TreeIndex(g, t.bits).fundamental_cycle_bits()]


def exchange(g: Graph, t: SpanningTree, add: int, remove: int) -> SpanningTree:
    """Swap non-tree edge ``add`` in for tree edge ``remove``; the result must still be a tree."""
    bits = t.bits
    if bits >> add & 1 or not bits >> remove & 1:
        raise NotASpanningTreeError(f"cannot exchange edge {add} for edge {remove}")
    swapped = bits ^ (1 << add) ^ (1 << remove)
    if not is_spanning_tree_bits(g, swapped):
        raise NotASpanningTreeError(f"edge {remove} is not on the fundamental cycle of edge {add}")
    return SpanningTree(g.edge_set_from_bits(swapped))

"""Disjoint sets over 0..size-1 with union by rank and path compression."""

from typing import List


class UnionFind:
    """
    Components of a graph or of the tree graph as pairs are merged in.

    Examples
    --------
    >>> uf = UnionFind(5)
    >>> uf.union(3, 4)
    >>> uf.union(1, 4)
    >>> uf.labels()
    [0, 1, 2, 1, 1]
    """

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1

    def labels(self) -> List[int]:
        """Component label per element, numbered in order of first appearance."""
        seen = {}
        result = []
        for x in range(len(self.parent)):
            result.append(seen.setdefault(self.find(x), len(seen)))
        return result

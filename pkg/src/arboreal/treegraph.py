"""Tree graphs T(G) and T(G, C), their components, and the arboreal / cyclic-spanning predicates."""

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union
import logging

from .errors import (
    Claim,
    ClaimFailedError,
    FamilyNotCyclesError,
    FamilyNotSubsetOfCyclesError,
    IncompleteTreeListError,
)
from .graph import EdgeSet, Graph, is_cycle, is_cycle_bits, iter_bits
from .spanning import SpanningTree, TreeIndex, count_spanning_trees
from .unionfind import UnionFind

logger = logging.getLogger(__name__)


class _AllCycles:
    """Sentinel family admitting every exchange: builds the unrestricted tree graph."""

    def __repr__(self) -> str:
        return "ALL"


ALL = _AllCycles()


@dataclass(frozen=True)
class CycleFamily:
    """An ordered set of distinct cycles of one graph."""
    cycles: Tuple[EdgeSet, ...]
    _positions: Dict[int, int] = field(repr=False, compare=False, hash=False, default_factory=dict)

    @classmethod
    def from_cycles(cls, g: Graph, cycles: Iterable[EdgeSet]) -> "CycleFamily":
        members = tuple(cycles)
        positions: Dict[int, int] = {}
        for position, cycle in enumerate(members):
            if cycle.capacity != g.edge_count or not is_cycle_bits(g, cycle.bits):
                raise FamilyNotCyclesError(f"family member {position} ({cycle.ids()}) is not a cycle")
            if cycle.bits in positions:
                raise FamilyNotCyclesError(f"family member {position} repeats member {positions[cycle.bits]}")
            positions[cycle.bits] = position
        return cls(members, positions)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[EdgeSet]:
        return iter(self.cycles)

    def __getitem__(self, position: int) -> EdgeSet:
        return self.cycles[position]

    def __contains__(self, cycle: EdgeSet) -> bool:
        return cycle.bits in self._positions

    def position(self, bits: int) -> Optional[int]:
        return self._positions.get(bits)


FamilyOrAll = Union[CycleFamily, _AllCycles]


@dataclass
class TreeGraphAdjacency:
    """T(G, C) over tree ids 0..T-1 (positions in the canonical tree list)."""
    trees: List[SpanningTree]
    adjacency: List[List[int]]
    component_label: List[int]

    @property
    def tree_count(self) -> int:
        return len(self.trees)

    @property
    def component_count(self) -> int:
        return len(set(self.component_label))

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, tree_id: int) -> int:
        return len(self.adjacency[tree_id])

    def is_connected(self) -> bool:
        return self.component_count <= 1


@dataclass(frozen=True)
class ComponentSummary:
    size: int
    representative: int


def _tree_positions(g: Graph, trees: Sequence[SpanningTree]) -> Dict[int, int]:
    positions = {tree.bits: i for i, tree in enumerate(trees)}
    expected = count_spanning_trees(g)
    if len(positions) != expected or len(trees) != expected:
        raise IncompleteTreeListError(f"{len(positions)} distinct trees given, the graph has {expected}")
    return positions


def build_tree_graph(g: Graph, trees: Sequence[SpanningTree], family: FamilyOrAll) -> TreeGraphAdjacency:
    """Trees i, j are adjacent when they differ by one exchange whose cycle lies in ``family``."""
    positions = _tree_positions(g, trees)
    unrestricted = family is ALL
    adjacency: List[List[int]] = [[] for _ in trees]
    uf = UnionFind(len(trees))
    for i, tree in enumerate(trees):
        index = TreeIndex(g, tree.bits)
        for edge_id, cycle_bits in index.fundamental_cycle_bits():
            if not unrestricted and family.position(cycle_bits) is None:
                continue
            entering = tree.bits | 1 << edge_id
            for removed in iter_bits(cycle_bits & tree.bits):
                j = positions.get(entering ^ 1 << removed)
                if j is None:
                    raise IncompleteTreeListError(f"exchange from tree {i} leads outside the tree list")
                adjacency[i].append(j)
                if i < j:
                    uf.union(i, j)
    for row in adjacency:
        row.sort()
    tg = TreeGraphAdjacency(list(trees), adjacency, uf.labels())
    logger.info(
        f"Tree graph ({'all cycles' if unrestricted else f'{len(family)} cycles'}): "
        f"{tg.tree_count} trees, {tg.edge_count} adjacencies, {tg.component_count} components"
    )
    return tg


def component_members(tg: TreeGraphAdjacency) -> List[List[int]]:
    """Tree ids of each component, indexed by component label."""
    members: List[List[int]] = [[] for _ in range(tg.component_count)]
    for tree_id, label in enumerate(tg.component_label):
        members[label].append(tree_id)
    return members


def components_summary(tg: TreeGraphAdjacency) -> List[ComponentSummary]:
    """(size, smallest tree id) per component, largest first."""
    summary = [ComponentSummary(len(ids), ids[0]) for ids in component_members(tg)]
    summary.sort(key=lambda c: (-c.size, c.representative))
    return summary


def min_degree(tg: TreeGraphAdjacency) -> int:
    return min((len(row) for row in tg.adjacency), default=0)


def family_fundamental_cycles(g: Graph, tree: SpanningTree, family: CycleFamily) -> List[int]:
    """Positions in ``family`` of the fundamental cycles of ``tree``."""
    found = []
    for _, cycle_bits in TreeIndex(g, tree.bits).fundamental_cycle_bits():
        position = family.position(cycle_bits)
        if position is not None:
            found.append(position)
    return sorted(found)


@dataclass(frozen=True)
class ArborealResult:
    arboreal: bool
    witness: Optional[SpanningTree] = None

    def __bool__(self) -> bool:
        return self.arboreal


def is_arboreal(g: Graph, trees: Sequence[SpanningTree], family: CycleFamily) -> ArborealResult:
    """True when every spanning tree has a fundamental cycle in ``family``; otherwise a tree without one."""
    _tree_positions(g, trees)
    for tree in trees:
        index = TreeIndex(g, tree.bits)
        if not any(family.position(bits) is not None for _, bits in index.fundamental_cycle_bits()):
            logger.debug(f"Tree {tree.edges.ids()} has no fundamental cycle in the family")
            return ArborealResult(False, tree)
    return ArborealResult(True)


@dataclass(frozen=True)
class SpanWitness:
    """``target`` written as a XOR of family members whose every prefix is a cycle."""
    target: EdgeSet
    sequence: Tuple[int, ...]

    def is_valid(self, g: Graph, family: CycleFamily) -> bool:
        prefix = g.empty_set()
        for position in self.sequence:
            prefix = prefix ^ family[position]
            if not is_cycle(g, prefix):
                return False
        return prefix == self.target


@dataclass
class SpanResult:
    spans: bool
    witnesses: Dict[int, SpanWitness]
    unreached: List[EdgeSet]

    def __bool__(self) -> bool:
        return self.spans

    def witness_for(self, cycle: EdgeSet) -> Optional[SpanWitness]:
        return self.witnesses.get(cycle.bits)


def cyclically_spans(
    g: Graph, family: CycleFamily, all_cycles: Sequence[EdgeSet], validate: bool = True
) -> SpanResult:
    """Breadth-first search of the cycles reachable from family members by XOR with a member.

    A cycle is reached when it can be written as a sequence of family members with every
    prefix a cycle; the BFS predecessor chain is that sequence, shortest possible, ties going
    to the lower family position.
    """
    cycle_bits = {c.bits for c in all_cycles}
    for position, member in enumerate(family):
        if not is_cycle(g, member):
            raise FamilyNotCyclesError(f"family member {position} is not a cycle")
        if member.bits not in cycle_bits:
            raise FamilyNotSubsetOfCyclesError(f"family member {position} ({member.ids()}) is not in the cycle list")

    previous: Dict[int, Tuple[int, int]] = {}
    queue: Deque[int] = deque()
    for position, member in enumerate(family):
        if member.bits not in previous:
            previous[member.bits] = (0, position)
            queue.append(member.bits)
    members = [member.bits for member in family]
    while queue:
        current = queue.popleft()
        for position, member in enumerate(members):
            following = current ^ member
            if following in cycle_bits and following not in previous:
                previous[following] = (current, position)
                queue.append(following)

    witnesses: Dict[int, SpanWitness] = {}
    for bits in sorted(previous):
        sequence = []
        cursor = bits
        while cursor:
            cursor, position = previous[cursor]
            sequence.append(position)
        witness = SpanWitness(g.edge_set_from_bits(bits), tuple(reversed(sequence)))
        if validate and not witness.is_valid(g, family):
            raise ClaimFailedError(Claim.WITNESS, f"spanning sequence for {witness.target.ids()} does not re-validate")
        witnesses[bits] = witness
    unreached = sorted(c for c in all_cycles if c.bits not in previous)
    logger.info(f"Cyclic spanning: {len(previous)} of {len(cycle_bits)} cycles reached")
    return SpanResult(not unreached, witnesses, unreached)

import networkx as nx
import pytest
from hypothesis import given, settings

from arboreal.errors import FamilyNotCyclesError, FamilyNotSubsetOfCyclesError, IncompleteTreeListError
from arboreal.graph import enumerate_cycles
from arboreal.spanning import enumerate_spanning_trees
from arboreal.treegraph import (
    ALL,
    CycleFamily,
    build_tree_graph,
    component_members,
    components_summary,
    cyclically_spans,
    family_fundamental_cycles,
    is_arboreal,
    min_degree,
)
from arboreal.unionfind import UnionFind

from .strategies import graphs, graphs_with_families


def test_triangle_tree_graph_is_complete(triangle):
    trees = enumerate_spanning_trees(triangle)
    for family in (ALL, CycleFamily.from_cycles(triangle, [triangle.full_set()])):
        tg = build_tree_graph(triangle, trees, family)
        assert tg.tree_count == 3
        assert tg.edge_count == 3
        assert tg.adjacency == [[1, 2], [0, 2], [0, 1]]
        assert tg.is_connected()


def test_empty_family_isolates_every_tree(triangle):
    trees = enumerate_spanning_trees(triangle)
    family = CycleFamily.from_cycles(triangle, [])
    tg = build_tree_graph(triangle, trees, family)
    assert tg.component_count == 3
    assert tg.component_label == [0, 1, 2]
    assert min_degree(tg) == 0
    result = is_arboreal(triangle, trees, family)
    assert not result
    assert result.witness == trees[0]


def test_octahedron_family_splits_the_tree_graph(octa, octa_trees, family):
    tg = build_tree_graph(octa.graph, octa_trees, family)
    summary = components_summary(tg)
    assert len(summary) >= 2
    assert sum(c.size for c in summary) == 384
    assert 3 in [c.size for c in summary]
    assert [c.size for c in summary] == sorted((c.size for c in summary), reverse=True)
    assert min_degree(tg) >= 1


def test_unrestricted_octahedron_tree_graph_is_connected(octa, octa_trees):
    tg = build_tree_graph(octa.graph, octa_trees, ALL)
    assert tg.is_connected()
    assert components_summary(tg)[0].size == 384


def test_incomplete_tree_list_rejected(octa, octa_trees, family):
    with pytest.raises(IncompleteTreeListError):
        build_tree_graph(octa.graph, octa_trees[:-1], family)
    with pytest.raises(IncompleteTreeListError):
        is_arboreal(octa.graph, octa_trees[1:], family)


@pytest.mark.parametrize("subset", [None, 0b0000011, 0b1010101])
def test_k4_adjacency_matches_definition(k4, subset):
    trees = enumerate_spanning_trees(k4)
    cycles = enumerate_cycles(k4)
    if subset is None:
        family = ALL
        allowed = {c.bits for c in cycles}
    else:
        chosen = [c for i, c in enumerate(cycles) if subset >> i & 1]
        family = CycleFamily.from_cycles(k4, chosen)
        allowed = {c.bits for c in chosen}
    tg = build_tree_graph(k4, trees, family)
    for i, a in enumerate(trees):
        for j, b in enumerate(trees):
            expected = False
            if (a.bits ^ b.bits).bit_count() == 2:
                union = a.bits | b.bits
                (cycle,) = [c.bits for c in cycles if c.bits & union == c.bits]
                expected = cycle in allowed
            assert (j in tg.adjacency[i]) == expected
            assert (j in tg.adjacency[i]) == (i in tg.adjacency[j])


def test_component_members_partition_the_trees(octa, octa_trees, family):
    tg = build_tree_graph(octa.graph, octa_trees, family)
    members = component_members(tg)
    assert sorted(i for ids in members for i in ids) == list(range(384))
    for ids in members:
        for tree_id in ids:
            assert all(tg.component_label[j] == tg.component_label[tree_id] for j in tg.adjacency[tree_id])


def test_small_component_shares_one_family_cycle(octa, octa_trees, family, binding):
    for tree_id in binding.small_component_tree_ids:
        assert family_fundamental_cycles(octa.graph, octa_trees[tree_id], family) == [binding.rho]


def test_family_validation(triangle, octa):
    with pytest.raises(FamilyNotCyclesError):
        CycleFamily.from_cycles(triangle, [triangle.edge_set([0, 1])])
    with pytest.raises(FamilyNotCyclesError):
        CycleFamily.from_cycles(triangle, [triangle.full_set(), triangle.full_set()])
    with pytest.raises(FamilyNotCyclesError):
        CycleFamily.from_cycles(triangle, [octa.faces[0]])


def test_family_lookup(octa, family, binding):
    assert len(family) == 7
    assert family.position(family[3].bits) == 3
    assert octa.faces[binding.alpha] not in family
    assert octa.faces[binding.beta] in family
    assert family.position(octa.faces[binding.alpha].bits) is None


def test_family_must_be_enumerated(octa, octa_cycles, family):
    with pytest.raises(FamilyNotSubsetOfCyclesError):
        cyclically_spans(octa.graph, family, octa_cycles[:5])


def test_faces_span_every_cycle(octa, octa_cycles, g1, g1_cycles):
    for pg, cycles in ((octa, octa_cycles), (g1, g1_cycles)):
        faces = CycleFamily.from_cycles(pg.graph, [pg.faces[f] for f in pg.internal_faces()])
        assert cyclically_spans(pg.graph, faces, cycles)


def test_spanning_witnesses(octa, octa_cycles, family, binding):
    result = cyclically_spans(octa.graph, family, octa_cycles)
    assert result
    assert not result.unreached
    assert len(result.witnesses) == 63
    for member in family:
        assert result.witness_for(member).sequence == (family.position(member.bits),)
    alpha_witness = result.witness_for(octa.faces[binding.alpha])
    assert sorted(alpha_witness.sequence) == sorted([binding.alpha, binding.beta])
    assert all(w.is_valid(octa.graph, family) for w in result.witnesses.values())


def test_dropping_alpha_loses_spanning(octa, octa_cycles, binding):
    faces = [octa.faces[f] for f in octa.internal_faces() if f != binding.alpha]
    result = cyclically_spans(octa.graph, CycleFamily.from_cycles(octa.graph, faces), octa_cycles)
    assert not result
    assert octa.faces[binding.alpha] in result.unreached
    assert result.witness_for(octa.faces[binding.alpha]) is None


def test_arboreal_family(octa, octa_trees, family):
    assert is_arboreal(octa.graph, octa_trees, family)


def test_dropping_alpha_arboreal_witness(octa, octa_trees, binding):
    g = octa.graph
    faces = [octa.faces[f] for f in octa.internal_faces() if f != binding.alpha]
    dropped = CycleFamily.from_cycles(g, faces)
    result = is_arboreal(g, octa_trees, dropped)
    missing = [t for t in octa_trees if not family_fundamental_cycles(g, t, dropped)]
    if result:
        assert missing == []
        return
    assert result.witness in octa_trees
    assert result.witness == missing[0]
    assert family_fundamental_cycles(g, result.witness, dropped) == []
    # re-derive each fundamental cycle from the tree path between the ends of a non-tree edge
    tree_ids = set(result.witness.edges.ids())
    tree = nx.Graph([g.edges[i] for i in tree_ids])
    edge_id = {frozenset(e): i for i, e in enumerate(g.edges)}
    face_bits = {face.bits for face in faces}
    for i, (u, v) in enumerate(g.edges):
        if i in tree_ids:
            continue
        path = nx.shortest_path(tree, u, v)
        bits = 1 << i
        for a, b in zip(path, path[1:]):
            bits |= 1 << edge_id[frozenset((a, b))]
        assert bits not in face_bits


def test_degree_duality_on_octahedron(octa, octa_trees, octa_cycles):
    g = octa.graph
    for mask in (0b0000001, 0b0111111, 0b1010101, 0b1111111):
        faces = [octa.faces[f] for f in octa.internal_faces() if mask >> f & 1]
        family = CycleFamily.from_cycles(g, faces)
        tg = build_tree_graph(g, octa_trees, family)
        assert bool(is_arboreal(g, octa_trees, family)) == (min_degree(tg) >= 1)


@settings(max_examples=100, deadline=None)
@given(graphs_with_families())
def test_degree_duality(case):
    g, family = case
    trees = enumerate_spanning_trees(g)
    tg = build_tree_graph(g, trees, family)
    assert bool(is_arboreal(g, trees, family)) == (min_degree(tg) >= 1)


@settings(max_examples=100, deadline=None)
@given(graphs_with_families())
def test_connected_tree_graph_implies_spanning(case):
    g, family = case
    trees = enumerate_spanning_trees(g)
    if build_tree_graph(g, trees, family).is_connected():
        assert cyclically_spans(g, family, enumerate_cycles(g))


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=5, connected=True))
def test_unrestricted_tree_graph_is_connected(g):
    assert build_tree_graph(g, enumerate_spanning_trees(g), ALL).is_connected()


def test_union_find_labels():
    uf = UnionFind(6)
    uf.union(4, 5)
    uf.union(2, 5)
    uf.union(0, 1)
    assert uf.find(2) == uf.find(4)
    assert uf.labels() == [0, 0, 1, 2, 1, 1]
    uf.union(1, 2)
    assert uf.labels() == [0] * 3 + [1] + [0] * 2

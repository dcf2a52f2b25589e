import pytest

from arboreal.counterexample import build_cycle_family, find_alpha_beta
from arboreal.graph import build_graph, enumerate_cycles
from arboreal.plane import build_plane_graph, layered_octahedron, octahedron
from arboreal.spanning import enumerate_spanning_trees


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def k4():
    return build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


@pytest.fixture
def plane_k4(k4):
    faces = [k4.path_set(t, closed=True) for t in [(0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 1, 2)]]
    return build_plane_graph(k4, faces, outer_face=3)


@pytest.fixture(scope="session")
def octa():
    return octahedron()


@pytest.fixture(scope="session")
def octa_trees(octa):
    return enumerate_spanning_trees(octa.graph)


@pytest.fixture(scope="session")
def octa_cycles(octa):
    return enumerate_cycles(octa.graph)


@pytest.fixture(scope="session")
def bindings(octa):
    return find_alpha_beta(octa)


@pytest.fixture(scope="session")
def binding(bindings):
    return bindings[0]


@pytest.fixture(scope="session")
def family(octa, binding):
    return build_cycle_family(octa, binding.alpha, binding.beta)


@pytest.fixture(scope="session")
def g1():
    return layered_octahedron(1)


@pytest.fixture(scope="session")
def g1_trees(g1):
    return enumerate_spanning_trees(g1.graph)


@pytest.fixture(scope="session")
def g1_cycles(g1):
    return enumerate_cycles(g1.graph)

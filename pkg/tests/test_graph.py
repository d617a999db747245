import pytest
from hypothesis import given, settings, strategies as st

from nonrainbow.graph import Edge, ClosedWalk, MultiGraph, SpanningTree, build_graph
from nonrainbow.errors import InvalidVertex
from nonrainbow.util import INFINITY


def test_build_graph():
    g = build_graph(2, [(1, 2), (2, 1)])
    assert g.m == 2
    assert g.edges == (Edge(1, 1, 2), Edge(2, 1, 2))
    assert g.cycle_rank == 1

    with pytest.raises(InvalidVertex):
        build_graph(2, [(1, 3)])

    with pytest.raises(ValueError):
        MultiGraph(2, [Edge(2, 1, 2)])


def test_closed_walk():
    with pytest.raises(ValueError):
        ClosedWalk((1, 2), (1,))
    walk = ClosedWalk((1, 2, 1), (1, 2))
    assert len(walk) == 2
    assert list(walk.steps()) == [(1, 2, 1), (2, 1, 2)]


def test_components():
    g = build_graph(5, [(4, 5), (1, 2)])
    assert g.components() == [[1, 2], [3], [4, 5]]
    assert g.component_count == 3
    assert not g.is_connected()
    assert g.cycle_rank == 0
    assert g.is_forest()
    assert g.distance(1, 4) == INFINITY
    assert build_graph(0, []).is_connected()


def test_distance(path3, c4):
    assert path3.distance(1, 3) == 2
    assert path3.distance(2, 2) == 0
    assert c4.distance(1, 3) == 2
    with pytest.raises(InvalidVertex):
        c4.distance(1, 5)


def test_neighbors():
    g = build_graph(3, [(1, 2), (1, 2), (2, 2), (2, 3)])
    assert g.neighbors(2) == [1, 3]
    assert g.incident(2) == [(1, 1), (2, 1), (3, 2), (4, 3)]


@pytest.mark.parametrize(
    'n,edges,rank,forest,bipartite',
    [
        (3, [(1, 2), (2, 3), (1, 3)], 1, False, False),
        (4, [(1, 2), (2, 3), (3, 4), (4, 1)], 1, False, True),
        (4, [(1, 2), (2, 3), (2, 4)], 0, True, True),
        (2, [(1, 2), (1, 2)], 1, False, True),
        (1, [(1, 1)], 1, False, False),
        (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 3, False, False),
    ]
)
def test_cycle_rank(n, edges, rank, forest, bipartite):
    g = build_graph(n, edges)
    assert g.cycle_rank == rank
    assert len(g.fundamental_cycles()) == rank
    assert g.is_forest() == forest
    assert g.is_bipartite() == bipartite


def test_fundamental_cycles(c4):
    walk, = c4.fundamental_cycles()
    assert walk.vertices == (1, 4, 3, 2, 1)
    assert walk.edges == (4, 3, 2, 1)

    loop, = build_graph(1, [(1, 1)]).fundamental_cycles()
    assert loop == ClosedWalk((1, 1), (1,))

    digon, = build_graph(2, [(1, 2), (1, 2)]).fundamental_cycles()
    assert len(digon) == 2
    assert set(digon.edges) == {1, 2}

    with pytest.raises(ValueError):
        c4.fundamental_cycles(build_graph(3, [(1, 2), (2, 3)]).spanning_tree())


def test_spanning_tree(c4):
    tree = c4.spanning_tree(order=[4, 3, 2, 1], flipped=[1])
    assert tree.tree_edges == {2, 3, 4}
    assert tree.cotree == ((1, 2, 1),)
    assert tree.path(2, 3) == ((2, 3), (2,))
    vertices, edges = tree.path(1, 3)
    assert vertices == (1, 4, 3)
    assert edges == (4, 3)

    with pytest.raises(ValueError):
        SpanningTree(c4, [1, 2, 3, 4])
    with pytest.raises(ValueError):
        SpanningTree(c4, [1, 2])
    with pytest.raises(ValueError):
        SpanningTree(c4, [1, 2, 3], orientations={4: (2, 3)})
    with pytest.raises(ValueError):
        SpanningTree(build_graph(1, [(1, 1)]), [1])


def test_identify_vertices_path(path3):
    merged, identification = path3.identify_vertices(1, 3)
    assert merged.n == 2
    assert merged.edge_pairs() == [(1, 2), (1, 2)]
    assert merged.cycle_rank == 1
    assert identification.contracted is None
    assert identification.vertex_map == {1: 1, 2: 2, 3: 1}
    assert identification.edge_map == {1: 1, 2: 2}


def test_identify_vertices_adjacent(triangle):
    merged, identification = triangle.identify_vertices(2, 1)
    assert identification.contracted == 1
    assert merged.edge_pairs() == [(1, 2), (1, 2)]
    assert merged.cycle_rank == triangle.cycle_rank
    assert identification.edge_map == {1: 2, 2: 3}

    single, _ = build_graph(2, [(1, 2)]).identify_vertices(1, 2)
    assert (single.n, single.m) == (1, 0)

    with pytest.raises(InvalidVertex):
        triangle.identify_vertices(1, 1)


def test_identify_vertices_keeps_loops():
    g = build_graph(2, [(1, 2), (1, 2), (1, 2)])
    merged, identification = g.identify_vertices(1, 2)
    assert merged.edge_pairs() == [(1, 1), (1, 1)]
    assert merged.cycle_rank == g.cycle_rank == 2


def test_simplification():
    g = build_graph(3, [(1, 2), (2, 1), (3, 3), (2, 3)])
    assert g.simplification().edge_pairs() == [(1, 2), (2, 3)]


@pytest.mark.parametrize(
    'n,edges,count',
    [
        (3, [(1, 2), (2, 3), (1, 3)], 1),
        (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 7),
        (2, [(1, 2), (1, 2), (1, 1)], 2),
        (4, [(1, 2), (2, 3)], 0),
        (5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)], 13),
    ]
)
def test_simple_cycles(n, edges, count):
    cycles = list(build_graph(n, edges).simple_cycles())
    assert len(cycles) == count
    assert len(set(cycles)) == count
    for walk in cycles:
        assert len(set(walk.vertices[:-1])) == len(walk)


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    vertex = st.integers(min_value=1, max_value=n)
    return build_graph(n, draw(st.lists(st.tuples(vertex, vertex), max_size=10)))


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_fundamental_cycles_any_tree(g, data):
    order = data.draw(st.permutations(range(1, g.m + 1)))
    flipped = data.draw(st.lists(st.integers(min_value=1, max_value=g.m))) if g.m else []
    tree = g.spanning_tree(order=order, flipped=flipped)
    assert len(tree.cotree) == g.cycle_rank
    cotree = {eid for eid, _, _ in tree.cotree}
    for walk in g.fundamental_cycles(tree):
        assert len(cotree.intersection(walk.edges)) == 1
        assert walk.vertices[0] == walk.vertices[-1]


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph_invariants(g):
    components = g.components()
    assert sorted(v for c in components for v in c) == list(g.vertices())
    assert g.is_forest() == (g.cycle_rank == 0)
    if g.is_bipartite():
        assert not any(e.is_loop for e in g.edges)
    for c in components:
        assert all(g.distance(c[0], v) < INFINITY for v in c)
    if len(components) > 1:
        assert g.distance(components[0][0], components[1][0]) == INFINITY

import pytest

from nonrainbow.coloring import (
    Coloring, make_coloring, rainbow_faces, is_non_rainbow, quotient_graph,
    bichromatic_face_count,
)
from nonrainbow.graph import build_graph
from nonrainbow.generators import catalog
from nonrainbow.errors import InvalidColoring


def test_Coloring():
    f = Coloring([1, 1, 2])
    assert f.k == 2
    assert f.n == 3
    assert f[3] == 2
    assert f.classes() == [[1, 2], [3]]
    assert f.as_string() == '1,1,2'
    assert f == Coloring((1, 1, 2))

    with pytest.raises(InvalidColoring):
        Coloring([1, 3])
    with pytest.raises(InvalidColoring):
        Coloring([0, 1])


def test_make_coloring(triangle):
    assert make_coloring(triangle, [7, 7, 3]).colors == (2, 2, 1)
    assert make_coloring(triangle, {1: 1, 2: 1, 3: 2}).colors == (1, 1, 2)
    assert make_coloring(triangle, [2, 1, 3]).colors == (2, 1, 3)

    with pytest.raises(InvalidColoring):
        make_coloring(triangle, {1: 1, 2: 1})
    with pytest.raises(InvalidColoring):
        make_coloring(triangle, {1: 1, 2: 1, 3: 1, 4: 1})
    with pytest.raises(InvalidColoring):
        make_coloring(triangle, [1, 1])


def test_check(triangle):
    with pytest.raises(InvalidColoring):
        Coloring([1, 2]).check(triangle)


def test_rainbow_faces(k4):
    assert is_non_rainbow(k4, Coloring([1, 1, 1, 2]))
    assert rainbow_faces(k4, Coloring([1, 2, 3, 3])) == [(1, 2, 3), (1, 2, 4)]
    assert not is_non_rainbow(k4, Coloring([1, 2, 3, 3]))
    assert len(rainbow_faces(k4, Coloring([1, 2, 3, 4]))) == 4


def test_quotient_graph(k4, bipyramid3, c4):
    q = quotient_graph(k4.skeleton, Coloring([1, 1, 1, 2]))
    assert q.edge_pairs() == [(1, 2)]
    assert q.is_forest()

    q = quotient_graph(bipyramid3.skeleton, Coloring([1, 1, 1, 2, 3]))
    assert q.edge_pairs() == [(1, 2), (1, 3)]
    assert q.is_forest()

    q = quotient_graph(c4, Coloring([1, 2, 3, 2]))
    assert q.edge_pairs() == [(1, 2), (2, 3)]

    assert quotient_graph(c4, Coloring([1, 1, 1, 1])).m == 0


def test_bichromatic_face_count(k4):
    f = Coloring([1, 1, 1, 2])
    assert bichromatic_face_count(k4, f, 1, 2) == 3
    assert bichromatic_face_count(k4, f, 2, 1) == 3
    assert bichromatic_face_count(k4, Coloring([1, 2, 3, 3]), 1, 2) == 0
    assert bichromatic_face_count(k4, Coloring([1, 2, 3, 3]), 1, 3) == 1

    with pytest.raises(InvalidColoring):
        bichromatic_face_count(k4, f, 1, 1)


def test_pushforward(path3, triangle):
    f = Coloring([1, 2, 1])
    _, identification = path3.identify_vertices(1, 3)
    assert f.pushforward(identification) == Coloring([1, 2])

    _, identification = triangle.identify_vertices(2, 3)
    assert Coloring([1, 2, 2]).pushforward(identification) == Coloring([1, 2])
    with pytest.raises(InvalidColoring):
        Coloring([1, 1, 2]).pushforward(identification)


@pytest.mark.parametrize(
    'g',
    [t.skeleton for _, t in catalog(7)] + [build_graph(3, [(1, 2), (2, 1), (3, 3), (2, 3)])])
def test_quotient_of_injective_coloring(g):
    assert quotient_graph(g, Coloring(range(1, g.n + 1))) == g.simplification()

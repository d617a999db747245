"""
Vertex colorings, rainbow faces and quotient graphs.
"""
from collections.abc import Mapping

from nonrainbow.graph import build_graph
from nonrainbow.errors import InvalidColoring

__all__ = [
    'Coloring', 'make_coloring', 'rainbow_faces', 'is_non_rainbow', 'quotient_graph',
    'bichromatic_face_count']


class Coloring(object):
    """
    A surjective map from the vertices 1..n onto the colors 1..k.

    Parameters
    ----------
    colors : sequence of int
        The color of vertex v at position v - 1. Colors must be exactly 1..k; use
        `make_coloring` to relabel arbitrary color values.
    """
    def __init__(self, colors):
        self.colors = tuple(colors)
        self.k = max(self.colors) if self.colors else 0
        if set(self.colors) != set(range(1, self.k + 1)):
            raise InvalidColoring('colors {0} are not exactly 1..k'.format(self.colors))

    def __repr__(self):
        return '<Coloring k={0} {1}>'.format(self.k, self.as_string())

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __getitem__(self, vertex):
        return self.colors[vertex - 1]

    @property
    def n(self):
        return len(self.colors)

    def classes(self):
        res = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors, start=1):
            res[c - 1].append(v)
        return res

    def as_string(self):
        return ','.join(str(c) for c in self.colors)

    def check(self, graph):
        if graph.n != self.n:
            raise InvalidColoring(
                'coloring of {0} vertices applied to a graph with {1}'.format(self.n, graph.n))
        return self

    def pushforward(self, identification):
        """
        The coloring f' of the graph obtained by identifying two vertices of equal color.
        """
        u, v = identification.u, identification.v
        if self[u] != self[v]:
            raise InvalidColoring('vertices {0} and {1} have different colors'.format(u, v))
        colors = [None] * len(set(identification.vertex_map.values()))
        for old, new in identification.vertex_map.items():
            colors[new - 1] = self[old]
        return Coloring(colors)


def make_coloring(g, assignment):
    """
    Create a coloring of `g` from arbitrary (sortable) color values, relabeling the
    distinct values to 1..k in increasing order. Colorings already using 1..k are kept.

    Parameters
    ----------
    g : MultiGraph or Triangulation
    assignment : mapping vertex -> color value, or sequence in vertex order.
    """
    if isinstance(assignment, Mapping):
        missing = [v for v in range(1, g.n + 1) if v not in assignment]
        if missing:
            raise InvalidColoring('no color for vertices {0}'.format(missing))
        if len(assignment) != g.n:
            raise InvalidColoring('colors for vertices outside 1..{0}'.format(g.n))
        values = [assignment[v] for v in range(1, g.n + 1)]
    else:
        values = list(assignment)
        if len(values) != g.n:
            raise InvalidColoring('{0} colors for {1} vertices'.format(len(values), g.n))
    labels = {value: i for i, value in enumerate(sorted(set(values)), start=1)}
    return Coloring(labels[value] for value in values)


def rainbow_faces(t, f):
    f.check(t)
    return [face for face in t.faces if len({f[v] for v in face}) == 3]


def is_non_rainbow(t, f):
    return not rainbow_faces(t, f)


def quotient_graph(g, f):
    """
    The simple graph G/f on the color classes 1..k.
    """
    f.check(g)
    pairs = {tuple(sorted((f[e.u], f[e.v]))) for e in g.edges if f[e.u] != f[e.v]}
    return build_graph(f.k, sorted(pairs))


def bichromatic_face_count(t, f, i, j):
    """
    Number of faces whose vertices use both colors i and j and no other color.
    """
    if i == j:
        raise InvalidColoring('colors must differ')
    f.check(t)
    return sum(1 for face in t.faces if {f[v] for v in face} == {i, j})

"""
First homology of graphs and the homomorphisms induced by vertex maps.

H_1 of a graph is free abelian with one basis element per cotree edge of a spanning tree.
A closed walk represents the vector of signed traversal counts of the oriented cotree
edges, so a vertex map (a coloring G -> K_k, or the identification G -> G') induces an
integer matrix with one row per fundamental cycle of the domain and one column per cotree
edge of the codomain. Edges whose endpoints have the same image collapse to a point and
contribute nothing.
"""
import itertools
from collections import namedtuple, Counter

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from nonrainbow.graph import build_graph
from nonrainbow.errors import InvalidColoring

__all__ = [
    'EdgeImage', 'ColorGraph', 'InducedMatrix', 'induced_matrix', 'coloring_induced_matrix',
    'is_null_coloring', 'cycle_image_is_null', 'smith_normal_form', 'is_epimorphism',
    'identification_matrix', 'ij_edge_count_on_walk']


class EdgeImage(namedtuple('EdgeImage', 'edge source target')):
    """
    Image of a domain edge traversed from its lower to its higher endpoint: the codomain
    edge `edge` traversed from `source` to `target`, or - if `edge` is None - the single
    codomain vertex `source == target`.
    """
    __slots__ = ()

    @classmethod
    def collapsed(cls, vertex):
        return cls(None, vertex, vertex)


class ColorGraph(object):
    """
    The complete graph K_k on the colors 1..k with a spanning tree of it.

    By default the tree is the star at color 1; `order` and `flipped` are passed to
    `SpanningTree.from_order` to pick another tree or cotree orientation.
    """
    def __init__(self, k, order=None, flipped=()):
        if k < 1:
            raise InvalidColoring('at least one color is required')
        self.k = k
        self.graph = build_graph(k, itertools.combinations(range(1, k + 1), 2))
        self.tree = self.graph.spanning_tree(order=order, flipped=flipped)
        self._edge_ids = {(e.u, e.v): e.id for e in self.graph.edges}

    def edge_id(self, i, j):
        return self._edge_ids[tuple(sorted((i, j)))]

    def edge_image(self, i, j):
        if i == j:
            return EdgeImage.collapsed(i)
        return EdgeImage(self.edge_id(i, j), i, j)


class InducedMatrix(object):
    """
    Integer matrix of an induced map f_*: H_1(domain) -> H_1(codomain).

    Row i holds the codomain coordinates of the image of the i-th fundamental cycle of the
    domain, so the matrix of a composition g o f is `matrix(f) @ matrix(g)`. Entries are
    stored as a `DomainMatrix` over ZZ.
    """
    def __init__(self, rows, ncols):
        rows = [[ZZ(x) for x in row] for row in rows]
        if any(len(row) != ncols for row in rows):
            raise ValueError('rows must have {0} entries'.format(ncols))
        self.matrix = DomainMatrix(rows, (len(rows), ncols), ZZ)

    @classmethod
    def from_domain_matrix(cls, matrix):
        res = cls.__new__(cls)
        res.matrix = matrix
        return res

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def rows(self):
        return tuple(tuple(int(x) for x in row) for row in self.matrix.to_list())

    def __repr__(self):
        return '<InducedMatrix {0}x{1} {2}>'.format(self.shape[0], self.shape[1], self.rows)

    def __eq__(self, other):
        return isinstance(other, InducedMatrix) \
            and (self.shape, self.rows) == (other.shape, other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise ValueError('shapes {0} and {1} do not compose'.format(self.shape, other.shape))
        if 0 in self.shape or 0 in other.shape:
            return InducedMatrix.from_domain_matrix(
                DomainMatrix.zeros((self.shape[0], other.shape[1]), ZZ))
        return InducedMatrix.from_domain_matrix(self.matrix.matmul(other.matrix))

    def is_zero(self):
        return 0 in self.shape or self.matrix.is_zero_matrix


def induced_matrix(domain, dtree, codomain, ctree, vmap, emap):
    """
    Matrix of the homomorphism induced by a cellular map between two graphs.

    Parameters
    ----------
    domain, codomain : MultiGraph
    dtree, ctree : SpanningTree of domain and codomain, fixing the bases of H_1.
    vmap : mapping domain vertex -> codomain vertex.
    emap : mapping domain edge id -> EdgeImage.
    """
    for e in domain.edges:
        image = emap[e.id]
        if (vmap[e.u], vmap[e.v]) != (image.source, image.target):
            raise ValueError('image of edge {0} does not match the vertex map'.format(e.id))
        if image.edge is None:
            if image.source != image.target:
                raise ValueError('edge {0} collapses onto two vertices'.format(e.id))
        else:
            target = codomain.edge(image.edge)
            if tuple(sorted((image.source, image.target))) != (target.u, target.v):
                raise ValueError('edge {0} is not mapped onto the endpoints of edge {1}'.format(
                    e.id, image.edge))

    columns = {eid: (j, tail, head) for j, (eid, tail, head) in enumerate(ctree.cotree)}
    rows = []
    for walk in domain.fundamental_cycles(dtree):
        row = [0] * len(columns)
        for tail, head, eid in walk.steps():
            image = emap[eid]
            if image.edge not in columns:
                continue
            e = domain.edge(eid)
            forward = (tail, head) == (e.u, e.v)
            j, ctail, chead = columns[image.edge]
            if ctail == chead:
                row[j] += 1 if forward else -1
            else:
                start = image.source if forward else image.target
                row[j] += 1 if start == ctail else -1
        rows.append(row)
    return InducedMatrix(rows, len(columns))


def coloring_induced_matrix(g, f, tree=None, color_graph=None):
    """
    Matrix of f_*: H_1(G) -> H_1(K_k) for a coloring f regarded as a map G -> K_k.
    """
    f.check(g)
    color_graph = color_graph or ColorGraph(f.k)
    emap = {e.id: color_graph.edge_image(f[e.u], f[e.v]) for e in g.edges}
    return induced_matrix(
        g,
        tree or g.spanning_tree(),
        color_graph.graph,
        color_graph.tree,
        {v: f[v] for v in g.vertices()},
        emap)


def is_null_coloring(g, f):
    return coloring_induced_matrix(g, f).is_zero()


def cycle_image_is_null(g, colors, walk):
    """
    Whether the image of a closed walk under a coloring is null-homologous in K_k, i.e.
    every edge of K_k is traversed as often in one direction as in the other.

    `colors` maps vertices to colors (a Coloring or a partial assignment covering the walk).
    """
    net = Counter()
    for tail, head, _ in walk.steps():
        a, b = colors[tail], colors[head]
        if a < b:
            net[a, b] += 1
        elif b < a:
            net[b, a] -= 1
    return not any(net.values())


def smith_normal_form(matrix):
    """
    Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix, r being its rank.

    Parameters
    ----------
    matrix : InducedMatrix or sequence of integer rows.
    """
    if not isinstance(matrix, InducedMatrix):
        rows = [list(r) for r in matrix]
        matrix = InducedMatrix(rows, len(rows[0]) if rows else 0)
    if 0 in matrix.shape:
        return ()
    return tuple(abs(int(d)) for d in invariant_factors(matrix.matrix) if d != 0)


def is_epimorphism(matrix, codomain_rank):
    """
    Whether the matrix describes a surjection onto a free abelian group of the given rank.
    """
    divisors = smith_normal_form(matrix)
    return len(divisors) == codomain_rank and all(d == 1 for d in divisors)


def identification_matrix(g, u, v):
    """
    Matrix of h_*: H_1(G) -> H_1(G') for the identification h of u and v.

    Returns
    -------
    (InducedMatrix, rank of H_1(G'))
    """
    merged, identification = g.identify_vertices(u, v)
    vmap = identification.vertex_map
    preimage = {old: new for new, old in identification.edge_map.items()}
    emap = {}
    for e in g.edges:
        if e.id == identification.contracted:
            emap[e.id] = EdgeImage.collapsed(vmap[e.u])
        else:
            emap[e.id] = EdgeImage(preimage[e.id], vmap[e.u], vmap[e.v])
    matrix = induced_matrix(
        g, g.spanning_tree(), merged, merged.spanning_tree(), vmap, emap)
    return matrix, merged.cycle_rank


def ij_edge_count_on_walk(g, f, walk, i, j):
    """
    Number of steps of the walk along (ij)-edges, i.e. edges with endpoint colors i and j.
    """
    if i == j:
        raise InvalidColoring('colors must differ')
    f.check(g)
    return sum(
        1 for _, _, eid in walk.steps()
        if {f[g.edge(eid).u], f[g.edge(eid).v]} == {i, j})

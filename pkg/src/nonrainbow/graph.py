"""
Multigraphs, spanning trees and fundamental cycles.

Graphs are regarded as topological spaces: parallel edges and loops are kept, because
identifying vertices of a simple graph creates them and they carry first homology.
A spanning tree together with an orientation of the remaining (cotree) edges fixes a
basis of H_1, one fundamental cycle per cotree edge.
"""
import logging
from collections import namedtuple

import networkx as nx

from nonrainbow.errors import InvalidVertex
from nonrainbow.util import INFINITY

__all__ = [
    'Edge', 'ClosedWalk', 'MultiGraph', 'SpanningTree', 'Identification', 'build_graph']

log = logging.getLogger(__name__)


class Edge(namedtuple('Edge', 'id u v')):
    """
    An edge with a stable id. Endpoints are stored sorted, i.e. `u <= v`.
    """
    __slots__ = ()

    @property
    def is_loop(self):
        return self.u == self.v

    def other(self, vertex):
        return self.v if vertex == self.u else self.u


class ClosedWalk(object):
    """
    A closed walk v_0, v_1, ..., v_l = v_0 recording the edge used at each step.
    """
    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        if not self.edges \
                or len(self.vertices) != len(self.edges) + 1 \
                or self.vertices[0] != self.vertices[-1]:
            raise ValueError('not a closed walk: {0}'.format(self.vertices))

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, ClosedWalk) \
            and (self.vertices, self.edges) == (other.vertices, other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return '<ClosedWalk {0}>'.format('-'.join(str(v) for v in self.vertices))

    def steps(self):
        """
        Yield `(tail, head, edge_id)` for each step of the walk.
        """
        for i, eid in enumerate(self.edges):
            yield self.vertices[i], self.vertices[i + 1], eid


#: Result of `MultiGraph.identify_vertices`: `vertex_map` sends every old vertex to its
#: new id, `edge_map` sends every new edge id to the id of its pre-image and `contracted`
#: is the id of the contracted u-v edge (or None).
Identification = namedtuple('Identification', 'u v vertex_map edge_map contracted')


class MultiGraph(object):
    """
    A graph on the vertices 1..n with edges identified by the dense ids 1..m.

    The edges are held in a `networkx.MultiGraph` keyed by edge id.
    """
    def __init__(self, n, edges):
        self.n = n
        self.edges = tuple(edges)
        self._nx = nx.MultiGraph()
        self._nx.add_nodes_from(self.vertices())
        for i, edge in enumerate(self.edges, start=1):
            if edge.id != i:
                raise ValueError('edge ids must be dense, got {0} at {1}'.format(edge.id, i))
            for vertex in (edge.u, edge.v):
                self.check_vertex(vertex)
            self._nx.add_edge(edge.u, edge.v, key=edge.id)
        self._incidence = {
            v: sorted((eid, w) for _, w, eid in self._nx.edges(v, keys=True))
            for v in self.vertices()}

    def __repr__(self):
        return '<MultiGraph n={0} m={1}>'.format(self.n, self.m)

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(1, self.n + 1)

    def edge(self, eid):
        return self.edges[eid - 1]

    def edge_pairs(self):
        return [(e.u, e.v) for e in self.edges]

    def check_vertex(self, vertex):
        if not (isinstance(vertex, int) and 1 <= vertex <= self.n):
            raise InvalidVertex('vertex {0} not in 1..{1}'.format(vertex, self.n))
        return vertex

    def incident(self, vertex):
        """
        List of `(edge_id, other_endpoint)` pairs in edge id order; loops appear once.
        """
        return self._incidence[self.check_vertex(vertex)]

    def neighbors(self, vertex):
        return sorted(w for w in self._nx[self.check_vertex(vertex)] if w != vertex)

    def components(self):
        """
        The vertex sets of the connected components, ordered by their smallest vertex.
        """
        return sorted(sorted(c) for c in nx.connected_components(self._nx))

    @property
    def component_count(self):
        return nx.number_connected_components(self._nx)

    def is_connected(self):
        return self.component_count <= 1

    @property
    def cycle_rank(self):
        """
        The rank m - n + c of H_1.
        """
        return self.m - self.n + self.component_count

    def distance(self, u, v):
        """
        Length of a shortest u-v path, `INFINITY` if u and v lie in different components.
        """
        try:
            return nx.shortest_path_length(self._nx, self.check_vertex(u), self.check_vertex(v))
        except nx.NetworkXNoPath:
            return INFINITY

    def spanning_tree(self, order=None, flipped=()):
        return SpanningTree.from_order(self, order=order, flipped=flipped)

    def fundamental_cycles(self, tree=None):
        """
        One closed walk per cotree edge: the cotree edge in its chosen orientation followed
        by the tree path back to its tail.
        """
        tree = tree or self.spanning_tree()
        if tree.graph is not self and tree.graph != self:
            raise ValueError('spanning tree belongs to another graph')
        res = []
        for eid, tail, head in tree.cotree:
            if tail == head:
                res.append(ClosedWalk((tail, tail), (eid,)))
            else:
                vertices, edges = tree.path(head, tail)
                res.append(ClosedWalk((tail,) + vertices, (eid,) + edges))
        return res

    def is_forest(self):
        return self.n == 0 or nx.is_forest(self._nx)

    def is_bipartite(self):
        return nx.is_bipartite(self._nx)

    def identify_vertices(self, u, v):
        """
        Identify u and v into a single vertex.

        The merged vertex gets id min(u, v); vertices above max(u, v) shift down by one.
        If u and v are adjacent, the u-v edge with the lowest id is contracted; all other
        edges survive, including the parallel edges and loops that arise.

        Returns
        -------
        (MultiGraph, Identification)
        """
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise InvalidVertex('cannot identify vertex {0} with itself'.format(u))
        keep, drop = sorted((u, v))

        def image(x):
            if x == drop:
                return keep
            return x - 1 if x > drop else x

        contracted = next((e.id for e in self.edges if (e.u, e.v) == (keep, drop)), None)
        edges, edge_map = [], {}
        for e in self.edges:
            if e.id == contracted:
                continue
            a, b = sorted((image(e.u), image(e.v)))
            edges.append(Edge(len(edges) + 1, a, b))
            edge_map[len(edges)] = e.id
        log.debug('identified {0} and {1}, contracted edge {2}'.format(u, v, contracted))
        return (
            MultiGraph(self.n - 1, edges),
            Identification(u, v, {x: image(x) for x in self.vertices()}, edge_map, contracted))

    def simplification(self):
        """
        The simple graph with one edge for each pair of adjacent distinct vertices.
        """
        pairs = sorted({(e.u, e.v) for e in self.edges if not e.is_loop})
        return MultiGraph(self.n, [Edge(i, a, b) for i, (a, b) in enumerate(pairs, start=1)])

    def simple_cycles(self):
        """
        Generate every simple cycle exactly once (loops and digons included). Each cycle
        starts at its smallest vertex; exponential, meant for small graphs.
        """
        for e in self.edges:
            if e.is_loop:
                yield ClosedWalk((e.u, e.u), (e.id,))

        def extend(start, path, used, visited):
            x = path[-1]
            for eid, y in self._incidence[x]:
                if y == x or eid in used:
                    continue
                if y == start:
                    if used[0] < eid:
                        yield ClosedWalk(path + [start], used + [eid])
                elif y > start and y not in visited:
                    visited.add(y)
                    for walk in extend(start, path + [y], used + [eid], visited):
                        yield walk
                    visited.discard(y)

        for start in self.vertices():
            for eid, y in self._incidence[start]:
                if y > start:
                    for walk in extend(start, [start, y], [eid], {start, y}):
                        yield walk


class SpanningTree(object):
    """
    A spanning forest of a graph (one tree per component) with oriented cotree edges.

    Parameters
    ----------
    graph : MultiGraph
    tree_edges : iterable of edge ids
    orientations : dict mapping cotree edge ids to `(tail, head)` pairs. Unlisted cotree
        edges are oriented from the lower to the higher endpoint.
    """
    def __init__(self, graph, tree_edges, orientations=None):
        self.graph = graph
        self.tree_edges = frozenset(tree_edges)
        orientations = orientations or {}

        forest = nx.MultiGraph()
        forest.add_nodes_from(graph.vertices())
        for eid in sorted(self.tree_edges):
            e = graph.edge(eid)
            if e.is_loop:
                raise ValueError('loop {0} cannot be a tree edge'.format(eid))
            forest.add_edge(e.u, e.v, key=eid)
        if graph.n and not nx.is_forest(forest):
            raise ValueError('tree edges contain a cycle')
        if nx.number_connected_components(forest) != graph.component_count:
            raise ValueError('tree edges do not span every component')

        # Root each tree at the smallest vertex of its component.
        self._parent, self._depth = {}, {}
        for component in nx.connected_components(forest):
            root = min(component)
            self._parent[root], self._depth[root] = None, 0
            for x, y in nx.bfs_edges(forest, root):
                eid, = forest[x][y]
                self._parent[y], self._depth[y] = (x, eid), self._depth[x] + 1

        cotree = []
        for e in graph.edges:
            if e.id in self.tree_edges:
                continue
            tail, head = orientations.get(e.id, (e.u, e.v))
            if {tail, head} != {e.u, e.v}:
                raise ValueError('invalid orientation for edge {0}'.format(e.id))
            cotree.append((e.id, tail, head))
        self.cotree = tuple(cotree)

    @classmethod
    def from_order(cls, graph, order=None, flipped=()):
        """
        Kruskal's algorithm: scan edges in `order` (default: by id) and keep every edge
        joining two different trees. Cotree edges listed in `flipped` are oriented from
        the higher to the lower endpoint.
        """
        weighted = nx.MultiGraph()
        weighted.add_nodes_from(graph.vertices())
        for rank, eid in enumerate(order if order is not None else range(1, graph.m + 1)):
            e = graph.edge(eid)
            weighted.add_edge(e.u, e.v, key=eid, rank=rank)
        tree = [
            eid for _, _, eid in nx.minimum_spanning_edges(
                weighted, algorithm='kruskal', weight='rank', keys=True, data=False)]
        orientations = {
            eid: (graph.edge(eid).v, graph.edge(eid).u) for eid in flipped if eid not in tree}
        return cls(graph, tree, orientations=orientations)

    def __repr__(self):
        return '<SpanningTree tree={0} cotree={1}>'.format(
            sorted(self.tree_edges), [eid for eid, _, _ in self.cotree])

    def path(self, u, v):
        """
        The unique tree path from u to v as `(vertices, edges)`.
        """
        left_v, left_e, right_v, right_e = [u], [], [v], []
        a, b = u, v
        while a != b:
            if self._depth[a] >= self._depth[b] and self._parent[a] is not None:
                a, eid = self._parent[a]
                left_v.append(a)
                left_e.append(eid)
            elif self._parent[b] is not None:
                b, eid = self._parent[b]
                right_v.append(b)
                right_e.append(eid)
            else:
                raise ValueError('{0} and {1} lie in different trees'.format(u, v))
        return tuple(left_v + right_v[-2::-1]), tuple(left_e + right_e[::-1])


def build_graph(n, edge_list):
    """
    Create a MultiGraph on vertices 1..n with edge ids assigned in input order.
    """
    if n < 0:
        raise InvalidVertex('vertex count must be non-negative')
    edges = []
    for i, (a, b) in enumerate(edge_list, start=1):
        for x in (a, b):
            if not (isinstance(x, int) and 1 <= x <= n):
                raise InvalidVertex('endpoint {0} of edge {1} not in 1..{2}'.format(x, i, n))
        edges.append(Edge(i, min(a, b), max(a, b)))
    return MultiGraph(n, edges)

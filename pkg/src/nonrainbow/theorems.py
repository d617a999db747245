"""
Exhaustive checks of the structure theory of null and non-rainbow colorings on small
graphs and catalog triangulations.

Every check records the instances it looked at and the ones violating the statement, so
an empty list of counterexamples confirms the statement on the instances swept.
"""
import logging
import itertools
from collections import OrderedDict

from nonrainbow.graph import build_graph
from nonrainbow.coloring import is_non_rainbow, quotient_graph, bichromatic_face_count
from nonrainbow.homology import (
    is_null_coloring, identification_matrix, is_epimorphism, ij_edge_count_on_walk,
)
from nonrainbow.search import all_colorings, max_null, is_maximal_null, verify_bound
from nonrainbow.generators import catalog

__all__ = [
    'Check', 'connected_graphs', 'null_colorings', 'maximal_null_colorings', 'check_graph',
    'check_triangulation', 'quotient_forest_counterexamples', 'bipartite_counterexamples',
    'parity_counterexamples', 'epimorphism_counterexamples', 'null_transfer_counterexamples',
    'maximality_counterexamples',
    'equivalence_counterexamples', 'counting_counterexamples', 'maxima_counterexamples',
    'bound_counterexamples',
    'run_sweeps']

log = logging.getLogger(__name__)

GRAPH_CHECKS = [
    'quotient-forest', 'bipartite', 'parity', 'epimorphism', 'null-transfer', 'maximality']
TRIANGULATION_CHECKS = ['equivalence', 'counting', 'maxima', 'bound']


class Check(object):
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.counterexamples = []

    def __repr__(self):
        return '<Check {0}: {1}/{2}>'.format(self.name, len(self.counterexamples), self.checked)

    def __call__(self, holds, instance):
        self.checked += 1
        if not holds:
            log.warning('{0} fails for {1}'.format(self.name, instance))
            self.counterexamples.append(instance)

    def as_row(self):
        return [self.name, self.checked, len(self.counterexamples)]


def _checks(names):
    return OrderedDict((name, Check(name)) for name in names)


def connected_graphs(n):
    """
    Generate every connected labeled simple graph on the vertices 1..n.
    """
    vertex_pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(vertex_pairs)):
        g = build_graph(n, [p for i, p in enumerate(vertex_pairs) if mask >> i & 1])
        if g.is_connected():
            yield g


def null_colorings(g, k=None):
    return [f for f in all_colorings(g.n, k) if is_null_coloring(g, f)]


def maximal_null_colorings(g, budget=None):
    return null_colorings(g, max_null(g, budget=budget)[0])


def _parity_holds(g, f, walk):
    pairs = {tuple(sorted((f[g.edge(eid).u], f[g.edge(eid).v]))) for _, _, eid in walk.steps()}
    return all(
        ij_edge_count_on_walk(g, f, walk, i, j) % 2 == 0 for i, j in pairs if i != j)


def check_graph(g, checks, budget=None):
    """
    Run the checks named in `checks` on every maximal null coloring f of g:

    - quotient-forest: G/f is a forest,
    - bipartite: without monochromatic edges, G is bipartite,
    - parity: every simple cycle has an even number of (ij)-edges for all colors i != j,
    - epimorphism: identifying adjacent same-colored vertices induces a surjection on H_1,
    - null-transfer: identifying same-colored vertices at distance <= 2 yields a null
      coloring of the identified graph,
    - maximality: that coloring is again maximal null.

    At distance 2 the identification is in general not surjective on H_1 (the ends of a
    path u-w-v, opposite corners of a 4-cycle), so only adjacent pairs are checked for it.
    """
    if not set(GRAPH_CHECKS).intersection(checks):
        return
    cycles = list(g.simple_cycles()) if 'parity' in checks else []
    identifications = {'epimorphism', 'null-transfer', 'maximality'}.intersection(checks)
    for f in maximal_null_colorings(g, budget=budget):
        if 'quotient-forest' in checks:
            checks['quotient-forest'](quotient_graph(g, f).is_forest(), (g, f))
        if 'bipartite' in checks and all(f[e.u] != f[e.v] for e in g.edges):
            checks['bipartite'](g.is_bipartite(), (g, f))
        for walk in cycles:
            checks['parity'](_parity_holds(g, f, walk), (g, f, walk))
        if not identifications:
            continue
        for u, v in itertools.combinations(g.vertices(), 2):
            distance = g.distance(u, v)
            if f[u] != f[v] or distance > 2:
                continue
            if 'epimorphism' in checks and distance == 1:
                matrix, rank = identification_matrix(g, u, v)
                checks['epimorphism'](is_epimorphism(matrix, rank), (g, f, u, v))
            merged, identification = g.identify_vertices(u, v)
            induced = f.pushforward(identification)
            if 'null-transfer' in checks:
                checks['null-transfer'](is_null_coloring(merged, induced), (g, f, u, v))
            if 'maximality' in checks and is_null_coloring(merged, induced):
                checks['maximality'](
                    is_maximal_null(merged, induced, budget=budget), (g, f, u, v))


def check_triangulation(t, checks, budget=None):
    """
    Run the checks named in `checks` on t:

    - equivalence: a coloring is non-rainbow iff it is null on the skeleton,
    - counting: adjacent color classes of a non-rainbow coloring share at least three
      bichromatic faces,
    - maxima: chi_f equals the largest number of colors of a null coloring of the skeleton,
    - bound: chi_f does not exceed the upper bound for the surface.
    """
    if 'equivalence' in checks or 'counting' in checks:
        for f in all_colorings(t.n):
            non_rainbow = is_non_rainbow(t, f)
            if 'equivalence' in checks:
                checks['equivalence'](non_rainbow == is_null_coloring(t.skeleton, f), (t, f))
            if non_rainbow and 'counting' in checks:
                for e in quotient_graph(t.skeleton, f).edges:
                    checks['counting'](
                        bichromatic_face_count(t, f, e.u, e.v) >= 3, (t, f, e.u, e.v))
    if 'maxima' in checks or 'bound' in checks:
        report = verify_bound(t, budget=budget)
        if 'maxima' in checks:
            checks['maxima'](report.chi_f == max_null(t.skeleton, budget=budget)[0], t)
        if 'bound' in checks:
            checks['bound'](not report.violation, t)


def _graph_counterexamples(name, graphs, budget):
    checks = _checks([name])
    for g in graphs:
        check_graph(g, checks, budget=budget)
    return checks[name].counterexamples


def _triangulation_counterexamples(name, triangulations, budget):
    checks = _checks([name])
    for t in triangulations:
        check_triangulation(t, checks, budget=budget)
    return checks[name].counterexamples


def quotient_forest_counterexamples(graphs, budget=None):
    """
    Returns
    -------
    list of (graph, coloring) pairs of maximal null colorings with a quotient that is not a
    forest.
    """
    return _graph_counterexamples('quotient-forest', graphs, budget)


def bipartite_counterexamples(graphs, budget=None):
    return _graph_counterexamples('bipartite', graphs, budget)


def parity_counterexamples(graphs, budget=None):
    """
    Returns
    -------
    list of (graph, coloring, cycle) triples with an odd (ij)-edge count on the cycle.
    """
    return _graph_counterexamples('parity', graphs, budget)


def epimorphism_counterexamples(graphs, budget=None):
    return _graph_counterexamples('epimorphism', graphs, budget)


def null_transfer_counterexamples(graphs, budget=None):
    return _graph_counterexamples('null-transfer', graphs, budget)


def maximality_counterexamples(graphs, budget=None):
    return _graph_counterexamples('maximality', graphs, budget)


def equivalence_counterexamples(triangulations, budget=None):
    return _triangulation_counterexamples('equivalence', triangulations, budget)


def counting_counterexamples(triangulations, budget=None):
    """
    Returns
    -------
    list of (triangulation, coloring, i, j) with fewer than three (ij)-faces although the
    color classes i and j are adjacent.
    """
    return _triangulation_counterexamples('counting', triangulations, budget)


def maxima_counterexamples(triangulations, budget=None):
    return _triangulation_counterexamples('maxima', triangulations, budget)


def bound_counterexamples(triangulations, budget=None):
    """
    Returns
    -------
    list of triangulations whose chi_f exceeds the upper bound for their surface.
    """
    return _triangulation_counterexamples('bound', triangulations, budget)


def run_sweeps(max_graph_n, max_triangulation_n, budget=None, randomized=0, names=None):
    """
    Run the graph checks on the connected graphs with at most `max_graph_n` vertices and
    the triangulation checks on the catalog up to `max_triangulation_n` vertices.

    Parameters
    ----------
    randomized : number of random stacked triangulations per order added to the catalog.
    names : names of the checks to run, default all of them.

    Returns
    -------
    OrderedDict mapping check names to `Check` instances.
    """
    names = GRAPH_CHECKS + TRIANGULATION_CHECKS if names is None else list(names)
    unknown = set(names).difference(GRAPH_CHECKS + TRIANGULATION_CHECKS)
    if unknown:
        raise ValueError('unknown checks: {0}'.format(', '.join(sorted(unknown))))
    checks = _checks(c for c in GRAPH_CHECKS + TRIANGULATION_CHECKS if c in names)
    if set(GRAPH_CHECKS).intersection(checks):
        for n in range(1, max_graph_n + 1):
            for g in connected_graphs(n):
                check_graph(g, checks, budget=budget)
            log.info('graphs with {0} vertices done'.format(n))
    if set(TRIANGULATION_CHECKS).intersection(checks):
        for name, t in catalog(max_triangulation_n, randomized=randomized):
            check_triangulation(t, checks, budget=budget)
            log.debug('{0} done'.format(name))
    return checks

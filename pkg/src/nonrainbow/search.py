"""
Exact search over set partitions of the vertex set.

Partitions are enumerated as restricted growth strings in vertex order: vertex 1 gets
color 1 and every later vertex gets a used color or the next unused one. This visits each
partition once (color relabelings are never enumerated twice) and in lexicographic order,
so the first solution found is the lexicographically smallest one.

Constraints (faces that must not be rainbow, fundamental cycles that must have a
null-homologous image) are checked as soon as the last of their vertices is colored.
"""
import logging
import multiprocessing

from nonrainbow.coloring import Coloring
from nonrainbow.homology import cycle_image_is_null, is_null_coloring
from nonrainbow.surface import SurfaceKind
from nonrainbow.errors import BudgetExhausted, NotNullColoring

__all__ = [
    'SearchBudget', 'BoundReport', 'bound', 'all_colorings', 'exists_non_rainbow_k', 'chi_f',
    'max_null', 'is_maximal_null', 'verify_bound']

log = logging.getLogger(__name__)

#: Length of the restricted growth prefixes distributed over worker processes.
PREFIX_LENGTH = 4


class SearchBudget(object):
    """
    Limits for a search: the largest admissible vertex count and an optional limit on
    the number of search nodes (color assignments tried).
    """
    def __init__(self, max_vertices=64, node_limit=None):
        if max_vertices < 1 or (node_limit is not None and node_limit < 1):
            raise ValueError('search limits must be positive')
        self.max_vertices = max_vertices
        self.node_limit = node_limit

    def __repr__(self):
        return '<SearchBudget max_vertices={0} node_limit={1}>'.format(
            self.max_vertices, self.node_limit)

    def check(self, n):
        if n > self.max_vertices:
            raise BudgetExhausted(0, '{0} vertices exceed the limit of {1}'.format(
                n, self.max_vertices))


class BoundReport(object):
    """
    The value of chi_f for a triangulation, with witness, compared to the upper bound.
    """
    def __init__(self, triangulation, chi_f, witness, bound):
        self.triangulation = triangulation
        self.chi_f = chi_f
        self.witness = witness
        self.bound = bound

    def __repr__(self):
        return '<BoundReport {0} n={1} chi_f={2} bound={3}>'.format(
            self.kind.value, self.n, self.chi_f, self.bound)

    @property
    def n(self):
        return self.triangulation.n

    @property
    def kind(self):
        return self.triangulation.kind

    @property
    def tight(self):
        return self.chi_f == self.bound

    @property
    def violation(self):
        return self.chi_f > self.bound

    def as_row(self, ident):
        t = self.triangulation
        return [
            ident, t.n, t.m, t.F, t.kind.value, self.chi_f, self.bound, int(self.tight),
            self.witness.as_string()]


class _PartitionSearch(object):
    """
    Depth-first search over restricted growth strings with constraints.

    `checks[v]` lists predicates over the color list (indexed by vertex, index 0 unused)
    that can be decided once vertex v has been colored.
    """
    def __init__(self, n, checks, budget):
        self.n = n
        self.checks = checks
        self.node_limit = budget.node_limit
        self.nodes = 0

    def _admissible(self, colors, v):
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise BudgetExhausted(self.nodes)
        return all(check(colors) for check in self.checks[v])

    def _start(self, prefix):
        colors = [0] * (self.n + 1)
        used = 0
        for v, c in enumerate(prefix, start=1):
            if c > used + 1:
                raise ValueError('{0} is not a restricted growth string'.format(prefix))
            colors[v] = c
            used = max(used, c)
            if not self._admissible(colors, v):
                return None, used
        return colors, used

    def exact(self, k, prefix=()):
        """
        The first admissible coloring with exactly k colors extending `prefix`, or None.
        """
        colors, used = self._start(prefix)
        if colors is None or used > k:
            return None

        def extend(v, used):
            if v > self.n:
                return used == k
            if used + self.n - v + 1 < k:
                return False
            for c in range(1, min(used + 1, k) + 1):
                colors[v] = c
                if self._admissible(colors, v) and extend(v + 1, max(used, c)):
                    return True
            return False

        if extend(len(prefix) + 1, used):
            return Coloring(colors[1:])
        return None

    def maximum(self):
        """
        An admissible coloring with the most colors; among those the first in
        lexicographic order.
        """
        colors = [0] * (self.n + 1)
        best = [0, None]

        def extend(v, used):
            if v > self.n:
                if used > best[0]:
                    best[:] = [used, Coloring(colors[1:])]
                return
            if used + self.n - v + 1 <= best[0]:
                return
            for c in range(1, used + 2):
                colors[v] = c
                if self._admissible(colors, v):
                    extend(v + 1, max(used, c))

        extend(1, 0)
        return best[0], best[1]


def _non_rainbow_search(t, budget):
    checks = [[] for _ in range(t.n + 1)]
    for a, b, c in t.faces:
        checks[c].append(
            lambda colors, a=a, b=b, c=c: len({colors[a], colors[b], colors[c]}) < 3)
    return _PartitionSearch(t.n, checks, budget)


def _null_search(g, budget):
    checks = [[] for _ in range(g.n + 1)]
    for walk in g.fundamental_cycles():
        checks[max(walk.vertices)].append(
            lambda colors, walk=walk: cycle_image_is_null(g, colors, walk))
    return _PartitionSearch(g.n, checks, budget)


def _non_rainbow_branch(args):
    t, k, prefix, budget = args
    return _non_rainbow_search(t, budget).exact(k, prefix)


def bound(n, kind):
    """
    Upper bound on the number of colors of a non-rainbow coloring of a triangulation:
    floor((2n - 1) / 3) on the sphere, floor((2n + 1) / 3) on the projective plane.
    """
    if n < 4:
        raise ValueError('the bound requires at least 4 vertices')
    if kind is SurfaceKind.SPHERE:
        return (2 * n - 1) // 3
    return (2 * n + 1) // 3


def all_colorings(n, k=None):
    """
    Generate every coloring of n vertices (with exactly k colors, if given) in
    restricted growth order.
    """
    colors = [0] * (n + 1)

    def extend(v, used):
        if v > n:
            if k is None or used == k:
                yield Coloring(colors[1:])
            return
        if k is not None and used + n - v + 1 < k:
            return
        for c in range(1, (used + 1 if k is None else min(used + 1, k)) + 1):
            colors[v] = c
            for coloring in extend(v + 1, max(used, c)):
                yield coloring

    return extend(1, 0)


def exists_non_rainbow_k(t, k, budget=None, jobs=1):
    """
    A non-rainbow coloring of t with exactly k colors (the lexicographically smallest
    restricted growth string), or None if there is none.

    With `jobs > 1` the first-level branches are searched by a pool of worker processes;
    the node limit then applies per branch.
    """
    budget = budget or SearchBudget()
    budget.check(t.n)
    if not 1 <= k <= t.n:
        raise ValueError('k must be in 1..{0}'.format(t.n))
    if jobs > 1 and t.n > PREFIX_LENGTH:
        prefixes = [
            c.colors for c in all_colorings(PREFIX_LENGTH) if c.k <= k]
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(
                _non_rainbow_branch, [(t, k, prefix, budget) for prefix in prefixes])
        return next((r for r in results if r is not None), None)
    search = _non_rainbow_search(t, budget)
    res = search.exact(k)
    log.debug('k={0}: {1} after {2} nodes'.format(k, res, search.nodes))
    return res


def chi_f(t, budget=None, defensive=False, jobs=1):
    """
    Compute chi_f(t), the largest number of colors of a non-rainbow coloring.

    The search descends from the upper bound (or from n, if `defensive`) and stops at the
    first k admitting a non-rainbow coloring, which is correct since non-rainbow colorings
    exist for every k up to chi_f.
    """
    limit = bound(t.n, t.kind)
    for k in range(t.n if defensive else min(limit, t.n), 0, -1):
        witness = exists_non_rainbow_k(t, k, budget=budget, jobs=jobs)
        if witness is not None:
            return BoundReport(t, k, witness, limit)
    raise AssertionError('the constant coloring is always non-rainbow')  # pragma: no cover


def verify_bound(t, budget=None, defensive=False, jobs=1):
    """
    Compute chi_f and compare it with the bound. A violation is logged and flagged on the
    report, whose witness is then a counterexample certificate.
    """
    report = chi_f(t, budget=budget, defensive=defensive, jobs=jobs)
    if report.violation:
        log.error('bound violated: chi_f={0} > {1} with witness {2}'.format(
            report.chi_f, report.bound, report.witness.as_string()))
    return report


def max_null(g, budget=None):
    """
    The largest number of colors of a null coloring of g, with the lexicographically
    smallest witness.

    Returns
    -------
    (int, Coloring)
    """
    budget = budget or SearchBudget()
    budget.check(g.n)
    search = _null_search(g, budget)
    res = search.maximum()
    log.debug('max null coloring {0} after {1} nodes'.format(res[1], search.nodes))
    return res


def is_maximal_null(g, f, budget=None):
    if not is_null_coloring(g, f):
        raise NotNullColoring('{0} is not a null coloring'.format(f))
    return f.k >= max_null(g, budget=budget)[0]

"""
Catalog triangulations and the extremal constructions showing that the upper bound on
the number of colors of non-rainbow colorings is attained.

The constructions start from a base triangulation with k vertices, subdivide m - 1
pairwise distinct faces of it and color all base vertices alike and every new vertex with a
fresh color: each face then sees at most two colors. Subdividing a face created by an
earlier subdivision would produce a rainbow face, hence the distinct base faces.
"""
import random
import functools
import itertools
import logging
from collections import Counter

from nonrainbow.coloring import Coloring
from nonrainbow.search import bound, chi_f
from nonrainbow.surface import SurfaceKind, make_face, validate_triangulation, subdivide_face
from nonrainbow.util import pairs
from nonrainbow.errors import NotAFace

__all__ = [
    'ExtremalWitness', 'tetrahedron', 'octahedron', 'icosahedron', 'bipyramid', 'stacked',
    'random_stacked', 'projective_base', 'projective_family', 'extremal', 'catalog']

log = logging.getLogger(__name__)


class ExtremalWitness(object):
    """
    A triangulation with a non-rainbow coloring, together with how it was obtained.

    `base_size` and `subdivided` describe the construction; witnesses found by search
    (`constructive = False`) have no base.
    """
    def __init__(self, triangulation, coloring, colors, base_size=None, subdivided=(),
                 constructive=True):
        self.triangulation = triangulation
        self.coloring = coloring
        self.colors = colors
        self.base_size = base_size
        self.subdivided = tuple(subdivided)
        self.constructive = constructive

    def __repr__(self):
        return '<ExtremalWitness {0} n={1} colors={2}>'.format(
            self.triangulation.kind.value, self.triangulation.n, self.colors)

    @property
    def bound(self):
        return bound(self.triangulation.n, self.triangulation.kind)

    @property
    def tight(self):
        return self.colors == self.bound


def tetrahedron():
    return validate_triangulation(4, itertools.combinations(range(1, 5), 3))


def bipyramid(q):
    """
    The double pyramid over a q-cycle: equator 1..q, apexes q + 1 and q + 2.
    """
    if q < 3:
        raise ValueError('a bipyramid needs an equator of at least 3 vertices')
    faces = []
    for i in range(1, q + 1):
        for apex in (q + 1, q + 2):
            faces.append((i, i % q + 1, apex))
    return validate_triangulation(q + 2, faces)


def octahedron():
    return bipyramid(4)


def icosahedron():
    # 1 and 12 are the poles, 2..6 the upper and 7..11 the lower pentagon.
    upper, lower = list(range(2, 7)), list(range(7, 12))
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.extend([
            (1, upper[i], upper[j]),
            (12, lower[i], lower[j]),
            (upper[i], upper[j], lower[i]),
            (lower[i], lower[j], upper[j]),
        ])
    return validate_triangulation(12, faces)


def _subdivide(t, count, face_choices):
    choices = list(face_choices or [])
    if len(choices) > count:
        raise ValueError('{0} face choices for {1} subdivisions'.format(len(choices), count))
    for step in range(count):
        choice = choices[step] if step < len(choices) else 0
        if isinstance(choice, int):
            if not 0 <= choice < t.F:
                raise NotAFace('no face with index {0}'.format(choice))
            face = t.faces[choice]
        else:
            face = make_face(choice)
        t = subdivide_face(t, face)
    return t


def stacked(n, face_choices=None):
    """
    The stacked triangulation obtained from the tetrahedron by n - 4 face subdivisions.

    Parameters
    ----------
    face_choices : sequence of faces or face indices (into the sorted face list at the time
        of subdivision). Missing choices default to index 0.
    """
    if n < 4:
        raise ValueError('stacked triangulations have at least 4 vertices')
    return _subdivide(tetrahedron(), n - 4, face_choices)


def random_stacked(n, seed=None):
    rng = random.Random(seed)
    return stacked(n, [rng.randrange(4 + 2 * i) for i in range(n - 4)])


@functools.lru_cache(maxsize=None)
def projective_base():
    """
    The 6-vertex triangulation of the projective plane with the complete graph K_6 as
    skeleton, found by searching for 10 triples of {1..6} covering every pair twice.
    """
    vertex_pairs = list(itertools.combinations(range(1, 7), 2))
    triples = list(itertools.combinations(range(1, 7), 3))
    count, chosen = Counter(), []

    def extend():
        todo = [p for p in vertex_pairs if count[p] < 2]
        if not todo:
            return True
        for face in triples:
            if set(todo[0]) <= set(face) and face not in chosen \
                    and all(count[p] < 2 for p in pairs(face)):
                chosen.append(face)
                count.update(pairs(face))
                if extend():
                    return True
                chosen.pop()
                count.subtract(pairs(face))
        return False

    extend()
    return validate_triangulation(6, chosen)


def projective_family(n, face_choices=None):
    if n < 6:
        raise ValueError('simple projective triangulations have at least 6 vertices')
    return _subdivide(projective_base(), n - 6, face_choices)


def _construct(base, colors):
    subdivided = base.faces[:colors - 1]
    t = base
    for face in subdivided:
        t = subdivide_face(t, face)
    coloring = Coloring([1] * base.n + list(range(2, colors + 1)))
    return ExtremalWitness(t, coloring, colors, base_size=base.n, subdivided=subdivided)


def extremal(n, kind, budget=None, jobs=1):
    """
    A triangulation of the given surface with n vertices and a non-rainbow coloring with as
    many colors as the upper bound allows.

    Simple base triangulations with k = n - bound + 1 vertices exist for sphere n >= 6 and
    projective n >= 14. Sphere n = 4, 5 use explicit witnesses; for projective 6 <= n <= 13
    chi_f of `projective_family(n)` is computed by search instead.
    """
    if n < kind.min_vertices:
        raise ValueError('no simple {0} triangulation with {1} vertices'.format(kind.value, n))
    colors = bound(n, kind)
    if kind is SurfaceKind.SPHERE:
        if n == 4:
            return ExtremalWitness(tetrahedron(), Coloring([1, 1, 1, 2]), 2, base_size=4)
        if n == 5:
            return ExtremalWitness(bipyramid(3), Coloring([1, 1, 1, 2, 3]), 3, base_size=5)
        return _construct(stacked(n - colors + 1), colors)
    if n >= 14:
        return _construct(projective_family(n - colors + 1), colors)
    report = chi_f(projective_family(n), budget=budget, jobs=jobs)
    log.info('projective n={0}: chi_f={1}, bound {2}'.format(n, report.chi_f, report.bound))
    return ExtremalWitness(
        report.triangulation, report.witness, report.chi_f, constructive=False)


def catalog(max_n, randomized=0, seed=0, projective=True):
    """
    Generate `(name, triangulation)` pairs of the catalog with at most max_n vertices:
    tetrahedron, octahedron, icosahedron, bipyramids, stacked triangulations (the default
    ones and `randomized` random ones per order) and the projective family.
    """
    if max_n >= 4:
        yield 'tetrahedron', tetrahedron()
    if max_n >= 6:
        yield 'octahedron', octahedron()
    if max_n >= 12:
        yield 'icosahedron', icosahedron()
    for q in range(3, max_n - 1):
        if q != 4:
            yield 'bipyramid-{0}'.format(q), bipyramid(q)
    for n in range(5, max_n + 1):
        yield 'stacked-{0}'.format(n), stacked(n)
        for i in range(randomized):
            yield 'stacked-{0}-random-{1}'.format(n, i), \
                random_stacked(n, seed='{0}-{1}-{2}'.format(seed, n, i))
    if projective:
        for n in range(6, max_n + 1):
            yield 'projective-{0}'.format(n), projective_family(n)

"""
Triangulations of the sphere and the projective plane given as lists of faces.

Faces are unordered vertex triples; no rotation system is stored. A face list is a
triangulation of a closed surface if every edge lies in exactly two faces and the link of
every vertex is a single cycle. The Euler characteristic then tells the sphere (2) from
the projective plane (1).
"""
import enum
import logging
from collections import Counter, defaultdict

import networkx as nx

from nonrainbow.graph import build_graph
from nonrainbow.util import pairs
from nonrainbow.errors import (
    FaceNotTriple, DuplicateFace, EdgeNotInTwoFaces, VertexLinkNotSingleCycle, Disconnected,
    UnsupportedSurface, InvalidVertex, NotAFace,
)

__all__ = [
    'SurfaceKind', 'Triangulation', 'make_face', 'validate_triangulation', 'classify_surface',
    'face_count_expected', 'subdivide_face']

log = logging.getLogger(__name__)


class SurfaceKind(enum.Enum):
    SPHERE = 'sphere'
    PROJECTIVE_PLANE = 'projective'

    @property
    def euler_characteristic(self):
        return 2 if self is SurfaceKind.SPHERE else 1

    @property
    def min_vertices(self):
        """
        Order of the smallest triangulation with a simple skeleton.
        """
        return 4 if self is SurfaceKind.SPHERE else 6

    @classmethod
    def from_euler_characteristic(cls, chi):
        for kind in cls:
            if kind.euler_characteristic == chi:
                return kind
        raise UnsupportedSurface('Euler characteristic {0} is neither 2 nor 1'.format(chi))


def make_face(vertices, n=None):
    """
    Normalize a face to the sorted tuple of its three distinct vertices.
    """
    face = tuple(sorted(vertices))
    if len(face) != 3 or len(set(face)) != 3:
        raise FaceNotTriple('face {0} does not have three distinct vertices'.format(vertices))
    if n is not None and not all(isinstance(v, int) and 1 <= v <= n for v in face):
        raise InvalidVertex('face {0} has a vertex outside 1..{1}'.format(vertices, n))
    return face


class Triangulation(object):
    """
    A validated triangulation. Use `validate_triangulation` (or `Triangulation.from_faces`)
    to create instances.
    """
    def __init__(self, n, faces, skeleton, kind):
        self.n = n
        self.faces = tuple(faces)
        self.skeleton = skeleton
        self.kind = kind

    @classmethod
    def from_faces(cls, n, faces):
        return validate_triangulation(n, faces)

    def __repr__(self):
        return '<Triangulation {0} n={1} m={2} F={3}>'.format(
            self.kind.value, self.n, self.m, self.F)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and (self.n, self.faces) == (other.n, other.faces)

    def __hash__(self):
        return hash((self.n, self.faces))

    @property
    def m(self):
        return self.skeleton.m

    @property
    def F(self):
        return len(self.faces)

    @property
    def euler_characteristic(self):
        return self.n - self.m + self.F

    def faces_at(self, vertex):
        return [f for f in self.faces if vertex in f]

    def subdivide(self, face):
        return subdivide_face(self, face)


def validate_triangulation(n, faces):
    """
    Check that `faces` triangulates the sphere or the projective plane.

    Returns
    -------
    A Triangulation with faces sorted and the skeleton's edges numbered in sorted order.
    """
    normalized = [make_face(f, n) for f in faces]
    seen = set()
    for face in normalized:
        if face in seen:
            raise DuplicateFace('duplicate face {0}'.format(face))
        seen.add(face)
    normalized.sort()

    edge_count = Counter(edge for face in normalized for edge in pairs(face))
    for edge, count in sorted(edge_count.items()):
        if count != 2:
            raise EdgeNotInTwoFaces('edge {0} lies in {1} face(s)'.format(edge, count))

    links = defaultdict(list)
    for face in normalized:
        for v in face:
            links[v].append(tuple(x for x in face if x != v))
    for v in range(1, n + 1):
        if v not in links:
            raise Disconnected('vertex {0} lies in no face'.format(v))
        if not _is_single_cycle(links[v]):
            raise VertexLinkNotSingleCycle('link of vertex {0} is not a single cycle'.format(v))

    skeleton = build_graph(n, sorted(edge_count))
    if not skeleton.is_connected():
        raise Disconnected('skeleton has {0} components'.format(skeleton.component_count))

    kind = SurfaceKind.from_euler_characteristic(n - skeleton.m + len(normalized))
    return Triangulation(n, normalized, skeleton, kind)


def _is_single_cycle(link_edges):
    # Every link vertex has degree two once each edge lies in two faces, so the link is a
    # union of cycles and a single cycle iff it is connected.
    link = nx.Graph(link_edges)
    return len(link) >= 3 and nx.is_connected(link)


def classify_surface(t):
    return t.kind


def face_count_expected(n, kind):
    """
    Number of faces of a triangulation with n vertices, i.e. 2n - 4 on the sphere and
    2n - 2 on the projective plane.
    """
    if n < kind.min_vertices:
        raise ValueError('no simple {0} triangulation with {1} vertices'.format(kind.value, n))
    return 2 * (n - kind.euler_characteristic)


def subdivide_face(t, face):
    """
    Add the vertex n + 1 inside `face` and join it to the three corners.
    """
    face = make_face(face)
    if face not in t.faces:
        raise NotAFace('{0} is not a face'.format(face))
    u = t.n + 1
    a, b, c = face
    faces = [f for f in t.faces if f != face] + [(a, b, u), (b, c, u), (a, c, u)]
    res = validate_triangulation(u, faces)
    log.debug('subdivided face {0} with new vertex {1}'.format(face, u))
    return res

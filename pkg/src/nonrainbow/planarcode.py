"""
The planar_code format written by exhaustive generators of planar graphs.

A stream starts with the optional header `>>planar_code<<`. Each graph is one byte with
its vertex count N followed, for each vertex 1..N, by its neighbors in rotation order and a
terminating 0 byte. Only the one-byte variant (N <= 255) is supported.

Faces are recovered by tracing the face walks of the rotation system: the dart after
(a, b) is (b, c), where c precedes a in the rotation at b.
"""
import logging

from nonrainbow.surface import SurfaceKind, validate_triangulation
from nonrainbow.util import PLANAR_CODE_HEADER
from nonrainbow.errors import NonRainbowError, PlanarCodeError, FaceNotTriple, strict

__all__ = [
    'read_planar_code', 'write_planar_code', 'triangulation_from_rotations',
    'rotations_from_triangulation', 'iter_triangulations']

log = logging.getLogger(__name__)


def read_planar_code(data):
    """
    Parse a planar_code byte string.

    Returns
    -------
    list of rotation systems; a rotation system is a tuple holding for every vertex the
    tuple of its neighbors in rotation order.
    """
    pos = len(PLANAR_CODE_HEADER) if data.startswith(PLANAR_CODE_HEADER) else 0
    res = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise PlanarCodeError('record {0}: two-byte entries are not supported'.format(
                len(res) + 1))
        rotations = []
        for _ in range(n):
            neighbors = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError('record {0} is truncated'.format(len(res) + 1))
                x = data[pos]
                pos += 1
                if x == 0:
                    break
                if x > n:
                    raise PlanarCodeError('record {0}: neighbor {1} exceeds {2}'.format(
                        len(res) + 1, x, n))
                neighbors.append(x)
            rotations.append(tuple(neighbors))
        res.append(tuple(rotations))
    return res


def write_planar_code(rotation_systems, header=True):
    out = bytearray(PLANAR_CODE_HEADER if header else b'')
    for rotations in rotation_systems:
        if not 1 <= len(rotations) <= 255:
            raise PlanarCodeError('cannot encode {0} vertices'.format(len(rotations)))
        out.append(len(rotations))
        for neighbors in rotations:
            out.extend(neighbors)
            out.append(0)
    return bytes(out)


def triangulation_from_rotations(rotations):
    """
    Trace the faces of a rotation system and validate them as a triangulation.
    """
    position = {}
    for v, neighbors in enumerate(rotations, start=1):
        for i, w in enumerate(neighbors):
            if w == v or (v, w) in position:
                raise NonRainbowError('vertex {0} has a loop or parallel edges'.format(v))
            position[v, w] = i
    for v, w in position:
        if (w, v) not in position:
            raise PlanarCodeError('{0} lists {1} as neighbor but not vice versa'.format(v, w))

    faces, visited = [], set()
    for dart in sorted(position):
        walk = []
        while dart not in visited:
            visited.add(dart)
            walk.append(dart[0])
            a, b = dart
            rotation = rotations[b - 1]
            dart = (b, rotation[(position[b, a] - 1) % len(rotation)])
        if walk:
            if len(walk) != 3:
                raise FaceNotTriple('face {0} has length {1}'.format(walk, len(walk)))
            faces.append(walk)
    return validate_triangulation(len(rotations), faces)


def rotations_from_triangulation(t):
    """
    A rotation system realizing a sphere triangulation.

    Faces are oriented coherently starting with the first face in increasing vertex order;
    every rotation starts at the smallest neighbor. The result is canonical, so encoding,
    decoding and encoding again yields the same bytes.
    """
    if t.kind is not SurfaceKind.SPHERE:
        raise PlanarCodeError('only sphere triangulations have a planar rotation system')
    faces_at_edge = {}
    for face in t.faces:
        for i in range(3):
            edge = tuple(sorted((face[i], face[(i + 1) % 3])))
            faces_at_edge.setdefault(edge, []).append(face)

    def darts(oriented):
        return [(oriented[i], oriented[(i + 1) % 3]) for i in range(3)]

    orientation = {t.faces[0]: t.faces[0]}
    todo = [t.faces[0]]
    while todo:
        oriented = orientation[todo.pop()]
        for p, q in darts(oriented):
            for face in faces_at_edge[tuple(sorted((p, q)))]:
                if face == tuple(sorted(oriented)):
                    continue
                if face in orientation:
                    if (q, p) not in darts(orientation[face]):
                        raise PlanarCodeError('triangulation is not orientable')
                    continue
                r = next(x for x in face if x not in (p, q))
                orientation[face] = (q, p, r)
                todo.append(face)

    successor = {v: {} for v in range(1, t.n + 1)}
    for x, y, z in orientation.values():
        successor[x][y] = z
        successor[y][z] = x
        successor[z][x] = y
    rotations = []
    for v in range(1, t.n + 1):
        first = min(successor[v])
        rotation, w = [first], successor[v][first]
        while w != first:
            rotation.append(w)
            w = successor[v][w]
        rotations.append(tuple(rotation))
    return tuple(rotations)


def iter_triangulations(data, error=strict):
    """
    Generate `(record number, triangulation)` pairs for a planar_code stream.

    Records that do not describe a triangulation are passed to the `error` handler, whose
    return value (e.g. None for `errors.skip`) is yielded instead. Malformed streams raise
    `PlanarCodeError`.
    """
    for i, rotations in enumerate(read_planar_code(data), start=1):
        try:
            t = triangulation_from_rotations(rotations)
        except PlanarCodeError:
            raise
        except NonRainbowError as e:
            t = error(i, e)
        yield i, t

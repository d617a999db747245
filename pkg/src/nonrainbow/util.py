import regex

PLANAR_CODE_HEADER = b'>>planar_code<<'
INFINITY = float('inf')

vertices_pattern = regex.compile(r'^vertices\s+(?P<n>\d+)$')
face_pattern = regex.compile(r'^face\s+(?P<a>\d+)\s+(?P<b>\d+)\s+(?P<c>\d+)$')
color_pattern = regex.compile(r'^color\s+(?P<vertex>\d+)\s+(?P<color>\d+)$')


def pairs(vertices):
    """
    The three vertex pairs (edges) of a triangle, each as a sorted tuple.
    """
    a, b, c = sorted(vertices)
    return (a, b), (a, c), (b, c)

"""
Text formats: triangulation files, coloring files and tab-separated report lines.

A triangulation file has one line `vertices N` followed by lines `face a b c`; a coloring
file has one line `color v c` per vertex. Lines starting with `#` are comments.
"""
from pathlib import Path

from clldutils.path import readlines
from csvw.dsv import UnicodeWriter, reader

from nonrainbow.coloring import make_coloring
from nonrainbow.surface import validate_triangulation
from nonrainbow.util import vertices_pattern, face_pattern, color_pattern
from nonrainbow.errors import FormatError

__all__ = [
    'REPORT_COLUMNS', 'parse_triangulation', 'read_triangulation', 'format_triangulation',
    'parse_coloring', 'read_coloring', 'format_coloring', 'format_report_lines',
    'parse_report_line', 'write_text']

REPORT_COLUMNS = ['id', 'n', 'm', 'F', 'surface', 'chi_f', 'bound', 'tight', 'witness']


def _is_text(source):
    if not isinstance(source, str):
        return False
    patterns = (vertices_pattern, face_pattern, color_pattern)
    return '\n' in source or any(p.match(source.strip()) for p in patterns)


def _lines(source):
    """
    Numbered, stripped lines of a file, a list of strings or a text; blank lines and
    comments are None. A string is read as text if it has several lines or is a single
    line of one of the formats, and as a path otherwise.
    """
    if _is_text(source):
        source = source.splitlines()
    return readlines(source, strip=True, comment='#', linenumbers=True)


def parse_triangulation(source):
    """
    Read vertex count and face list without validating them as a triangulation.

    Returns
    -------
    (int, list of faces)
    """
    n, faces = None, []
    for lineno, line in _lines(source):
        if line is None:
            continue
        match = vertices_pattern.match(line)
        if match:
            if n is not None:
                raise FormatError('duplicate vertices line', lineno)
            n = int(match.group('n'))
            continue
        match = face_pattern.match(line)
        if match:
            if n is None:
                raise FormatError('face before vertices line', lineno)
            faces.append(tuple(int(match.group(x)) for x in 'abc'))
            continue
        raise FormatError('cannot parse {0!r}'.format(line), lineno)
    if n is None:
        raise FormatError('missing vertices line')
    return n, faces


def read_triangulation(source):
    return validate_triangulation(*parse_triangulation(source))


def format_triangulation(t, comment=None):
    lines = ['# {0}'.format(comment)] if comment else []
    lines.append('vertices {0}'.format(t.n))
    lines.extend('face {0} {1} {2}'.format(*face) for face in t.faces)
    return '\n'.join(lines) + '\n'


def parse_coloring(source):
    """
    Returns
    -------
    dict mapping vertices to raw color values.
    """
    res = {}
    for lineno, line in _lines(source):
        if line is None:
            continue
        match = color_pattern.match(line)
        if not match:
            raise FormatError('cannot parse {0!r}'.format(line), lineno)
        vertex = int(match.group('vertex'))
        if vertex in res:
            raise FormatError('duplicate color for vertex {0}'.format(vertex), lineno)
        res[vertex] = int(match.group('color'))
    return res


def read_coloring(source, g):
    return make_coloring(g, parse_coloring(source))


def format_coloring(f, comment=None):
    lines = ['# {0}'.format(comment)] if comment else []
    lines.extend('color {0} {1}'.format(v, c) for v, c in enumerate(f.colors, start=1))
    return '\n'.join(lines) + '\n'


def format_report_lines(rows):
    """
    Tab-separated lines for rows as returned by `BoundReport.as_row`.
    """
    with UnicodeWriter(delimiter='\t', lineterminator='\n') as writer:
        writer.writerows(rows)
    return writer.read().decode('utf8')


def parse_report_line(line):
    row = next(reader([line.rstrip('\n')], delimiter='\t'))
    if len(row) != len(REPORT_COLUMNS):
        raise FormatError('report line has {0} fields'.format(len(row)))
    res = dict(zip(REPORT_COLUMNS, row))
    for col in ['n', 'm', 'F', 'chi_f', 'bound', 'tight']:
        res[col] = int(res[col])
    res['witness'] = [int(c) for c in res['witness'].split(',')]
    return res


def write_text(path, text):
    path = Path(path)
    path.write_text(text, encoding='utf8')
    return path

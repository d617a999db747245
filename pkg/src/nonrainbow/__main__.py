import sys
import logging
import contextlib
import multiprocessing
from pathlib import Path

from clldutils.clilib import ArgumentParser, command, ParserError

from nonrainbow import errors
from nonrainbow.errors import FormatError, PlanarCodeError, BudgetExhausted
from nonrainbow.surface import SurfaceKind
from nonrainbow.coloring import rainbow_faces, quotient_graph
from nonrainbow.homology import is_null_coloring
from nonrainbow.search import SearchBudget, verify_bound
from nonrainbow.generators import extremal, stacked, projective_family
from nonrainbow.planarcode import iter_triangulations
from nonrainbow.theorems import run_sweeps
from nonrainbow.formats import (
    read_triangulation, read_coloring, format_triangulation, format_coloring,
    format_report_lines, write_text,
)

log = logging.getLogger(__name__)

EXIT_FAILURE, EXIT_PARSE_ERROR, EXIT_BUDGET = 1, 2, 3


def _write(args, line):
    print('%s' % line)


def _path(args, index=0, what='file'):
    if len(args.args) <= index:
        raise ParserError('missing {0} argument'.format(what))
    path = Path(args.args[index])
    if what != 'output' and not path.exists():
        raise ParserError('{0} must be a path for an existing file'.format(what))
    return path


def _budget(args):
    return SearchBudget(max_vertices=args.max_vertices, node_limit=args.budget)


@contextlib.contextmanager
def _exit_status():
    """
    Translate errors into exit codes: 1 for invalid input, 2 for unparsable input, 3 for
    an exhausted search budget.
    """
    try:
        yield
    except (FormatError, PlanarCodeError) as e:
        log.error('{0}: {1}'.format(type(e).__name__, e))
        raise SystemExit(EXIT_PARSE_ERROR)
    except ValueError as e:
        log.error('{0}: {1}'.format(type(e).__name__, e))
        raise SystemExit(EXIT_FAILURE)
    except BudgetExhausted as e:
        log.error(str(e))
        raise SystemExit(EXIT_BUDGET)


def _bool(value):
    return 'true' if value else 'false'


@command()
def validate(args):
    """
    Validate a triangulation file and print its surface and counts.

    nonrainbow validate PATH
    """
    with _exit_status():
        t = read_triangulation(_path(args, what='triangulation'))
    _write(args, '{0} n={1} m={2} F={3}'.format(t.kind.value, t.n, t.m, t.F))


@command()
def check(args):
    """
    Check a coloring of a triangulation: non-rainbow, null, rainbow faces, quotient.

    nonrainbow check TRIANGULATION COLORING
    """
    with _exit_status():
        t = read_triangulation(_path(args, what='triangulation'))
        f = read_coloring(_path(args, 1, what='coloring'), t)
    rainbow = rainbow_faces(t, f)
    quotient = quotient_graph(t.skeleton, f)
    edges = ['{0}-{1}'.format(*p) for p in quotient.edge_pairs()]
    _write(args, '\t'.join([
        'non_rainbow={0}'.format(_bool(not rainbow)),
        'null={0}'.format(_bool(is_null_coloring(t.skeleton, f))),
        'rainbow_faces={0}'.format(','.join('-'.join(map(str, face)) for face in rainbow)),
        'quotient_edges={0}'.format(','.join(edges)),
        'quotient_forest={0}'.format(_bool(quotient.is_forest())),
    ]))


@command()
def chif(args):
    """
    Compute chi_f of a triangulation and compare it with the upper bound.

    nonrainbow [--budget NODES] [--defensive] chif PATH
    """
    path = _path(args, what='triangulation')
    with _exit_status():
        report = verify_bound(
            read_triangulation(path),
            budget=_budget(args),
            defensive=args.defensive,
            jobs=args.jobs)
    _write(args, format_report_lines([report.as_row(path.stem)]).rstrip('\n'))
    if report.violation:
        raise SystemExit(EXIT_FAILURE)


@command()
def generate(args):
    """
    Write a triangulation, and with --extremal also a coloring (suffix .col), to PATH.

    nonrainbow --surface sphere --n 9 (--extremal | --family) generate PATH
    """
    if args.n is None:
        raise ParserError('--n is required')
    if bool(args.extremal) == bool(args.family):
        raise ParserError('exactly one of --extremal and --family is required')
    kind = SurfaceKind(args.surface or SurfaceKind.SPHERE.value)
    out = _path(args, what='output')
    with _exit_status():
        if args.extremal:
            witness = extremal(args.n, kind, budget=_budget(args), jobs=args.jobs)
            write_text(out, format_triangulation(witness.triangulation))
            write_text(out.with_suffix('.col'), format_coloring(
                witness.coloring, comment='{0} colors'.format(witness.colors)))
            _write(args, '{0} n={1} colors={2}'.format(kind.value, args.n, witness.colors))
            return
        t = stacked(args.n) if kind is SurfaceKind.SPHERE else projective_family(args.n)
        write_text(out, format_triangulation(t))
        _write(args, '{0} n={1} m={2} F={3}'.format(t.kind.value, t.n, t.m, t.F))


def _verify_record(item):
    i, t, budget, defensive = item
    try:
        return i, verify_bound(t, budget=budget, defensive=defensive)
    except BudgetExhausted as e:
        log.warning('record {0}: {1}'.format(i, e))
        return i, None


def _records(args, data, budget):
    for i, t in iter_triangulations(data, error=errors.skip):
        if t is None:
            continue
        if t.kind is not SurfaceKind.SPHERE:  # pragma: no cover
            log.warning('skipping record {0}: not a sphere triangulation'.format(i))
            continue
        yield i, t, budget, args.defensive


@command()
def batch(args):
    """
    Compute chi_f for every triangulation in a planar_code file, one report line each.

    nonrainbow [--budget NODES] [--jobs N] batch PATH
    """
    data = _path(args, what='planar_code').read_bytes()
    violations, exhausted = 0, 0
    with _exit_status():
        records = list(_records(args, data, _budget(args)))
        if args.jobs > 1:
            with multiprocessing.Pool(args.jobs) as pool:
                results = list(pool.imap(_verify_record, records))
        else:
            results = map(_verify_record, records)
        for i, report in results:
            if report is None:
                exhausted += 1
                continue
            log.debug('record {0} done'.format(i))
            violations += report.violation
            _write(args, format_report_lines([report.as_row(str(i))]).rstrip('\n'))
    if violations:
        raise SystemExit(EXIT_FAILURE)
    if exhausted:
        raise SystemExit(EXIT_BUDGET)


@command()
def sweep(args):
    """
    Check the structure theorems exhaustively: on connected graphs with at most --n
    vertices (default 5) and on catalog triangulations with at most --n + 2 vertices,
    --randomized random stacked triangulations per order included.

    nonrainbow --n 5 [--checks bound,maxima] [--randomized 200] sweep
    """
    n = 5 if args.n is None else args.n
    names = [name.strip() for name in args.checks.split(',')] if args.checks else None
    with _exit_status():
        checks = run_sweeps(
            n, n + 2, budget=_budget(args), randomized=args.randomized, names=names)
    _write(args, format_report_lines([c.as_row() for c in checks.values()]).rstrip('\n'))
    if any(c.counterexamples for c in checks.values()):
        raise SystemExit(EXIT_FAILURE)


def main():  # pragma: no cover
    logging.basicConfig()
    parser = ArgumentParser('nonrainbow')
    parser.add_argument(
        "--budget", help='node limit for each search', type=int, default=None)
    parser.add_argument(
        "--surface",
        help='surface of generated triangulations',
        choices=[kind.value for kind in SurfaceKind],
        default=None)
    parser.add_argument("--n", help='number of vertices', type=int, default=None)
    parser.add_argument(
        "--extremal",
        help='generate an extremal triangulation with coloring',
        action='store_true',
        default=False)
    parser.add_argument(
        "--family",
        help='generate the member of the stacked (or projective) family',
        action='store_true',
        default=False)
    parser.add_argument(
        "--defensive",
        help='search chi_f from n downwards instead of from the bound',
        action='store_true',
        default=False)
    parser.add_argument("--jobs", help='number of worker processes', type=int, default=1)
    parser.add_argument(
        "--max-vertices", help='largest admissible vertex count', type=int, default=64)
    parser.add_argument(
        "--checks", help='comma-separated names of the checks run by sweep', default=None)
    parser.add_argument(
        "--randomized",
        help='random stacked triangulations per order in sweep',
        type=int,
        default=0)
    sys.exit(parser.main())


if __name__ == '__main__':  # pragma: no cover
    main()

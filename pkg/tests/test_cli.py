import pytest
from clldutils.clilib import ParserError

from nonrainbow.__main__ import validate, check, chif, generate, batch, sweep
from nonrainbow.coloring import Coloring, is_non_rainbow
from nonrainbow.formats import read_triangulation, read_coloring, format_triangulation
from nonrainbow.formats import format_coloring, parse_report_line, write_text
from nonrainbow.generators import stacked, bipyramid
from nonrainbow.planarcode import write_planar_code
from nonrainbow.util import PLANAR_CODE_HEADER


def _args(mocker, *args, **kw):
    options = dict(
        budget=None, surface=None, n=None, extremal=False, family=False, defensive=False,
        jobs=1, max_vertices=64, checks=None, randomized=0)
    options.update(kw)
    return mocker.Mock(args=list(args), **options)


def test_validate(capsys, mocker, testdata):
    validate(_args(mocker, str(testdata / 'k4.tri')))
    out, _ = capsys.readouterr()
    assert out.strip() == 'sphere n=4 m=6 F=4'


def test_validate_invalid(mocker, testdata, caplog):
    with pytest.raises(SystemExit) as e:
        validate(_args(mocker, str(testdata / 'k4_missing_face.tri')))
    assert e.value.code == 1
    assert 'EdgeNotInTwoFaces' in caplog.text

    with pytest.raises(SystemExit) as e:
        validate(_args(mocker, str(testdata / 'malformed.tri')))
    assert e.value.code == 2


def test_validate_usage(mocker, tmp_path):
    with pytest.raises(ParserError):
        validate(_args(mocker))
    with pytest.raises(ParserError):
        validate(_args(mocker, str(tmp_path / 'missing.tri')))


def test_check(capsys, mocker, testdata):
    check(_args(mocker, str(testdata / 'k4.tri'), str(testdata / 'k4_1112.col')))
    out, _ = capsys.readouterr()
    fields = dict(field.split('=') for field in out.strip().split('\t'))
    assert fields == {
        'non_rainbow': 'true',
        'null': 'true',
        'rainbow_faces': '',
        'quotient_edges': '1-2',
        'quotient_forest': 'true',
    }

    check(_args(mocker, str(testdata / 'k4.tri'), str(testdata / 'k4_1233.col')))
    out, _ = capsys.readouterr()
    fields = dict(field.split('=') for field in out.strip().split('\t'))
    assert fields['non_rainbow'] == 'false'
    assert fields['null'] == 'false'
    assert fields['rainbow_faces'] == '1-2-3,1-2-4'


def test_check_bipyramid_witness(capsys, mocker, tmp_path):
    tri = write_text(tmp_path / 'b.tri', format_triangulation(bipyramid(3)))
    col = write_text(tmp_path / 'b.col', format_coloring(Coloring([1, 1, 1, 2, 3])))
    check(_args(mocker, str(tri), str(col)))
    out, _ = capsys.readouterr()
    assert 'quotient_edges=1-2,1-3\t' in out
    assert 'quotient_forest=true' in out


def test_check_invalid_coloring(mocker, testdata, tmp_path):
    col = write_text(tmp_path / 'short.col', 'color 1 1\n')
    with pytest.raises(SystemExit) as e:
        check(_args(mocker, str(testdata / 'k4.tri'), str(col)))
    assert e.value.code == 1


def test_chif(capsys, mocker, testdata):
    chif(_args(mocker, str(testdata / 'k4.tri')))
    out, _ = capsys.readouterr()
    assert out == 'k4\t4\t6\t4\tsphere\t2\t2\t1\t1,1,1,2\n'


def test_chif_defensive(capsys, mocker, tmp_path):
    tri = write_text(tmp_path / 'octa.tri', format_triangulation(bipyramid(4)))
    chif(_args(mocker, str(tri), defensive=True))
    out, _ = capsys.readouterr()
    res = parse_report_line(out)
    assert (res['chi_f'], res['bound'], res['tight']) == (3, 3, 1)


def test_chif_budget(mocker, tmp_path):
    tri = write_text(tmp_path / 'octa.tri', format_triangulation(bipyramid(4)))
    with pytest.raises(SystemExit) as e:
        chif(_args(mocker, str(tri), budget=2))
    assert e.value.code == 3


def test_chif_violation(mocker, testdata, capsys):
    from nonrainbow.search import BoundReport

    mocker.patch(
        'nonrainbow.__main__.verify_bound',
        lambda t, **kw: BoundReport(t, 3, Coloring([1, 1, 2, 3]), 2))
    with pytest.raises(SystemExit) as e:
        chif(_args(mocker, str(testdata / 'k4.tri')))
    assert e.value.code == 1
    assert '\t3\t2\t0\t' in capsys.readouterr()[0]


@pytest.mark.parametrize(
    'surface,n,colors',
    [
        ('sphere', 9, 5),
        ('projective', 16, 11),
        (None, 7, 4),
    ]
)
def test_generate_extremal(capsys, mocker, tmp_path, surface, n, colors):
    out = tmp_path / 'out.tri'
    generate(_args(mocker, str(out), surface=surface, n=n, extremal=True))
    t = read_triangulation(out)
    f = read_coloring(out.with_suffix('.col'), t)
    assert t.n == n
    assert t.kind.value == (surface or 'sphere')
    assert f.k == colors
    assert is_non_rainbow(t, f)
    assert 'colors={0}'.format(colors) in capsys.readouterr()[0]


def test_generate_family(capsys, mocker, tmp_path):
    out = tmp_path / 'out.tri'
    generate(_args(mocker, str(out), surface='sphere', n=7, family=True))
    assert read_triangulation(out) == stacked(7)
    assert not out.with_suffix('.col').exists()

    generate(_args(mocker, str(out), surface='projective', n=7, family=True))
    assert read_triangulation(out).kind.value == 'projective'


def test_generate_usage(mocker, tmp_path):
    out = str(tmp_path / 'out.tri')
    with pytest.raises(ParserError):
        generate(_args(mocker, out, extremal=True))
    with pytest.raises(ParserError):
        generate(_args(mocker, out, n=7))
    with pytest.raises(ParserError):
        generate(_args(mocker, out, n=7, extremal=True, family=True))
    with pytest.raises(ParserError):
        generate(_args(mocker, n=7, extremal=True))

    with pytest.raises(SystemExit) as e:
        generate(_args(mocker, out, surface='projective', n=5, extremal=True))
    assert e.value.code == 1


def test_batch(capsys, mocker, testdata):
    batch(_args(mocker, str(testdata / 'k4.pc')))
    out, _ = capsys.readouterr()
    res = parse_report_line(out)
    assert (res['id'], res['n'], res['chi_f'], res['tight']) == ('1', 4, 2, 1)


def test_batch_empty(capsys, mocker, tmp_path):
    path = tmp_path / 'empty.pc'
    path.write_bytes(PLANAR_CODE_HEADER)
    batch(_args(mocker, str(path)))
    assert capsys.readouterr()[0] == ''


def test_batch_skips_non_triangulations(capsys, mocker, tmp_path, caplog):
    path = tmp_path / 'mixed.pc'
    path.write_bytes(write_planar_code([
        ((2, 4), (1, 3), (2, 4), (1, 3)),
        ((2, 3, 4), (1, 4, 3), (1, 2, 4), (1, 3, 2)),
    ]))
    batch(_args(mocker, str(path)))
    lines = capsys.readouterr()[0].splitlines()
    assert [parse_report_line(line)['id'] for line in lines] == ['2']
    assert 'skipping record 1' in caplog.text


def test_batch_parallel(capsys, mocker, tmp_path):
    from nonrainbow.planarcode import rotations_from_triangulation

    path = tmp_path / 'stacked.pc'
    path.write_bytes(write_planar_code(
        [rotations_from_triangulation(stacked(n)) for n in range(4, 9)]))
    batch(_args(mocker, str(path), jobs=2))
    lines = capsys.readouterr()[0].splitlines()
    assert [parse_report_line(line)['n'] for line in lines] == [4, 5, 6, 7, 8]


def test_batch_malformed(mocker, tmp_path):
    path = tmp_path / 'bad.pc'
    path.write_bytes(PLANAR_CODE_HEADER + bytes([4, 2, 3]))
    with pytest.raises(SystemExit) as e:
        batch(_args(mocker, str(path)))
    assert e.value.code == 2


def test_batch_budget(mocker, testdata, capsys):
    with pytest.raises(SystemExit) as e:
        batch(_args(mocker, str(testdata / 'k4.pc'), budget=1))
    assert e.value.code == 3
    assert capsys.readouterr()[0] == ''


def test_sweep(capsys, mocker):
    sweep(_args(mocker, n=3))
    out, _ = capsys.readouterr()
    rows = [line.split('\t') for line in out.splitlines()]
    assert rows[0][0] == 'quotient-forest'
    assert all(row[2] == '0' for row in rows)


def test_sweep_selected_checks(capsys, mocker):
    sweep(_args(mocker, n=3, checks='bound, maxima', randomized=2))
    rows = [line.split('\t') for line in capsys.readouterr()[0].splitlines()]
    assert rows == [['maxima', '5', '0'], ['bound', '5', '0']]

    with pytest.raises(SystemExit) as e:
        sweep(_args(mocker, n=3, checks='bound,colour'))
    assert e.value.code == 1

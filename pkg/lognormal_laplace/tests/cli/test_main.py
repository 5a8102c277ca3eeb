import csv
import io
import math

import pytest
import ujson

from lognormal_laplace.__main__ import run


def _read_csv(text: str) -> tuple[list[dict], list[str]]:
    lines = text.splitlines()
    comments = [line for line in lines if line.startswith('# ')]
    body = [line for line in lines if not line.startswith('# ')]
    return list(csv.DictReader(io.StringIO('\n'.join(body)))), comments


def test_eval_series(config, capsys):
    argv = ['eval', '--method', 'series', '--mu', '0', '--sigma', '0.25', '--alpha', '10', '--terms', '41', '--z', '1']
    assert run(argv, config) == 0
    out = capsys.readouterr().out
    assert '\r\n' not in out
    rows, comments = _read_csv(out)
    assert len(rows) == 1
    assert float(rows[0]['value_re']) == pytest.approx(0.36804, abs=1e-5)
    assert rows[0]['method'] == 'small_z_series'
    assert float(rows[0]['error_bound']) > 0
    assert comments


def test_eval_mellin_barnes(config, capsys):
    assert run(['eval', '--method', 'mb', '--mu', '0', '--sigma', '2', '--z', '3'], config) == 0
    rows, _ = _read_csv(capsys.readouterr().out)
    assert float(rows[0]['value_re']) == pytest.approx(0.24163, abs=5e-5)
    assert rows[0]['error_bound'] == ''


def test_eval_is_deterministic(config, capsys):
    argv = ['eval', '--method', 'mb', '--sigma', '1', '--z=-1,-2', '--upper-limit']
    assert run(argv, config) == 0
    first = capsys.readouterr().out
    assert run(argv, config) == 0
    assert capsys.readouterr().out == first


def test_eval_on_cut(config, capsys):
    assert run(['eval', '--sigma', '1', '--z', '0'], config) == 2
    assert 'z on branch cut or at origin' in capsys.readouterr().err


def test_numeric_failure_exit_code(config, capsys):
    argv = ['eval', '--method', 'series', '--sigma', '0.05', '--z', '-1', '--upper-limit']
    assert run(argv, config) == 3
    assert 'Series term overflow' in capsys.readouterr().err


def test_density_empty_components(config, capsys):
    assert run(['density', '--components', '', '--x', '1'], config) == 2
    assert 'at least one component' in capsys.readouterr().err


def test_density_json(config, capsys):
    assert run(['density', '--components', '0:1', '--x', '0:5:0.1', '--format', 'json'], config) == 0
    document = ujson.loads(capsys.readouterr().out)
    assert document['columns'] == ['x', 'f', 'reference']
    assert len(document['rows']) == 51
    f = {row['x']: row['f'] for row in document['rows']}
    assert f[0] == 0
    assert f[1] == pytest.approx(0.398942, abs=1e-3)
    assert any(comment.startswith('mass_estimate=') for comment in document['comments'])
    assert any('small-z series at ' in comment for comment in document['comments'])
    values = dict(c.split('=') for c in document['comments'] if c.startswith(('first_moment=', 'mean=')))
    assert float(values['mean']) == pytest.approx(math.exp(0.5), rel=1e-15)
    # the grid stops at 5, so only part of the mean is covered
    assert 0 < float(values['first_moment']) < float(values['mean'])


def test_density_of_a_sum(config, capsys):
    assert run(['density', '--components', '0:1,0:1', '--x', '0.5:8:0.1'], config) == 0
    _, comments = _read_csv(capsys.readouterr().out)
    mass = next(c for c in comments if c.startswith('# mass_estimate='))
    # P(0.5 < S <= 8) = 0.924 plus the triangle from the (0, 0) anchor to x = 0.5
    assert 0.94 <= float(mass.split('=')[1]) <= 0.96


def test_table_output(config, capsys, tmp_path):
    out = tmp_path / 'table_1.csv'
    assert run(['table', '1', '--out', str(out)], config) == 0
    assert capsys.readouterr().out == ''
    with open(out, newline='') as f:
        rows, comments = _read_csv(f.read())
    cell = next(row for row in rows if row['z'] == '2')
    assert float(cell['sigma=0.75']) == pytest.approx(0.18984, abs=1e-5)
    assert comments[0].startswith('# table 1: ')


def test_unknown_table(config, capsys):
    assert run(['table', '9'], config) == 2


def test_thorin_and_leipnik(config, capsys):
    assert run(['thorin', '--sigma', '1', '--t', '0.5,1,2'], config) == 0
    rows, _ = _read_csv(capsys.readouterr().out)
    assert [row['t'] for row in rows] == ['0.5', '1', '2']
    assert all(float(row['U']) >= -1e-10 for row in rows)

    assert run(['leipnik-demo', '--sigma', '1', '--t', '0.01'], config) == 0
    rows, _ = _read_csv(capsys.readouterr().out)
    assert float(rows[0]['leipnik_abs']) < float(rows[0]['cf_abs'])

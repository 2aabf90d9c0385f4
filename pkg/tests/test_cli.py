import json
import os

import pytest

from lincost.driver.cli import main
from lincost.lp.export import read_lp_rows

DATA = os.path.join(os.path.dirname(__file__), 'data')
HALF = os.path.join(DATA, 'half.lc')


def test_analyze_json(capsys):
    assert main(['analyze', HALF, '--basis', 'poly', '--degree', '2', '--algo', 'new']) == 0
    doc = json.loads(capsys.readouterr().out)
    [report] = doc['functions']
    assert report['name'] == 'half'
    assert report['status'] == 'Inferred'


def test_analyze_both_text(capsys):
    assert main(['analyze', HALF, '--degree', '2', '--algo', 'both', '--format', 'text']) == 0
    out = capsys.readouterr().out
    assert 'half [new] Inferred' in out
    assert 'half [classic] Inferred' in out
    assert 'bool list^{4,1}' in out


def test_analyze_strict_fails_on_unsupported(tmp_path, capsys):
    path = os.path.join(tmp_path, 'local.lc')
    with open(path, 'w') as f:
        f.write('fun f (x : bool list) : bool list = let fun g y = y in g x\n')
    assert main(['analyze', path, '--algo', 'classic', '--strict']) == 1
    assert main(['analyze', path, '--algo', 'classic']) == 0


def test_check(tmp_path, capsys):
    args = ['check', HALF, '--fn', 'half', '--basis', 'poly', '--degree', '2',
            '--matrix', os.path.join(DATA, 'half_poly2.json')]
    assert main(args) == 0
    assert json.loads(capsys.readouterr().out)['functions'][0]['status'] == 'Checked'
    with open(os.path.join(DATA, 'half_poly2.json'), 'r') as f:
        doc = json.load(f)
    doc['entries'] = [e if e[:2] != ['r.deg2', 'a.deg2'] else ['r.deg2', 'a.deg2', '5'] for e in doc['entries']]
    bumped = os.path.join(tmp_path, 'bumped.json')
    with open(bumped, 'w') as f:
        json.dump(doc, f)
    assert main(args[:-1] + [bumped]) == 1


def test_eval(capsys):
    assert main(['eval', HALF, '--input', '[true, false, true, true, false]']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ['result: [true, true]', 'cost: 0']


def test_export_lp(tmp_path):
    out = os.path.join(tmp_path, 'half.lp')
    assert main(['export-lp', HALF, '--fn', 'half', '--degree', '2', '--out', out]) == 0
    with open(out, 'r') as f:
        text = f.read()
    assert text.startswith('Maximize')
    assert read_lp_rows(text)


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(['analyze'])
    assert info.value.code == 2


def test_missing_file():
    assert main(['analyze', os.path.join(DATA, 'missing.lc')]) == 1


def test_bad_grid():
    assert main(['bench', '--grid', '1..2,0..1']) == 1

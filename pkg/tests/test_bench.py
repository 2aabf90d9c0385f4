import os

import pytest

from lincost.driver.bench import (CSV_HEADER, ERROR, OK, SKIPPED, BenchRow, check_rows, classic_bound,
                                  linear_growth_fit, read_csv, run_cell, run_grid, write_csv)
from lincost.driver.config import BenchConfig
from lincost.driver.synthetic import gen_synthetic, synthetic_name, synthetic_program
from lincost.lang.evaluator import evaluate_program
from lincost.lang.values import from_python, to_python
from lincost.potential import Basis


def test_gen_synthetic_text():
    assert gen_synthetic(1, 1) == (
        'fun f0 (x0 : bool list) : bool list = x0\n'
        '\n'
        'fun f1 (x1 : bool list) : bool list =\n'
        '  case x1 of\n'
        '  | [] -> []\n'
        '  | h1 :: t1 -> h1 :: f0 (f1 t1)\n'
    )
    assert gen_synthetic(0, 0) == 'fun f0 (x0 : bool list) : bool list = x0\n'
    with pytest.raises(ValueError):
        gen_synthetic(-1, 2)


@pytest.mark.parametrize(
    argnames='c, l',
    argvalues=[(0, 2), (1, 3), (2, 2), (3, 1)]
)
def test_synthetic_is_identity(c, l):
    program = synthetic_program(c, l)
    assert program.names == ['f%d' % i for i in range(l + 1)]
    for xs in ([], [True], [False, True, True, False]):
        assert to_python(evaluate_program(program, synthetic_name(l), from_python(xs))) == xs


@pytest.mark.parametrize(
    argnames='d, c, l, expected',
    argvalues=[(1, 1, 0, 1), (2, 2, 1, 40), (2, 2, 0, 8), (3, 3, 4, 40095)]
)
def test_classic_bound(d, c, l, expected):
    assert classic_bound(d, c, l) == expected


def test_classic_bound_needs_calls():
    with pytest.raises(ValueError):
        classic_bound(2, 0, 3)


@pytest.mark.parametrize(
    argnames='d, c, l, typings',
    argvalues=[(1, 1, 1, 2), (2, 1, 3, 13), (2, 2, 2, 20), (3, 3, 3, 381)]
)
def test_classic_typings_within_bound(d, c, l, typings):
    row = run_cell(d, c, l, 'classic', Basis.polynomial(d), max_lp_rows=0)
    assert row.typings == typings
    assert row.typings <= classic_bound(d, c, l)
    assert check_rows([row]) == []


def test_linear_growth_fit():
    slope, intercept, residual = linear_growth_fit([0, 1, 2, 3], [5, 8, 11, 14])
    assert slope == pytest.approx(3)
    assert intercept == pytest.approx(5)
    assert residual == pytest.approx(0, abs=1e-9)
    _, _, curved = linear_growth_fit([0, 1, 2, 3, 4], [1, 2, 4, 8, 16])
    assert curved > 0.05


def test_new_counts_grow_linearly():
    basis = Basis.polynomial(2)
    rows = [run_cell(2, 2, l, 'new', basis) for l in range(5)]
    assert all(r.status == OK for r in rows)
    counts = [r.constrs for r in rows]
    slope, _, residual = linear_growth_fit(range(5), counts)
    assert slope > 0
    assert residual < 0.01


def test_classic_cell_counts_without_solving():
    row = run_cell(2, 2, 2, 'classic', Basis.polynomial(2), max_lp_rows=1)
    assert row.status == SKIPPED
    assert row.constrs > run_cell(2, 2, 2, 'new', Basis.polynomial(2)).constrs
    with pytest.raises(ValueError):
        run_cell(1, 1, 1, 'fastest', Basis.polynomial(1))


def test_csv_round_trip(tmp_path):
    rows = [BenchRow(1, 2, 3, 'new', 0.5, 0.25, 0.75, 120, OK),
            BenchRow(1, 2, 3, 'classic', 0.0, 0.0, 0.0, None, ERROR)]
    path = os.path.join(tmp_path, 'out', 'bench.csv')
    write_csv(rows, path)
    with open(path, 'r') as f:
        assert f.readline().strip() == ','.join(CSV_HEADER)
    assert read_csv(path) == rows


def test_read_csv_checks_header(tmp_path):
    path = os.path.join(tmp_path, 'bad.csv')
    with open(path, 'w') as f:
        f.write('d,c,l\n1,1,1\n')
    with pytest.raises(ValueError):
        read_csv(path)


def test_check_rows():
    fine = [BenchRow(2, 2, 1, 'classic', 0, 0, 0, 100, OK, typings=7), BenchRow(2, 2, 1, 'new', 0, 0, 0, 50, OK)]
    assert check_rows(fine) == []
    over = [BenchRow(2, 2, 1, 'classic', 0, 0, 0, 100, OK, typings=10 ** 6)]
    assert len(check_rows(over)) == 1
    inverted = [BenchRow(2, 2, 1, 'classic', 0, 0, 0, 10, OK), BenchRow(2, 2, 1, 'new', 0, 0, 0, 50, OK)]
    assert len(check_rows(inverted)) == 1


def test_run_grid_writes_csv(tmp_path):
    out = os.path.join(tmp_path, 'grid.csv')
    cfg = BenchConfig(d='1', c='1', l='0..1', algorithms='new', timeout=60, output=out)
    rows = run_grid(cfg, progress=False)
    assert [(r.l, r.algo) for r in rows] == [(0, 'new'), (1, 'new')]
    assert [(r.l, r.constrs, r.status) for r in read_csv(out)] == [(r.l, r.constrs, r.status) for r in rows]


@pytest.mark.integration
def test_grid_assertions_hold():
    cfg = BenchConfig(d='1..2', c='1..2', l='0..3')
    rows = run_grid(cfg, progress=False, write=False)
    assert check_rows(rows) == []

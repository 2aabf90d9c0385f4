import os
import textwrap

import pytest

from lincost.const import DEFAULT_BENCH_DIR, DEFAULT_MAX_LP_ROWS, DEFAULT_WEIGHT_BASE
from lincost.driver.config import AnalysisConfig, BenchConfig, parse_range
from lincost.potential import Basis


def write(tmp_path, name, text):
    p = os.path.join(tmp_path, name)
    with open(p, 'w') as f:
        f.write(textwrap.dedent(text))
    return p


def test_analysis_defaults():
    cfg = AnalysisConfig()
    assert cfg.basis == Basis.polynomial(1)
    assert cfg.algorithms == ('new',)
    assert cfg.mode == 'costfree'
    assert cfg.weight_base == DEFAULT_WEIGHT_BASE
    assert not cfg.strict
    assert not cfg.memoize


def test_analysis_from_file(tmp_path):
    p = write(tmp_path, 'analysis.yml', """
        basis: exp
        base: 4
        algo: both
        mode: costful
        objective:
          row_weight_base: 100
        strict: true
        memoize: true
        step_budget: 500
    """)
    cfg = AnalysisConfig(p)
    assert cfg.basis == Basis.exponential(4)
    assert cfg.algorithms == ('new', 'classic')
    assert cfg.mode == 'costful'
    assert cfg.weight_base == 100
    assert cfg.strict
    assert cfg.memoize
    assert cfg.step_budget == 500


def test_analysis_overrides_file(tmp_path):
    p = write(tmp_path, 'analysis.yml', """
        basis: poly
        degree: 3
        algo: classic
    """)
    cfg = AnalysisConfig(p, degree=2, algo=None)
    assert cfg.basis == Basis.polynomial(2)
    assert cfg.algorithms == ('classic',)


@pytest.mark.parametrize(
    argnames='text',
    argvalues=[
        'degree: 0',
        'degree: two',
        'basis: log',
        'algo: fastest',
        'mode: cheap',
        'objective: 10',
        '- a list',
    ]
)
def test_analysis_rejects(tmp_path, text):
    p = write(tmp_path, 'analysis.yml', text)
    with pytest.raises(ValueError):
        AnalysisConfig(p)


@pytest.mark.parametrize(
    argnames='value, expected',
    argvalues=[('1..3', (1, 3)), (' 2 .. 2 ', (2, 2)), ('4', (4, 4)), (5, (5, 5)), ([0, 2], (0, 2))]
)
def test_parse_range(value, expected):
    assert parse_range(value) == expected


@pytest.mark.parametrize(
    argnames='value',
    argvalues=['3..1', 'a..b', '1..', [-1, 2], True]
)
def test_parse_range_rejects(value):
    with pytest.raises(ValueError):
        parse_range(value)


def test_bench_defaults():
    cfg = BenchConfig()
    assert cfg.d == (1, 2)
    assert cfg.algorithms == ('new', 'classic')
    assert cfg.max_lp_rows == DEFAULT_MAX_LP_ROWS
    assert cfg.workers == 1
    assert cfg.output == os.path.join(DEFAULT_BENCH_DIR, 'bench.csv')


def test_bench_from_file(tmp_path):
    p = write(tmp_path, 'bench.yml', """
        d: 1..2
        c: [1, 2]
        l: 3
        basis: exp
        algorithms: [classic]
        timeout: 5
        output: out.csv
        workers: 2
    """)
    cfg = BenchConfig(p)
    assert cfg.cells() == [(1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 2, 3)]
    assert cfg.algorithms == ('classic',)
    assert cfg.timeout == 5.0
    assert cfg.output == 'out.csv'
    assert cfg.workers == 2
    assert cfg.basis_for(2) == Basis.exponential(3)


@pytest.mark.parametrize(
    argnames='overrides',
    argvalues=[{'d': '0..1'}, {'timeout': 0}, {'timeout': 'soon'}, {'workers': 0}, {'algo': 'other'},
               {'basis': 'log'}]
)
def test_bench_rejects(overrides):
    with pytest.raises(ValueError):
        BenchConfig(**overrides)

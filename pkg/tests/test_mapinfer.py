import json
import os
import textwrap
from fractions import Fraction

import numpy as np
import pytest

from lincost.const import ENV
from lincost.driver.corpus import CORPUS
from lincost.lang.parser import parse_program
from lincost.lang.types import BOOL, FunT, ListT
from lincost.lang.values import from_python
from lincost.linmap import PMat
from lincost.mapinfer import (FunStatus, MatrixInference, call_graph, check_function, check_soundness, derive,
                              expand_higher_order, infer_function, infer_program, prepare_program,
                              topological_sccs)
from lincost.mapinfer.signatures import reallocates
from lincost.potential import AnnVec, Basis, Index, potential

DATA = os.path.join(os.path.dirname(__file__), 'data')
POLY2 = Basis.polynomial(2)
EXP4 = Basis.exponential(4)
L = ListT(BOOL)


def load(name):
    with open(os.path.join(DATA, name), 'r') as f:
        return parse_program(f.read())


def load_corpus(name):
    return next(entry for entry in CORPUS if entry.file == name).load()


def matrix(name, bump=None):
    with open(os.path.join(DATA, name), 'r') as f:
        doc = json.load(f)
    if bump is not None:
        row, col, value = bump
        doc['entries'] = [e for e in doc['entries'] if (e[0], e[1]) != (row, col)] + [[row, col, value]]
    return PMat.from_json(doc)


@pytest.mark.parametrize(
    argnames='basis, fixture',
    argvalues=[(POLY2, 'half_poly2.json'), (EXP4, 'half_exp4.json')]
)
def test_check_worked_matrices(basis, fixture):
    report = check_function(load('half.lc'), 'half', matrix(fixture), basis)
    assert report.status is FunStatus.CHECKED
    assert report.diagnostics == []
    assert report.constraints > 0


@pytest.mark.parametrize(
    argnames='basis, fixture, bump',
    argvalues=[
        (POLY2, 'half_poly2.json', ('r.deg2', 'a.deg2', '5')),
        (EXP4, 'half_exp4.json', ('r.base4', 'a.base2', '7')),
    ]
)
def test_check_rejects_raised_entry(basis, fixture, bump):
    report = check_function(load('half.lc'), 'half', matrix(fixture, bump), basis)
    assert report.status is FunStatus.REJECTED
    assert any('inequality fails' in d for d in report.diagnostics)


def test_derive_half_paths():
    prepared = prepare_program(load('half.lc'))
    body = prepared.program.get('half').body
    ctx = {'half': FunT(L, L), 'lst': L}
    result = derive(ctx, body, POLY2, {'half': matrix('half_poly2.json')})
    assert len(result.S) == 3
    assert len(result.C) == 5
    assert result.obligations == []


def test_infer_half_polynomial():
    report = infer_function(load('half.lc'), 'half', POLY2)
    assert report.status is FunStatus.INFERRED
    assert report.linear
    assert report.reallocates
    m = report.matrix
    worked = matrix('half_poly2.json')

    def objective(mat):
        return sum(mat.entry(i, j) * Fraction(10) ** (i.degree + j.degree) for i in report.rows for j in report.cols)
    assert objective(m) >= objective(worked)
    assert check_function(load('half.lc'), 'half', m, POLY2).status is FunStatus.CHECKED


def test_infer_half_exponential_reallocates_base2():
    report = infer_function(load('half.lc'), 'half', EXP4)
    assert report.status is FunStatus.INFERRED
    col = Index.parse('a.base2')
    assert any(report.matrix.entry(Index.parse(r), col) > 0 for r in ('r.base4', 'r.base3', 'r.base2'))
    assert check_soundness(prepare_program(load('half.lc')).program, 'half', report.matrix, EXP4,
                           samples=50, max_length=10) == []


def test_half_tight_on_even_lengths():
    m = matrix('half_poly2.json')
    p = AnnVec.parse({'a.deg2': 1})
    out = m.apply(p)
    for n in range(0, 13, 2):
        phi_in = potential({'a': from_python([True] * n)}, {'a': L}, p, POLY2)
        phi_out = potential({'r': from_python([True] * (n // 2))}, {'r': L}, out, POLY2)
        assert phi_in == phi_out


@pytest.mark.parametrize(
    argnames='m, expected',
    argvalues=[
        (matrix('half_poly2.json'), True),
        (PMat.from_entries({(Index.parse('c'), Index.parse('c')): Fraction(1)}), False),
    ]
)
def test_reallocates(m, expected):
    assert reallocates(m) is expected


def test_nonlinear_nested_self_call():
    program = parse_program(textwrap.dedent(
        """
        fun f (x : bool list) : bool list =
          case x of
          | [] -> []
          | h :: t -> f (f t)
        """
    ))
    report = infer_function(program, 'f', POLY2)
    assert report.status is FunStatus.NONLINEAR
    assert not report.linear
    assert any('NonlinearTerm' in d for d in report.diagnostics)
    assert report.matrix.entry(Index.parse('c'), Index.parse('c')) == 1
    assert not report.reallocates


def test_round_uses_callee_matrices():
    reports = infer_program(load('round.lc'), Basis.polynomial(1))
    assert list(reports) == ['half', 'dbl', 'round']
    assert all(r.status is FunStatus.INFERRED for r in reports.values())
    assert all(r.linear for r in reports.values())


def test_topological_order():
    program = prepare_program(load('round.lc')).program
    graph = call_graph(program)
    assert set(graph['round']) == {'round', 'dbl', 'half'}
    order = [scc.members for scc in topological_sccs(program)]
    assert order.index(('round',)) > order.index(('half',))
    assert order.index(('round',)) > order.index(('dbl',))


def test_mutual_recursion_component():
    program = parse_program(textwrap.dedent(
        """
        fun even (xs : bool list) : bool list =
          case xs of
          | [] -> []
          | h :: t -> h :: odd t

        fun odd (xs : bool list) : bool list =
          case xs of
          | [] -> []
          | h :: t -> even t
        """
    ))
    sccs = topological_sccs(prepare_program(program).program)
    assert [scc.members for scc in sccs] == [('even', 'odd')]
    assert sccs[0].recursive
    reports = infer_program(program, POLY2)
    assert {r.status for r in reports.values()} <= {FunStatus.INFERRED, FunStatus.NONLINEAR}


def test_expand_higher_order():
    program = parse_program(textwrap.dedent(
        """
        fun neg b = if b then false else true

        fun map f = fun go (xs : bool list) : bool list =
          case xs of
          | [] -> []
          | h :: t -> f h :: go t

        fun negate_all (xs : bool list) : bool list = map neg xs
        """
    ))
    expanded = expand_higher_order(program)
    assert 'map' not in expanded.names
    assert 'map_neg' in expanded.names
    report = infer_function(program, 'negate_all', POLY2)
    assert report.status is FunStatus.INFERRED
    out = report.matrix.apply(AnnVec.parse({'a.deg2': 1, 'a.deg1': 1}))
    assert out[Index.parse('r.deg2')] == 1


def test_check_soundness_finds_violation():
    too_big = matrix('half_poly2.json', ('r.deg2', 'a.deg2', '5'))
    program = prepare_program(load('half.lc')).program
    violations = check_soundness(program, 'half', too_big, POLY2, samples=200,
                                 rng=np.random.default_rng(ENV.LINCOST_SEED.val))
    assert violations
    v = violations[0]
    assert v.phi_out > v.phi_in


def test_inference_problem_export():
    inference = MatrixInference(prepare_program(load('half.lc')), POLY2)
    problem = inference.problem('half')
    assert 0 < len(problem.variables) <= 6
    assert len(problem) > 0
    assert inference.reports == {}


def test_report_json():
    report = infer_function(load('half.lc'), 'half', POLY2)
    doc = report.to_json()
    assert doc['name'] == 'half'
    assert doc['algo'] == 'new'
    assert doc['status'] == 'Inferred'
    assert doc['matrix']['rows'] == ['r.deg2', 'r.deg1', 'c']
    assert doc['matrix']['cols'] == ['a.deg2', 'a.deg1', 'c']
    assert set(doc['lp_stats']) == {'vars', 'constraints', 'solve_state'}


FIRST = textwrap.dedent(
    """
    fun first (xs : bool list) : bool list =
      case xs of
      | [] -> []
      | h :: t -> [h]
    """
)


def test_singleton_gets_no_invented_potential():
    program = parse_program(FIRST)
    poly1 = Basis.polynomial(1)
    m = PMat.from_entries({(Index.parse('r.deg1'), Index.parse('a.deg1')): 100,
                           (Index.parse('c'), Index.parse('c')): 1},
                          {Index.parse('r.deg1'), Index.parse('a.deg1'), Index.parse('c')})
    report = check_function(program, 'first', m, poly1)
    assert report.status is FunStatus.REJECTED
    assert any('inequality fails' in d for d in report.diagnostics)
    assert check_soundness(prepare_program(program).program, 'first', m, poly1, samples=50)
    inferred = infer_function(program, 'first', poly1)
    assert inferred.status is FunStatus.INFERRED
    assert not inferred.reallocates


@pytest.mark.parametrize(
    argnames='basis',
    argvalues=[POLY2, Basis.exponential(3)]
)
def test_inferred_split_is_sound(basis):
    program = load_corpus('split.lc')
    report = infer_function(program, 'split', basis)
    assert report.status is FunStatus.INFERRED
    assert check_soundness(prepare_program(program).program, 'split', report.matrix, basis, samples=200,
                           rng=np.random.default_rng(ENV.LINCOST_SEED.val)) == []


def test_round_matrices_are_sound():
    basis = Basis.polynomial(1)
    program = prepare_program(load('round.lc')).program
    for name, report in infer_program(load('round.lc'), basis).items():
        assert check_soundness(program, name, report.matrix, basis, samples=100) == [], name

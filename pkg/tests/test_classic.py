import dataclasses
import os
import textwrap
from fractions import Fraction

import pytest

from lincost.classic import (ABase, AList, ClassicInference, ClassicStatus, ClassicUnsupported, ConstraintStore,
                             Mode, Objective, annotated_potential, check_costful_soundness,
                             classic_constraint_count, classic_infer)
from lincost.driver.synthetic import synthetic_name, synthetic_program
from lincost.lang.parser import parse_program
from lincost.lang.types import BOOL
from lincost.lang.values import from_python
from lincost.lp import LinExpr
from lincost.mapinfer import MatrixInference, prepare_program
from lincost.potential import Basis

DATA = os.path.join(os.path.dirname(__file__), 'data')

WALK = textwrap.dedent(
    """
    fun walk (xs : bool list) : bool list =
      case xs of
      | [] -> []
      | x :: t -> let () = tick 1 in x :: walk t
    """
)


def load(name):
    with open(os.path.join(DATA, name), 'r') as f:
        return parse_program(f.read())


def test_half_polynomial_output():
    report = classic_infer(load('half.lc'), 'half', Basis.polynomial(2))
    assert report.status is ClassicStatus.INFERRED
    sig = report.signature
    assert sig.arg.values == (1, 0)
    assert sig.ret.values == (4, 1)
    assert sig.ret_const.constant == 0
    assert str(sig.ret) == 'bool list^{4,1}'
    assert report.reallocates


def test_half_exponential_gets_nothing():
    report = classic_infer(load('half.lc'), 'half', Basis.exponential(4))
    assert report.status is ClassicStatus.INFERRED
    assert report.signature.ret.values == (0, 0, 0)
    assert not report.reallocates


def test_half_exponential_required_output_infeasible():
    report = classic_infer(load('half.lc'), 'half', Basis.exponential(4), require_output=1)
    assert report.status is ClassicStatus.INFEASIBLE
    assert report.signature.arg.values == (0, 0, 0)
    assert report.diagnostics


def test_round_cannot_keep_its_input():
    report = classic_infer(load('round.lc'), 'round', Basis.polynomial(1), objective=Objective.INPUT,
                           pin_output_to_input=True)
    assert report.status is ClassicStatus.INFERRED
    assert report.signature.arg.values == (0,)
    assert report.retypings == 3


def test_costful_walk():
    program = parse_program(WALK)
    basis = Basis.polynomial(1)
    report = classic_infer(program, 'walk', basis, mode=Mode.COSTFUL)
    assert report.status is ClassicStatus.INFERRED
    sig = report.signature
    assert sig.arg.values == (1,)
    assert sig.arg_const.constant == 0
    assert sig.ret.values == (0,)
    assert check_costful_soundness(program, 'walk', report, basis, samples=50) == []


def test_cost_free_ignores_ticks():
    report = classic_infer(parse_program(WALK), 'walk', Basis.polynomial(1), objective=Objective.INPUT,
                           pin_output_to_input=True)
    assert report.status is ClassicStatus.INFERRED
    assert report.mode is Mode.COST_FREE


def test_costful_soundness_catches_cheap_type():
    program = parse_program(WALK)
    basis = Basis.polynomial(1)
    report = classic_infer(program, 'walk', basis, mode=Mode.COSTFUL)
    cheap = AList(ABase(BOOL), (1,), (LinExpr.const(Fraction(1, 2)),))
    report.signature = dataclasses.replace(report.signature, arg=cheap)
    violations = check_costful_soundness(program, 'walk', report, basis, samples=50)
    assert violations
    assert all(v.phi_in - v.phi_out < v.cost for v in violations)


def test_local_function_unsupported():
    program = parse_program('fun f (x : bool list) : bool list = let fun g y = y in g x')
    with pytest.raises(ClassicUnsupported):
        classic_infer(program, 'f', Basis.polynomial(1))


def test_count_grows_with_levels():
    basis = Basis.polynomial(2)
    counts = [classic_infer(synthetic_program(2, l), synthetic_name(l), basis, max_lp_rows=1).constraints
              for l in range(4)]
    assert counts == sorted(counts)
    assert len(set(counts)) == len(counts)


def test_skipped_when_too_large():
    report = classic_infer(synthetic_program(2, 2), synthetic_name(2), Basis.polynomial(2), max_lp_rows=10)
    assert report.status is ClassicStatus.SKIPPED
    assert classic_constraint_count(report) > 10
    assert report.to_json()['status'] == 'Skipped'


def test_memoize_reduces_retypings():
    program = synthetic_program(2, 3)
    basis = Basis.polynomial(2)
    fresh = classic_infer(program, synthetic_name(3), basis, max_lp_rows=1)
    memo = classic_infer(program, synthetic_name(3), basis, memoize=True, max_lp_rows=1)
    assert memo.retypings < fresh.retypings


def test_type_function_directly():
    inference = ClassicInference(prepare_program(load('half.lc')), Basis.polynomial(2))
    sig = inference.type_function('half')
    assert len(sig.arg.anns) == 2
    assert inference.retypings >= 1
    assert inference.store.count > 0


@pytest.mark.parametrize(argnames='costful, shifted', argvalues=[(False, True), (True, False)])
def test_recursive_call_constants_shift_only_cost_free(costful, shifted):
    inference = ClassicInference(prepare_program(parse_program(WALK)), Basis.polynomial(1))
    inference.type_function('walk', costful=costful)
    origins = [c.name for c in inference.store.problem.constraints]
    assert ('walk: recursive call constants' in origins) == shifted


def test_report_json():
    doc = classic_infer(load('half.lc'), 'half', Basis.polynomial(2)).to_json()
    assert doc['algo'] == 'classic'
    assert doc['status'] == 'Inferred'
    assert doc['mode'] == 'costfree'
    assert doc['type'] == '<bool list^{1,0}, 0> -> <bool list^{4,1}, 0>'


def test_annotated_potential():
    t = AList(ABase(BOOL), (2, 1), (LinExpr.const(4), LinExpr.const(1)))
    assert annotated_potential(from_python([True] * 4), t, Basis.polynomial(2)) == 4 * 6 + 4
    with pytest.raises(ValueError):
        AList(ABase(BOOL), (1,), (LinExpr.var('q'),)).values


def test_constraint_store():
    store = ConstraintStore('s')
    a, b = store.fresh(), store.fresh()
    store.le(a, b, 'x')
    store.le(1, 2, 'constant')
    assert store.rows == 1
    assert store.count == 3
    assert store.failed == []
    store.eq(1, 0, 'broken')
    assert len(store.failed) == 1
    assert len(store.problem) == 1


def test_constraint_store_counting_only():
    store = ConstraintStore('s', max_rows=2)
    xs = [store.fresh() for _ in range(4)]
    for u, v in zip(xs, xs[1:]):
        store.le(u, v, 'chain')
    assert store.counting_only
    assert store.problem is None
    assert store.count == 3 + 4


@pytest.mark.integration
@pytest.mark.parametrize(
    argnames='d, c, l',
    argvalues=[(3, 3, 4), (2, 2, 5)]
)
def test_classic_outgrows_matrices(d, c, l):
    program = synthetic_program(c, l)
    basis = Basis.polynomial(d)
    classic = classic_infer(program, synthetic_name(l), basis, max_lp_rows=1).constraints
    new = sum(r.constraints for r in MatrixInference(prepare_program(program), basis).infer_all().values())
    assert classic > 10 * new

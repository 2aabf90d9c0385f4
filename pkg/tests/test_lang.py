import itertools
import json
import os
import textwrap
from fractions import Fraction

import numpy as np
import pytest

from lincost.const import ENV
from lincost.lang.errors import BaseTypeError, BudgetExceeded, LcSyntaxError, UnboundVariableError
from lincost.lang.evaluator import Evaluator, evaluate, evaluate_program, evaluate_with_cost
from lincost.lang.normalize import let_normalize, normalize_program
from lincost.lang.parser import parse, parse_program
from lincost.lang.pretty import ast_to_json, pretty_print
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, If, Let, Nil, Pair, Tick, Var,
                                 is_let_normal)
from lincost.lang.typecheck import typecheck
from lincost.lang.types import BOOL, FunT, ListT, PairT
from lincost.lang.values import from_python, to_python
from lincost.lang.wellformed import check_wf, type_of_value
from lincost.linmap import PMat
from lincost.potential import Basis

DATA = os.path.join(os.path.dirname(__file__), 'data')
L = ListT(BOOL)
LB = PairT(L, BOOL)
FREE = {'xs': L, 'ys': L, 'b': BOOL, 'pr': LB}
CASES = [30, pytest.param(300, marks=pytest.mark.integration)]


def load(name):
    with open(os.path.join(DATA, name), 'r') as f:
        return parse_program(f.read())


def test_normalize_nested_calls():
    e = parse('x :: dbl (round (half xs))', free=('x', 'xs', 'dbl', 'round', 'half'))
    n = let_normalize(e, free=('x', 'xs', 'dbl', 'round', 'half'))
    assert n == Let('%0', App(Var('half'), Var('xs')),
                    Let('%1', App(Var('round'), Var('%0')),
                        Let('%2', App(Var('dbl'), Var('%1')),
                            Cons(Var('x'), Var('%2')))))
    assert is_let_normal(n)


def test_normalize_renames_shadowing():
    src = 'let x = true in let x = false in x'
    n = let_normalize(parse(src))
    assert n.name != n.body.name
    assert n.body.body == Var(n.body.name)


def test_half_program_is_let_normal():
    program = normalize_program(load('half.lc'))
    assert program.names == ['half']
    assert is_let_normal(program.get('half').body)


@pytest.mark.parametrize(
    argnames='text, error',
    argvalues=[
        ('fun f x = ', LcSyntaxError),
        ('fun f x = case x of | [] -> x', LcSyntaxError),
        ('fun f x = y', UnboundVariableError),
        ('fun f x = x\nfun f y = y', LcSyntaxError),
    ]
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_program(text)


def test_syntax_error_position():
    with pytest.raises(LcSyntaxError) as info:
        parse_program('fun f x =\n  let = x in x')
    assert info.value.line == 2


@pytest.mark.parametrize(
    argnames='name',
    argvalues=['half.lc', 'round.lc']
)
def test_pretty_print_round_trip(name):
    program = load(name)
    assert parse_program(pretty_print(program)) == program


def test_ast_to_json_tags():
    dump = ast_to_json(normalize_program(load('half.lc')))
    assert dump['kind'] == 'Program'
    fun = dump['decls'][0]
    assert fun['kind'] == 'Fun'
    assert fun['self_name'] == 'half'
    assert fun['body']['kind'] == 'CaseList'
    assert fun['arg_type'] == 'bool list'


@pytest.mark.parametrize(
    argnames='arg, expected',
    argvalues=[
        ([], []),
        ([True], []),
        ([True, False, True, False, True], [True, True]),
        ([False, True, True, False], [False, True]),
    ]
)
def test_evaluate_half(arg, expected):
    result = evaluate_program(load('half.lc'), 'half', from_python(arg))
    assert to_python(result) == expected


def test_evaluate_round():
    program = load('round.lc')
    lengths = [len(to_python(evaluate_program(program, 'round', from_python([True] * n)))) for n in range(8)]
    assert lengths == [0, 1, 1, 3, 3, 3, 3, 7]


def test_tick_cost():
    program = parse_program(textwrap.dedent(
        """
        fun walk (xs : bool list) : bool list =
          case xs of
          | [] -> []
          | x :: t -> let () = tick 3/2 in x :: walk t
        """
    ))
    ev = Evaluator()
    result = evaluate_program(program, 'walk', from_python([True, True, False]), evaluator=ev)
    assert to_python(result) == [True, True, False]
    assert ev.net_cost == Fraction(9, 2)
    value, cost = evaluate_with_cost({}, parse('let () = tick 2 in let () = tick -1/2 in true'))
    assert to_python(value) is True
    assert cost == Fraction(3, 2)


def test_budget_exceeded():
    program = parse_program('fun loop (x : bool) : bool = loop x')
    with pytest.raises(BudgetExceeded):
        evaluate_program(program, 'loop', from_python(True), step_budget=1000)


def test_evaluate_pair_case():
    e = parse('case p of (a, b) -> if a then b else a', free=('p',))
    assert to_python(evaluate({'p': from_python((True, False))}, e)) is False


def test_typecheck_signatures():
    info = typecheck(normalize_program(load('round.lc')))
    for name in ('half', 'dbl', 'round'):
        assert info.signature(name) == FunT(ListT(BOOL), ListT(BOOL))


def test_typecheck_infers_pairs():
    program = normalize_program(parse_program(textwrap.dedent(
        """
        fun swap p = case p of (a, b) -> (b, a :: [])
        fun use (x : bool * bool) = swap x
        """
    )))
    ft = typecheck(program).signature('use')
    assert ft == FunT(PairT(BOOL, BOOL), PairT(BOOL, ListT(BOOL)))


def test_typecheck_mismatch():
    program = parse_program('fun f (x : bool list) : bool = x')
    with pytest.raises(BaseTypeError):
        typecheck(program)


@pytest.mark.parametrize(
    argnames='obj, t, expected',
    argvalues=[
        ([True, False], ListT(BOOL), True),
        ((True, [False]), PairT(BOOL, ListT(BOOL)), True),
        ([True], BOOL, False),
        ((True, True), PairT(BOOL, ListT(BOOL)), False),
    ]
)
def test_check_wf_first_order(obj, t, expected):
    assert check_wf(from_python(obj), t) is expected


def test_type_of_value():
    assert type_of_value(from_python([(True, False)])) == ListT(PairT(BOOL, BOOL))
    with pytest.raises(ValueError):
        type_of_value(from_python([True, [False]]))


def random_expr(rng, t, depth, scope, names):
    """A well-typed expression of type `t`; `half` is the only function in scope."""
    in_scope = [n for n, s in scope.items() if s == t]
    if depth == 0 or rng.integers(0, 4) == 0:
        if in_scope and rng.integers(0, 2):
            return Var(in_scope[int(rng.integers(0, len(in_scope)))])
        if t == BOOL:
            return Tick(Fraction(int(rng.integers(0, 3)))) if rng.integers(0, 3) == 0 \
                else BoolLit(bool(rng.integers(0, 2)))
        if t == L:
            return Nil()
        return Pair(random_expr(rng, L, 0, scope, names), random_expr(rng, BOOL, 0, scope, names))
    d = depth - 1
    choice = int(rng.integers(0, 6))
    if choice == 0:
        return If(random_expr(rng, BOOL, d, scope, names), random_expr(rng, t, d, scope, names),
                  random_expr(rng, t, d, scope, names))
    if choice == 1:
        name, s = next(names), (BOOL, L)[int(rng.integers(0, 2))]
        bound = random_expr(rng, s, d, scope, names)
        return Let(name, bound, random_expr(rng, t, d, dict(scope, **{name: s}), names))
    if choice == 2:
        h, tl = next(names), next(names)
        return CaseList(random_expr(rng, L, d, scope, names), random_expr(rng, t, d, scope, names), h, tl,
                        random_expr(rng, t, d, dict(scope, **{h: BOOL, tl: L}), names))
    if choice == 3:
        a, c = next(names), next(names)
        return CasePair(random_expr(rng, LB, d, scope, names), a, c,
                        random_expr(rng, t, d, dict(scope, **{a: L, c: BOOL}), names))
    if t == L:
        if choice == 4:
            return Cons(random_expr(rng, BOOL, d, scope, names), random_expr(rng, L, d, scope, names))
        return App(Var('half'), random_expr(rng, L, d, scope, names))
    if t == LB:
        return Pair(random_expr(rng, L, d, scope, names), random_expr(rng, BOOL, d, scope, names))
    return If(random_expr(rng, BOOL, d, scope, names), BoolLit(False), BoolLit(True))


def random_exprs(cases):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    for _ in range(cases):
        t = (BOOL, L, LB)[int(rng.integers(0, 3))]
        names = ('v%d' % i for i in itertools.count())
        yield rng, random_expr(rng, t, 4, dict(FREE), names)


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_pretty_print_round_trip_generated(cases):
    for _, e in random_exprs(cases):
        assert parse(pretty_print(e), free=tuple(FREE) + ('half',)) == e


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_normalization_preserves_evaluation(cases):
    ev = Evaluator()
    ev.bind_program(load('half.lc'))
    free = tuple(FREE) + ('half',)
    for rng, e in random_exprs(cases):
        n = let_normalize(e, free=free)
        assert is_let_normal(n)
        for _ in range(3):
            xs, ys = ([bool(v) for v in rng.integers(0, 2, size=int(rng.integers(0, 7)))] for _ in range(2))
            env = {'xs': from_python(xs), 'ys': from_python(ys), 'b': from_python(bool(rng.integers(0, 2))),
                   'pr': from_python((ys, True)), 'half': ev.globals['half']}
            value, cost = evaluate_with_cost(env, e)
            normal_value, normal_cost = evaluate_with_cost(env, n)
            assert to_python(normal_value) == to_python(value)
            assert normal_cost == cost


def half_matrix(bump=None):
    with open(os.path.join(DATA, 'half_poly2.json'), 'r') as f:
        doc = json.load(f)
    if bump is not None:
        doc['entries'] = [e for e in doc['entries'] if (e[0], e[1]) != bump[:2]] + [list(bump)]
    return PMat.from_json(doc)


def test_check_wf_closure_of_half():
    ev = Evaluator()
    ev.bind_program(load('half.lc'))
    closure = ev.globals['half']
    ft = FunT(L, L, 'half')
    poly2 = Basis.polynomial(2)
    assert check_wf(closure, ft, {'half': half_matrix()}, poly2)
    assert not check_wf(closure, ft, {'half': half_matrix(('r.deg2', 'a.deg2', '5'))}, poly2)
    assert not check_wf(closure, ft, {}, poly2)
    assert not check_wf(from_python([True]), ft, {'half': half_matrix()}, poly2)

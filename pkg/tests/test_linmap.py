import json
import os
from fractions import Fraction

import numpy as np
import pytest

from lincost.const import ENV
from lincost.lang.types import BOOL, ListT
from lincost.lang.values import from_python
from lincost.linmap import (HAVOC, HavocOnLeft, NonlinearTerm, PMat, add, identity, leq_constraints, move,
                            mul, nil, proj, proj_neg, shift, unshift, zero_reallocation)
from lincost.lp import LinExpr
from lincost.mapinfer import symbolic_matrix
from lincost.potential import CONST_INDEX, AnnVec, Basis, Index, potential

DATA = os.path.join(os.path.dirname(__file__), 'data')
POLY2 = Basis.polynomial(2)
L = ListT(BOOL)
CASES = [50, pytest.param(1000, marks=pytest.mark.integration)]
UNIVERSE = [Index.parse(s) for s in ('x.deg2', 'x.deg1', 'y.deg2', 'y.deg1', 'c')]


def ix(text):
    return Index.parse(text)


@pytest.fixture
def m_half():
    with open(os.path.join(DATA, 'half_poly2.json'), 'r') as f:
        return PMat.from_json(json.load(f))


@pytest.mark.parametrize(
    argnames='arg, expected',
    argvalues=[
        ({'a.deg2': 1, 'a.deg1': 2, 'c': 1}, {'r.deg2': 4, 'r.deg1': 5, 'c': 1}),
        ({'a.deg1': 2, 'c': 1}, {'r.deg1': 4, 'c': 1}),
    ]
)
def test_apply_half_matrix(m_half, arg, expected):
    assert m_half.apply(AnnVec.parse(arg)) == AnnVec.parse(expected)


def test_json_round_trip(m_half):
    rows = [ix('r.deg2'), ix('r.deg1'), CONST_INDEX]
    cols = [ix('a.deg2'), ix('a.deg1'), CONST_INDEX]
    assert PMat.from_json(m_half.to_json(rows, cols)) == m_half
    assert m_half.dense(rows, cols) == [[4, 0, 0], [1, 2, 0], [0, 0, 1]]


def test_from_json_rejects_symbolic():
    doc = {'rows': ['c'], 'cols': ['c'], 'entries': [['c', 'c', {'f[c,c]': '1'}]]}
    with pytest.raises(ValueError):
        PMat.from_json(doc)
    with pytest.raises(ValueError):
        PMat.from_json({'rows': ['c']})


def test_shift_then_unshift():
    p = AnnVec.parse({'x.deg2': 1, 'c': 0})
    tail = shift('x', 't', POLY2).apply(p)
    assert tail == AnnVec.parse({'t.deg2': 1, 't.deg1': 1})
    assert unshift('t', 'x', POLY2).apply(tail) == p


def test_unshift_values():
    tail = AnnVec.parse({'t.deg2': 4, 't.deg1': 5, 'c': 1})
    assert unshift('t', 'r', POLY2).apply(tail) == AnnVec.parse({'r.deg2': 4, 'r.deg1': 1})


def test_shift_exponential():
    basis = Basis.exponential(3)
    p = AnnVec.parse({'x.base3': 1, 'x.base2': 1})
    assert shift('x', 't', basis).apply(p) == AnnVec.parse({'t.base3': 3, 't.base2': 3, 'c': 1})


def test_nil_havoc():
    over = [ix('x.deg2'), ix('x.deg1'), ix('y.deg1')]
    out = nil('x', POLY2, over).apply(AnnVec.parse({'y.deg1': 2, 'c': 1}))
    assert out[ix('x.deg2')] is HAVOC
    assert out[ix('y.deg1')] == 2
    assert out[CONST_INDEX] == 1


def test_move_and_projections():
    over = [ix('x.deg1'), ix('y.deg1')]
    p = AnnVec.parse({'x.deg1': 3, 'y.deg1': 2, 'c': 1})
    assert move('x', 'r', [Index((), 'deg', 1)]).apply(p) == AnnVec.parse({'r.deg1': 3, 'y.deg1': 2, 'c': 1})
    assert proj({'x'}, over).apply(p) == AnnVec.parse({'x.deg1': 3})
    assert proj_neg({'x'}, over).apply(p) == AnnVec.parse({'y.deg1': 2, 'c': 1})
    assert identity().apply(p) == p
    assert zero_reallocation().apply(AnnVec.parse({'c': 2})) == AnnVec.parse({'c': 2})


def test_compose_order():
    # shift first, then move the tail into the result
    m = move('t', 'r', POLY2.leaves()) @ shift('x', 't', POLY2)
    out = m.apply(AnnVec.parse({'x.deg2': 2}))
    assert out == AnnVec.parse({'r.deg2': 2, 'r.deg1': 2})


def test_compose_symbolic_by_constant():
    f = symbolic_matrix('f', L, L, POLY2)
    m = f @ move('x', 'a', POLY2.leaves())
    assert not m.is_concrete
    assert len(list(m.unknowns())) == 6


def test_compose_symbolic_nonlinear():
    f = symbolic_matrix('f', L, L, POLY2)
    with pytest.raises(NonlinearTerm):
        f @ move('r', 'a', POLY2.leaves()) @ f


def test_leq_constraints(m_half):
    rows = [ix('r.deg2'), ix('r.deg1'), CONST_INDEX]
    cols = [ix('a.deg2'), ix('a.deg1'), CONST_INDEX]
    ineqs = leq_constraints(m_half, m_half, rows, cols)
    assert len(ineqs) == 9
    assert all(q.holds() for q in ineqs)
    bigger = PMat.from_entries({(ix('r.deg2'), ix('a.deg2')): Fraction(5)}, set(rows) | set(cols))
    failing = [q for q in leq_constraints(bigger, m_half, rows, cols) if not q.holds()]
    assert [(str(q.row), str(q.col)) for q in failing] == [('r.deg2', 'a.deg2')]


def test_havoc_filtering():
    over = [ix('x.deg2'), ix('x.deg1')]
    h = nil('x', POLY2, over)
    rows = [ix('x.deg2'), CONST_INDEX]
    cols = [CONST_INDEX]
    assert [str(q.row) for q in leq_constraints(identity(), h, rows, cols)] == ['c']
    with pytest.raises(HavocOnLeft):
        leq_constraints(h, identity(), rows, cols)


def random_pmat(rng):
    support = [j for j in UNIVERSE if rng.integers(0, 3)]
    entries = {(i, j): int(rng.integers(-3, 4)) for j in support for i in UNIVERSE if rng.integers(0, 2)}
    return PMat.from_entries(entries, support)


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_identity_extension_coherence(cases):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    outside = ix('z.deg1')
    for _ in range(cases):
        a, b, c = random_pmat(rng), random_pmat(rng), random_pmat(rng)
        p = AnnVec({i: int(rng.integers(-4, 5)) for i in UNIVERSE + [outside]})
        assert (a @ b).apply(p) == a.apply(b.apply(p))
        assert (a @ b) @ c == a @ (b @ c)
        assert a.apply(AnnVec({outside: 3})) == AnnVec({outside: 3})
        entries = {(i, j): s for i, j, s in a.entries()}
        entries[(outside, outside)] = 1
        extended = PMat.from_entries(entries, a.support | {outside})
        assert extended == a
        assert extended.apply(p) == a.apply(p)


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_havoc_laws(cases):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    for _ in range(cases):
        x = Fraction(int(rng.integers(1, 6)) * (1 if rng.integers(0, 2) else -1), int(rng.integers(1, 4)))
        assert add(HAVOC, x) is HAVOC
        assert add(x, HAVOC) is HAVOC
        assert mul(HAVOC, x) is HAVOC
        assert mul(x, HAVOC) is HAVOC
        assert mul(HAVOC, Fraction(0)) == 0
        assert mul(Fraction(0), HAVOC) == 0
    assert add(HAVOC, HAVOC) is HAVOC
    assert add(LinExpr.var('u'), HAVOC) is HAVOC


@pytest.mark.parametrize(
    argnames='basis',
    argvalues=[Basis.polynomial(1), POLY2, Basis.polynomial(6), Basis.exponential(2), Basis.exponential(6)]
)
def test_nil_conserves_potential(basis):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    over = [leaf.under(name) for name in ('x', 'y') for leaf in basis.leaves()]
    ctx = {'x': L, 'y': L}
    for _ in range(50):
        p = {i: int(rng.integers(0, 6)) for i in over}
        p[CONST_INDEX] = int(rng.integers(1, 6))
        p = AnnVec(p)
        out = nil('x', basis, over).apply(p)
        for leaf in basis.leaves():
            assert out[leaf.under('x')] is HAVOC
            assert out[leaf.under('y')] == p[leaf.under('y')]
        assert out[CONST_INDEX] == p[CONST_INDEX]
        choice = AnnVec({i: (int(rng.integers(0, 6)) if s is HAVOC else s) for i, s in out.items()})
        env = {'x': from_python([]), 'y': from_python([True] * int(rng.integers(0, 9)))}
        assert potential(env, ctx, choice, basis) == potential(env, ctx, p, basis)


def test_havoc_fixed_to_zero_when_spread():
    over = [ix('t.deg2'), ix('t.deg1')]
    h = nil('t', POLY2, over)
    singleton = unshift('t', 'r', POLY2) @ h
    assert all(s is not HAVOC for _, _, s in singleton.entries())
    assert singleton.entry(ix('r.deg1'), CONST_INDEX) == 0
    assert singleton.entry(CONST_INDEX, CONST_INDEX) == 1


def test_havoc_kept_through_single_positive_entry():
    over = [ix('t.deg2'), ix('t.deg1')]
    h = nil('t', POLY2, over)
    moved = move('t', 'r', POLY2.leaves()) @ h
    assert moved.entry(ix('r.deg1'), CONST_INDEX) is HAVOC
    assert moved.entry(ix('r.deg2'), CONST_INDEX) is HAVOC
    negated = PMat.from_entries({(ix('r.deg1'), ix('t.deg1')): -1}, {ix('t.deg1'), ix('r.deg1')}) @ h
    assert negated.entry(ix('r.deg1'), CONST_INDEX) == 0
    assert negated.entry(ix('t.deg2'), CONST_INDEX) is HAVOC


def test_from_entries_coerces_numbers():
    m = PMat.from_entries({(CONST_INDEX, CONST_INDEX): 2})
    assert isinstance(m.entry(CONST_INDEX, CONST_INDEX), Fraction)
    assert (m @ m).entry(CONST_INDEX, CONST_INDEX) == 4
    assert m.apply(AnnVec.parse({'c': 1})) == AnnVec.parse({'c': 2})
    scaled = PMat.from_entries({(ix('a.deg1'), ix('a.deg1')): 2, (ix('a.deg2'), ix('a.deg2')): 3})
    f = symbolic_matrix('f', L, L, POLY2)
    assert len((f @ scaled).unknowns()) == 6
    assert (f @ m).entry(CONST_INDEX, CONST_INDEX) == 2

from fractions import Fraction

import numpy as np
import pytest

from lincost.const import ENV
from lincost.lang.types import BOOL, ListT, PairT
from lincost.lang.values import from_python
from lincost.linmap import shift, unshift
from lincost.potential import (CONST_INDEX, AnnVec, Basis, Index, binom, context_indices, display_order,
                               indices, list_weight, potential, potential_of_value, shift_vector, stirling2)
from lincost.potential.potential import unshift_vector

L = ListT(BOOL)
CASES = [50, pytest.param(1000, marks=pytest.mark.integration)]


def random_basis(rng):
    if rng.integers(0, 2):
        return Basis.polynomial(int(rng.integers(1, 7)))
    return Basis.exponential(int(rng.integers(2, 7)))


def random_fraction(rng):
    return Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))


def random_list_annotation(rng, basis, name):
    p = {leaf.under(name): random_fraction(rng) for leaf in basis.leaves()}
    p[CONST_INDEX] = random_fraction(rng)
    return AnnVec(p)


@pytest.mark.parametrize(
    argnames='n, k, expected',
    argvalues=[(6, 2, 15), (3, 3, 1), (2, 3, 0), (5, 0, 1), (-1, 0, 0)]
)
def test_binom(n, k, expected):
    assert binom(n, k) == expected


@pytest.mark.parametrize(
    argnames='n, k, expected',
    argvalues=[(4, 2, 7), (4, 4, 1), (5, 3, 25), (0, 0, 1), (3, 0, 0), (2, 3, 0)]
)
def test_stirling2(n, k, expected):
    assert stirling2(n, k) == expected


@pytest.mark.parametrize(
    argnames='basis, entries, expected',
    argvalues=[
        (Basis.polynomial(3), {'x.deg3': 3, 'x.deg2': 1, 'x.deg1': 4, 'c': 5}, 23),
        (Basis.exponential(4), {'x.base4': 2, 'x.base3': 0, 'x.base2': 6, 'c': 7}, 51),
    ]
)
def test_potential_of_length_three_list(basis, entries, expected):
    p = AnnVec.parse(entries)
    assert potential({'x': from_python([True, False, True])}, {'x': L}, p, basis) == expected


def test_potential_of_pair():
    basis = Basis.polynomial(2)
    p = AnnVec.parse({'p.1.deg1': 1, 'p.2.deg2': 2})
    v = from_python(([True, True], [False, False, False]))
    assert potential_of_value(v, PairT(L, L), p, basis, ('p',)) == 2 + 2 * 3


def test_index_round_trip():
    for text in ('x.deg2', 'p.1.base3', 'c'):
        assert str(Index.parse(text)) == text
    with pytest.raises(ValueError):
        Index.parse('x.power2')


def test_index_degree():
    assert Index.parse('a.deg3').degree == 3
    assert Index.parse('a.base3').degree == 2
    assert CONST_INDEX.degree == 0


def test_display_order():
    ixs = [Index.parse(s) for s in ('c', 'y.deg1', 'x.deg1', 'x.deg2', 'y.deg2')]
    assert [str(i) for i in display_order(ixs, ['y', 'x'])] == ['y.deg2', 'y.deg1', 'x.deg2', 'x.deg1', 'c']


def test_indices_of_types():
    basis = Basis.exponential(3)
    assert [str(i) for i in indices(L, basis)] == ['base3', 'base2']
    assert indices(BOOL, basis) == ()
    pair = [str(i) for i in indices(PairT(L, BOOL), basis)]
    assert pair == ['1.base3', '1.base2']
    assert [str(i) for i in context_indices({'x': L}, basis)] == ['x.base3', 'x.base2', 'c']


def test_basis():
    poly = Basis.from_name('poly', 3)
    assert poly.length == 3
    assert poly.reduced() == Basis.polynomial(2)
    exp = Basis.from_name('exp', base=4)
    assert exp.length == 3
    assert [leaf.n for leaf in exp.leaves()] == [4, 3, 2]
    with pytest.raises(ValueError):
        Basis.exponential(1)
    with pytest.raises(ValueError):
        Basis.from_name('log')


@pytest.mark.parametrize(
    argnames='basis, coeffs',
    argvalues=[
        (Basis.polynomial(3), {3: 1, 2: 0, 1: 2}),
        (Basis.exponential(4), {4: 2, 3: 1, 2: 3}),
    ]
)
def test_shift_vector_matches_potential(basis, coeffs):
    tail, gain = shift_vector({n: Fraction(v) for n, v in coeffs.items()}, basis)
    for n in range(1, 8):
        whole = sum(c * list_weight(n, Index((), basis.leaf_kind, k)) for k, c in coeffs.items())
        rest = sum(c * list_weight(n - 1, Index((), basis.leaf_kind, k)) for k, c in tail.items())
        assert whole == rest + gain
    back, cost = unshift_vector(tail, basis)
    assert back == coeffs
    assert cost == gain


def test_annvec_algebra():
    p = AnnVec.parse({'x.deg1': '1/2', 'c': 1})
    q = AnnVec.parse({'x.deg1': '1/2'})
    assert (p + q)[Index.parse('x.deg1')] == 1
    assert (p - p) == AnnVec()
    assert 2 * q == AnnVec.parse({'x.deg1': 1})
    assert p.to_json() == {'x.deg1': '1/2', 'c': '1'}
    assert p.renamed('x', 'y') == AnnVec.parse({'y.deg1': '1/2', 'c': 1})


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_shift_conserves_potential(cases):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    for _ in range(cases):
        basis = random_basis(rng)
        p = random_list_annotation(rng, basis, 'x')
        n = int(rng.integers(1, 16))
        before = potential({'x': from_python([True] * n)}, {'x': L}, p, basis)
        moved = shift('x', 't', basis).apply(p)
        assert potential({'t': from_python([True] * (n - 1))}, {'t': L}, moved, basis) == before

        coeffs = {leaf.n: p[leaf.under('x')] for leaf in basis.leaves()}
        tail, gain = shift_vector(coeffs, basis)
        back, cost = unshift_vector(tail, basis)
        assert back == coeffs
        assert cost == gain


@pytest.mark.parametrize(
    argnames='cases',
    argvalues=CASES
)
def test_unshift_inverts_shift(cases):
    rng = np.random.default_rng(ENV.LINCOST_SEED.val)
    for _ in range(cases):
        basis = random_basis(rng)
        p = random_list_annotation(rng, basis, 'x')
        assert (unshift('t', 'x', basis) @ shift('x', 't', basis)).apply(p) == p
        assert unshift('t', 'x', basis).apply(shift('x', 't', basis).apply(p)) == p


def test_pascal():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_stirling_recurrence():
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@pytest.mark.parametrize(
    argnames='m',
    argvalues=list(range(11))
)
def test_halving_identity_base2(m):
    # base 2 on a list of length 2m equals bases 4, 3 and 2 on its half, weighted 6, 6 and 3
    assert stirling2(2 * m + 1, 2) == \
        6 * stirling2(m + 1, 4) + 6 * stirling2(m + 1, 3) + 3 * stirling2(m + 1, 2)

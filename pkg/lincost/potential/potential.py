# Copyright 2026 The LinCost Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""The potential function."""

from fractions import Fraction
from typing import Mapping, Tuple

from lincost.lang.types import ListT, PairT, Type
from lincost.lang.values import Value, VPair, list_length
from lincost.potential.basis import Basis
from lincost.potential.combinatorics import binom, stirling2
from lincost.potential.index import CONST_INDEX, Index


def list_weight(length: int, leaf: Index) -> int:
    """Basis function of one list slot at a given length."""
    if leaf.kind == 'deg':
        return binom(length, leaf.n)
    return stirling2(length + 1, leaf.n)


def potential_of_value(v: Value, t: Type, p: Mapping[Index, Fraction], basis: Basis,
                       path: Tuple[str, ...] = ()) -> Fraction:
    """Potential stored in one value of type `t` whose slots live below `path`."""
    if isinstance(t, ListT):
        n = list_length(v)
        return sum((p.get(leaf.under(*path), 0) * list_weight(n, leaf) for leaf in basis.leaves()),
                   Fraction(0))
    if isinstance(t, PairT):
        if not isinstance(v, VPair):
            raise ValueError('Value %s is not a pair' % (v,))
        return potential_of_value(v.fst, t.fst, p, basis, path + ('1',)) + \
            potential_of_value(v.snd, t.snd, p, basis, path + ('2',))
    return Fraction(0)


def potential(env: Mapping[str, Value], ctx: Mapping[str, Type], p: Mapping[Index, Fraction],
              basis: Basis) -> Fraction:
    """
    Potential of an environment under an annotation of its typing context.

    Args:
        env (Mapping): values of the context's variables.
        ctx (Mapping): their types.
        p (Mapping): annotation indexed by `context_indices(ctx)`; missing slots are zero.
        basis (Basis): binomial or Stirling basis.

    Returns:
        Fraction: ``p_c`` plus the potential of every variable; may be negative.
    """
    total = Fraction(p.get(CONST_INDEX, 0))
    for name, t in ctx.items():
        total += potential_of_value(env[name], t, p, basis, (name,))
    return total


def shift_vector(coeffs: Mapping[int, object], basis: Basis):
    """
    Annotation of the tail of a list from the annotation of the list.

    `coeffs` maps each degree (or base) of `basis` to a coefficient; any
    values closed under ``+`` and scalar ``*`` work, LP forms included.

    Returns:
        (Dict, object): tail coefficients and the constant potential set free
        by the removed cell.
    """
    leaves = [leaf.n for leaf in reversed(basis.leaves())]
    tail = {}
    for n in leaves:
        scale = 1 if basis.is_polynomial else n
        tail[n] = coeffs.get(n, 0) * scale + coeffs.get(n + 1, 0)
    return tail, coeffs.get(basis.lowest, 0)


def unshift_vector(tail: Mapping[int, Fraction], basis: Basis):
    """
    Inverse of `shift_vector`.

    Returns:
        (Dict, Fraction): list coefficients and the constant potential a cons
        cell must pay to turn `tail` into them.
    """
    coeffs = {}
    above = Fraction(0)
    for leaf in basis.leaves():
        scale = 1 if basis.is_polynomial else leaf.n
        coeffs[leaf.n] = (Fraction(tail.get(leaf.n, 0)) - above) / scale
        above = coeffs[leaf.n]
    return coeffs, coeffs[basis.lowest]

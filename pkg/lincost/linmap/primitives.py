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

"""
Primitive potential maps.

Names are variable names (or the reserved ``a`` / ``r``); `rel` arguments are
path-relative index sets as returned by `lincost.potential.indices`.
Primitives that must act on "every other index" (nil, projections) take the
index universe `over` of the analyzed function explicitly, since a `PMat` is
the identity outside its support.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Collection, Dict, Iterable, Sequence, Tuple, Union

from lincost.linmap.pmat import PMat
from lincost.linmap.scalar import HAVOC, ONE, ZERO
from lincost.potential.basis import Basis
from lincost.potential.index import CONST_INDEX, Index

Path = Union[str, Sequence[str]]


def identity() -> PMat:
    """The identity map."""
    return PMat.identity()


def zero_reallocation() -> PMat:
    """Function matrix keeping only the constant potential; always sound."""
    return PMat({CONST_INDEX: {CONST_INDEX: ONE}})


def _path(p: Path) -> Tuple[str, ...]:
    return (p,) if isinstance(p, str) else tuple(p)


def move(src: Path, dst: Path, rel: Iterable[Index]) -> PMat:
    """
    Transfer the potential of `src` to `dst`, leaving `src` empty.

    Either end may be a path such as ``('r', '1')`` for a pair component.
    """
    cols = {}
    for leaf in rel:
        s, d = leaf.under(*_path(src)), leaf.under(*_path(dst))
        if s == d:
            continue
        cols[s] = {d: ONE}
        cols[d] = {d: ONE}
    return PMat(cols)


def _leaf_range(basis: Basis):
    return range(basis.lowest, basis.bound + 1)


def shift(x: str, y: str, basis: Basis) -> PMat:
    """
    Potential of ``h :: y`` stored on `x` moved to the tail `y` and the constant.

    Polynomial: ``y.deg k += x.deg k + x.deg(k+1)``, ``c += x.deg1``.
    Exponential: ``y.base b += b·x.base b + x.base(b+1)``, ``c += x.base2``.
    """
    kind, low = basis.leaf_kind, basis.lowest
    cols: Dict[Index, Dict[Index, Fraction]] = {}
    for k in _leaf_range(basis):
        col = {Index((y,), kind, k): Fraction(k if kind == 'base' else 1)}
        if k > low:
            col[Index((y,), kind, k - 1)] = ONE
        else:
            col[CONST_INDEX] = ONE
        cols[Index((x,), kind, k)] = col
        cols[Index((y,), kind, k)] = {Index((y,), kind, k): ONE}
    cols[CONST_INDEX] = {CONST_INDEX: ONE}
    return PMat(cols)


@lru_cache(maxsize=None)
def unshift_coefficients(basis: Basis) -> Tuple[Dict[int, Dict[int, Fraction]], Dict[int, Fraction]]:
    """
    Closed-form inverse of the shift relation.

    Solving ``q_k = w_k·p_k + p_{k+1}`` (``w_k`` = 1 for degrees, k for bases)
    from the top down gives ``p_k = (q_k - p_{k+1}) / w_k``. Returns the
    coefficient of ``q_j`` in every ``p_k`` and in the constant correction
    ``-p_low``.
    """
    top, low = basis.bound, basis.lowest
    weight = (lambda k: Fraction(1)) if basis.is_polynomial else (lambda k: Fraction(k))  # noqa: E731
    p: Dict[int, Dict[int, Fraction]] = {}
    for k in range(top, low - 1, -1):
        row = {j: -c for j, c in p.get(k + 1, {}).items()}
        row[k] = row.get(k, ZERO) + ONE
        p[k] = {j: c / weight(k) for j, c in row.items() if c}
    const = {j: -c for j, c in p[low].items()}
    return p, const


def unshift(t: str, r: str, basis: Basis) -> PMat:
    """Potential of the tail `t` moved onto the list ``h :: t`` named `r`; inverse of `shift`."""
    kind = basis.leaf_kind
    p, const = unshift_coefficients(basis)
    cols: Dict[Index, Dict[Index, Fraction]] = {}
    for j in _leaf_range(basis):
        col = {Index((r,), kind, k): c for k, row in p.items() for jj, c in row.items() if jj == j}
        if const.get(j):
            col[CONST_INDEX] = const[j]
        cols[Index((t,), kind, j)] = col
        cols[Index((r,), kind, j)] = {Index((r,), kind, j): ONE}
    cols[CONST_INDEX] = {CONST_INDEX: ONE}
    return PMat(cols)


def _universe(over: Iterable[Index]):
    out = set(over)
    out.add(CONST_INDEX)
    return out


def nil(x: str, basis: Basis, over: Iterable[Index]) -> PMat:
    """Havoc on every list slot of `x`; identity elsewhere in `over`."""
    targets = [leaf.under(x) for leaf in basis.leaves()]
    havoc_rows = {ix: HAVOC for ix in targets}
    cols = {}
    for j in _universe(over) | set(targets):
        col = dict(havoc_rows)
        if j not in havoc_rows:
            col[j] = ONE
        cols[j] = col
    return PMat(cols)


def proj(names: Collection[str], over: Iterable[Index]) -> PMat:
    """Keep the slots owned by `names` (``c`` names the constant); zero the rest of `over`."""
    names = set(names)
    return PMat({j: ({j: ONE} if j.owner in names else {}) for j in _universe(over)})


def proj_neg(names: Collection[str], over: Iterable[Index]) -> PMat:
    """Zero the slots owned by `names`; keep the rest of `over`."""
    names = set(names)
    return PMat({j: ({} if j.owner in names else {j: ONE}) for j in _universe(over)})


def zero(names: Collection[str], over: Iterable[Index]) -> PMat:
    """Drop the potential of `names`."""
    return proj_neg(names, over)


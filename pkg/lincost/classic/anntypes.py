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
Annotated types of the classic system.

A list type carries one annotation per degree (or base) of the basis it was
created under, highest first. Annotations are LP forms while constraints are
generated and constants once a solution is substituted.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple, Union

from lincost.lang.errors import LinCostError
from lincost.lang.types import FunT, ListT, PairT, Type
from lincost.lang.values import Value, VPair, iter_list
from lincost.lp import LinExpr
from lincost.potential import Basis, Index, list_weight
from lincost.utils.fractions import format_fraction


class ClassicUnsupported(LinCostError):
    """A construct the classic system does not type, e.g. a local function or a function-typed value."""


@dataclass(frozen=True)
class ABase:
    """Booleans and the abstract element type: no potential."""

    base: Type

    def __str__(self):
        return str(self.base)


@dataclass(frozen=True)
class AList:
    """``L^{anns}(elem)``; `degrees[i]` is the degree (or base) annotated by `anns[i]`."""

    elem: 'AnnType'
    degrees: Tuple[int, ...]
    anns: Tuple[LinExpr, ...]

    @property
    def coeffs(self) -> Dict[int, LinExpr]:
        """Annotations keyed by degree or base."""
        return dict(zip(self.degrees, self.anns))

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """Annotations of a solved type, highest first."""
        if not all(a.is_constant for a in self.anns):
            raise ValueError('Annotated type is still symbolic')
        return tuple(a.constant for a in self.anns)

    def __str__(self):
        anns = ','.join(format_fraction(a.constant) if a.is_constant else repr(a) for a in self.anns)
        elem = '(%s)' % self.elem if isinstance(self.elem, APair) else str(self.elem)
        return '%s list^{%s}' % (elem, anns)


@dataclass(frozen=True)
class APair:
    """Pairs."""

    fst: 'AnnType'
    snd: 'AnnType'

    def __str__(self):
        return '(%s * %s)' % (self.fst, self.snd)


AnnType = Union[ABase, AList, APair]


def _show(e: LinExpr) -> str:
    return format_fraction(e.constant) if e.is_constant else repr(e)


@dataclass(frozen=True)
class AFun:
    """A resource-annotated function type ``<arg, arg_const> -> <ret, ret_const>``."""

    arg: AnnType
    arg_const: LinExpr
    ret: AnnType
    ret_const: LinExpr

    def __str__(self):
        return '<%s, %s> -> <%s, %s>' % (self.arg, _show(self.arg_const), self.ret, _show(self.ret_const))


def annotate(t: Type, basis: Basis, fresh: Callable[[], LinExpr]) -> AnnType:
    """
    Annotated type of base type `t` with fresh annotations.

    Raises:
        ClassicUnsupported: `t` contains a function type.
    """
    if isinstance(t, ListT):
        elem = annotate(t.elem, basis, fresh)
        degrees = tuple(leaf.n for leaf in basis.leaves())
        return AList(elem, degrees, tuple(fresh() for _ in degrees))
    if isinstance(t, PairT):
        return APair(annotate(t.fst, basis, fresh), annotate(t.snd, basis, fresh))
    if isinstance(t, FunT):
        raise ClassicUnsupported('Function-typed data is not supported: %s' % t)
    return ABase(t)


def fresh_like(t: AnnType, fresh: Callable[[], LinExpr]) -> AnnType:
    """Same shape as `t`, fresh annotations."""
    if isinstance(t, AList):
        return AList(fresh_like(t.elem, fresh), t.degrees, tuple(fresh() for _ in t.degrees))
    if isinstance(t, APair):
        return APair(fresh_like(t.fst, fresh), fresh_like(t.snd, fresh))
    return t


def map_annotations(t: AnnType, fn: Callable[[LinExpr], LinExpr]) -> AnnType:
    """Apply `fn` to every annotation."""
    if isinstance(t, AList):
        return AList(map_annotations(t.elem, fn), t.degrees, tuple(fn(a) for a in t.anns))
    if isinstance(t, APair):
        return APair(map_annotations(t.fst, fn), map_annotations(t.snd, fn))
    return t


def zeroed(t: AnnType) -> AnnType:
    """Same shape, all annotations zero."""
    return map_annotations(t, lambda _: LinExpr())


def substitute(t: AnnType, assignment: Mapping) -> AnnType:
    """Replace LP variables by their solved values."""
    return map_annotations(t, lambda a: a.substitute(assignment))


def add(left: AnnType, right: AnnType) -> AnnType:
    """
    Pointwise sum, aligned by degree; `right` may come from a smaller basis.

    The result has the shape of `left`.
    """
    if isinstance(left, AList):
        right_coeffs = right.coeffs
        anns = tuple(a + right_coeffs.get(n, 0) for n, a in zip(left.degrees, left.anns))
        return AList(add(left.elem, right.elem), left.degrees, anns)
    if isinstance(left, APair):
        return APair(add(left.fst, right.fst), add(left.snd, right.snd))
    return left


def pairs(left: AnnType, right: AnnType):
    """
    Yield ``(l, r)`` for every annotation position of `left`, aligned by degree.

    Degrees `right` does not track pair with zero; degrees only `right`
    tracks are not visited.
    """
    if isinstance(left, AList):
        right_coeffs = right.coeffs
        for n, a in zip(left.degrees, left.anns):
            yield a, right_coeffs.get(n, LinExpr())
        yield from pairs(left.elem, right.elem)
    elif isinstance(left, APair):
        yield from pairs(left.fst, right.fst)
        yield from pairs(left.snd, right.snd)


def list_annotations(t: AnnType):
    """Every annotation of `t`, outermost lists first."""
    if isinstance(t, AList):
        yield from zip(t.degrees, t.anns)
        yield from list_annotations(t.elem)
    elif isinstance(t, APair):
        yield from list_annotations(t.fst)
        yield from list_annotations(t.snd)


def annotated_potential(v: Value, t: AnnType, basis: Basis) -> Fraction:
    """Potential of a value under a solved annotated type."""
    if isinstance(t, AList):
        elems = list(iter_list(v))
        leaves = {leaf.n: leaf for leaf in basis.leaves()}
        total = Fraction(0)
        for n, a in zip(t.degrees, t.anns):
            leaf = leaves.get(n, Index((), basis.leaf_kind, n))
            total += a.constant * list_weight(len(elems), leaf)
        return total + sum((annotated_potential(x, t.elem, basis) for x in elems), Fraction(0))
    if isinstance(t, APair):
        if not isinstance(v, VPair):
            raise ValueError('Not a pair value: %s' % (v,))
        return annotated_potential(v.fst, t.fst, basis) + annotated_potential(v.snd, t.snd, basis)
    return Fraction(0)


def reshape(t: AnnType, degrees: Tuple[int, ...]) -> AnnType:
    """Re-index every list of `t` to `degrees`; untracked degrees are dropped, new ones are zero."""
    if isinstance(t, AList):
        coeffs = t.coeffs
        return AList(reshape(t.elem, degrees), degrees, tuple(coeffs.get(n, LinExpr()) for n in degrees))
    if isinstance(t, APair):
        return APair(reshape(t.fst, degrees), reshape(t.snd, degrees))
    return t

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
Matrix entries: exact rationals, the havoc marker, and affine forms over LP unknowns.

Affine entries reuse `lincost.lp.LinExpr`; an entry is affine only while it
mentions at least one unknown, otherwise it is normalized to a `Fraction`.
"""

from fractions import Fraction
from typing import NamedTuple, Union

from lincost.lang.errors import LinCostError
from lincost.lp.problem import LinExpr
from lincost.potential.index import Index

ZERO = Fraction(0)
ONE = Fraction(1)

Affine = LinExpr


class NonlinearTerm(LinCostError):
    """A product of two unknown-bearing entries."""

    def __init__(self, left, right):
        super().__init__('Nonlinear term: (%r) * (%r)' % (left, right))
        self.left = left
        self.right = right


class SymbolicEntryError(LinCostError):
    """A concrete matrix was required but an entry mentions unknowns."""


class HavocOnLeft(LinCostError):
    """An inequality ``* <= x`` with a non-havoc right side: unsatisfiable as stated."""

    def __init__(self, row, col):
        super().__init__('Havoc entry on the smaller side at (%s, %s)' % (row, col))
        self.row = row
        self.col = col


class _Havoc:
    """Arbitrary-choice marker. A singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return '*'

    def __reduce__(self):
        return (_Havoc, ())


HAVOC = _Havoc()


class UnknownId(NamedTuple):
    """The LP unknown standing for entry (`row`, `col`) of the matrix of `function`."""

    function: str
    row: Index
    col: Index

    def __str__(self):
        return 'm_%s_%s_%s' % (self.function, self.row, self.col)


Scalar = Union[Fraction, _Havoc, LinExpr]


def is_zero(s: Scalar) -> bool:
    """Exact zero test; havoc and affine entries are never zero."""
    return isinstance(s, Fraction) and not s


def is_constant(s: Scalar) -> bool:
    """Whether `s` is a rational."""
    return isinstance(s, Fraction)


def _norm(e: LinExpr) -> Scalar:
    return e.constant if e.is_constant else e


def add(a: Scalar, b: Scalar) -> Scalar:
    """Sum; havoc absorbs everything."""
    if a is HAVOC or b is HAVOC:
        return HAVOC
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return _norm(a + b) if isinstance(a, LinExpr) else _norm(b + a)


def mul(a: Scalar, b: Scalar) -> Scalar:
    """
    Product; ``0 * x = 0`` for every x, havoc absorbs nonzero factors.

    Raises:
        NonlinearTerm: both factors mention unknowns.
    """
    if is_zero(a) or is_zero(b):
        return ZERO
    if a is HAVOC or b is HAVOC:
        return HAVOC
    if isinstance(a, Fraction):
        return a * b if isinstance(b, Fraction) else _norm(b * a)
    if isinstance(b, Fraction):
        return _norm(a * b)
    raise NonlinearTerm(a, b)


def render(s: Scalar):
    """JSON rendering: ``"p/q"``, ``"*"`` or ``{"aff": {...}}``."""
    if s is HAVOC:
        return '*'
    if isinstance(s, Fraction):
        return str(s)
    return {'aff': {'const': str(s.constant), 'coeffs': {str(k): str(v) for k, v in s.terms.items()}}}

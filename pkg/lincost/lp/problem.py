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

"""Linear expressions, constraints and problems over exact rationals."""

from enum import Enum
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, NamedTuple, Optional

from lincost.utils.fractions import format_fraction


def _scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError('LinExpr coefficients must be exact rationals, got %r' % (value,))


class LinExpr:
    """
    An affine form ``constant + Σ coef·var`` over exact rationals.

    Variables are arbitrary hashable ids. Zero coefficients are never stored,
    so two structurally equal forms compare equal.
    """

    __slots__ = ('_terms', '_const')

    def __init__(self, terms: Optional[Mapping[Hashable, object]] = None, constant=0):
        self._const = _scalar(constant)
        self._terms = {}
        for var, coef in (terms or {}).items():
            coef = _scalar(coef)
            if coef:
                self._terms[var] = coef

    @classmethod
    def var(cls, name: Hashable, coef=1) -> 'LinExpr':
        """A single-variable form."""
        return cls({name: coef})

    @classmethod
    def const(cls, value) -> 'LinExpr':
        """A constant form."""
        return cls(constant=value)

    @classmethod
    def sum(cls, exprs: Iterable['LinExpr']) -> 'LinExpr':
        """Sum many forms without building the intermediate results."""
        terms: Dict[Hashable, Fraction] = {}
        const = Fraction(0)
        for e in exprs:
            e = as_linexpr(e)
            const += e._const
            for v, c in e._terms.items():
                terms[v] = terms.get(v, 0) + c
        return cls(terms, const)

    @property
    def constant(self) -> Fraction:
        """Constant part."""
        return self._const

    @property
    def terms(self) -> Dict[Hashable, Fraction]:
        """Copy of the variable-to-coefficient map."""
        return dict(self._terms)

    def variables(self):
        """Variables with a nonzero coefficient, in insertion order."""
        return list(self._terms)

    @property
    def is_constant(self) -> bool:
        """Whether no variable occurs."""
        return not self._terms

    def evaluate(self, assignment: Mapping[Hashable, Fraction]) -> Fraction:
        """Value under a total assignment of the occurring variables."""
        return self._const + sum((c * assignment[v] for v, c in self._terms.items()), Fraction(0))

    def substitute(self, assignment: Mapping[Hashable, Fraction]) -> 'LinExpr':
        """Replace the assigned variables by their values."""
        const = self._const
        terms = {}
        for v, c in self._terms.items():
            if v in assignment:
                const += c * assignment[v]
            else:
                terms[v] = c
        return LinExpr(terms, const)

    def _combine(self, other, sign) -> 'LinExpr':
        other = as_linexpr(other)
        terms = dict(self._terms)
        for v, c in other._terms.items():
            terms[v] = terms.get(v, 0) + sign * c
        return LinExpr(terms, self._const + sign * other._const)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return as_linexpr(other)._combine(self, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, k):
        k = _scalar(k)
        return LinExpr({v: c * k for v, c in self._terms.items()}, self._const * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / _scalar(k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LinExpr.const(other)
        if not isinstance(other, LinExpr):
            return NotImplemented
        return self._const == other._const and self._terms == other._terms

    def __hash__(self):
        return hash((self._const, frozenset(self._terms.items())))

    def __repr__(self):
        parts = ['%s*%s' % (format_fraction(c), v) for v, c in self._terms.items()]
        if self._const or not parts:
            parts.append(format_fraction(self._const))
        return ' + '.join(parts)


def as_linexpr(value) -> LinExpr:
    """Lift a rational to a constant LinExpr; pass LinExprs through."""
    if isinstance(value, LinExpr):
        return value
    return LinExpr.const(value)


class Sense(Enum):
    """Relation of a constraint."""

    LE = '<='
    EQ = '='
    GE = '>='


class Constraint(NamedTuple):
    """``lhs (sense) rhs``."""

    lhs: LinExpr
    sense: Sense
    rhs: LinExpr
    name: Optional[str] = None

    @classmethod
    def bound(cls, var) -> 'Constraint':
        """The non-negativity bound of `var` as a constraint."""
        return cls(LinExpr.var(var), Sense.GE, LinExpr(), 'bound_%s' % (var,))

    def normalized(self):
        """
        Move everything to the left.

        Returns:
            (Dict, Sense, Fraction): terms, sense and bound of ``Σ terms (sense) bound``.
        """
        diff = self.lhs - self.rhs
        return diff.terms, self.sense, -diff.constant

    def holds(self, assignment: Mapping[Hashable, Fraction]) -> bool:
        """Check the constraint exactly under `assignment`."""
        left = self.lhs.evaluate(assignment)
        right = self.rhs.evaluate(assignment)
        if self.sense is Sense.LE:
            return left <= right
        if self.sense is Sense.GE:
            return left >= right
        return left == right

    def variables(self):
        """Variables occurring on either side."""
        seen = dict.fromkeys(self.lhs.variables())
        seen.update(dict.fromkeys(self.rhs.variables()))
        return list(seen)

    def __str__(self):
        return '%r %s %r' % (self.lhs, self.sense.value, self.rhs)


class LPProblem:
    """
    A maximization problem over declared variables.

    Each variable is either non-negative or free. Constraints may only mention
    declared variables; insertion order of variables and constraints fixes the
    solver's pivoting order and therefore its answer.
    """

    def __init__(self, name='lincost'):
        self.__name = name
        self.__variables: Dict[Hashable, bool] = {}
        self.__constraints: List[Constraint] = []
        self.__objective = LinExpr()

    @property
    def name(self):
        """Problem name, used as the LP-file comment."""
        return self.__name

    @property
    def variables(self):
        """Declared variables in insertion order."""
        return list(self.__variables)

    @property
    def constraints(self):
        """All constraints in insertion order."""
        return tuple(self.__constraints)

    @property
    def objective(self) -> LinExpr:
        """The form being maximized."""
        return self.__objective

    def is_nonneg(self, var) -> bool:
        """Whether `var` carries the bound ``var >= 0``."""
        return self.__variables[var]

    def add_variable(self, var: Hashable, nonneg=True):
        """Declare a variable; redeclaring with the same bound is a no-op."""
        if var in self.__variables:
            if self.__variables[var] != nonneg:
                raise ValueError('Variable %s redeclared with a different bound' % (var,))
            return var
        self.__variables[var] = nonneg
        return var

    def _check_declared(self, variables):
        for v in variables:
            if v not in self.__variables:
                raise ValueError('Undeclared LP variable: %s' % (v,))

    def add_constraint(self, lhs, sense: Sense, rhs=0, name=None) -> Constraint:
        """Append ``lhs (sense) rhs``."""
        c = Constraint(as_linexpr(lhs), sense, as_linexpr(rhs), name)
        self._check_declared(c.variables())
        self.__constraints.append(c)
        return c

    def add_le(self, lhs, rhs=0, name=None):
        """Append ``lhs <= rhs``."""
        return self.add_constraint(lhs, Sense.LE, rhs, name)

    def add_ge(self, lhs, rhs=0, name=None):
        """Append ``lhs >= rhs``."""
        return self.add_constraint(lhs, Sense.GE, rhs, name)

    def add_eq(self, lhs, rhs=0, name=None):
        """Append ``lhs = rhs``."""
        return self.add_constraint(lhs, Sense.EQ, rhs, name)

    def set_objective(self, expr):
        """Set the form to maximize."""
        expr = as_linexpr(expr)
        self._check_declared(expr.variables())
        self.__objective = expr

    def __len__(self):
        return len(self.__constraints)


class SolveStatus(Enum):
    """Outcome of a solve."""

    OPTIMAL = 'Optimal'
    INFEASIBLE = 'Infeasible'
    UNBOUNDED = 'Unbounded'


class Solution(NamedTuple):
    """Result of `lincost.lp.solve`."""

    status: SolveStatus
    assignment: Dict[Hashable, Fraction]
    objective_value: Optional[Fraction]

    def to_json(self):
        """Solution JSON: ``{status, vars: {name: "p/q"}, objective: "p/q"}``."""
        return {
            'status': self.status.value,
            'vars': {str(k): format_fraction(v) for k, v in self.assignment.items()},
            'objective': None if self.objective_value is None else format_fraction(self.objective_value),
        }

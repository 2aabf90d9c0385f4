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
Two-phase primal simplex over exact rationals.

The tableau is kept as one sparse row per constraint. Pivoting always follows
Bland's rule (lowest entering column, then lowest ratio with ties broken by the
lowest basic column), so the solver terminates and, for a fixed variable and
constraint order, always returns the same vertex.
"""

from fractions import Fraction
from typing import Dict, List

from lincost.lp.problem import LPProblem, Sense, Solution, SolveStatus
from lincost.utils import logging

_ZERO = Fraction(0)


class _Tableau:
    """Sparse simplex tableau; ``z = value + Σ reduced[j]·x_j`` over nonbasic columns."""

    def __init__(self):
        self.rows: List[Dict[int, Fraction]] = []
        self.rhs: List[Fraction] = []
        self.basis: List[int] = []
        self.reduced: Dict[int, Fraction] = {}
        self.value = _ZERO
        self.pivots = 0

    def add_row(self, row, rhs, basic):
        self.rows.append(row)
        self.rhs.append(rhs)
        self.basis.append(basic)

    def drop_row(self, p):
        del self.rows[p]
        del self.rhs[p]
        del self.basis[p]

    @staticmethod
    def _axpy(target, f, row):
        for k, v in row.items():
            nv = target.get(k, _ZERO) - f * v
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)

    def pivot(self, p, e):
        row = self.rows[p]
        piv = row[e]
        if piv != 1:
            row = {k: v / piv for k, v in row.items()}
            self.rows[p] = row
            self.rhs[p] = self.rhs[p] / piv
        for i, other in enumerate(self.rows):
            if i == p:
                continue
            f = other.get(e)
            if f:
                self._axpy(other, f, row)
                self.rhs[i] -= f * self.rhs[p]
        f = self.reduced.get(e)
        if f:
            self._axpy(self.reduced, f, row)
            self.value += f * self.rhs[p]
        self.basis[p] = e
        self.pivots += 1

    def run(self):
        """Pivot until optimal or unbounded."""
        while True:
            entering = min((j for j, v in self.reduced.items() if v > 0), default=None)
            if entering is None:
                return SolveStatus.OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return SolveStatus.UNBOUNDED
            self.pivot(best[1], entering)

    def values(self):
        return {b: self.rhs[i] for i, b in enumerate(self.basis)}


def _implied_by_bounds(terms, sense, bound, problem):
    """Single-variable rows already implied by ``v >= 0``."""
    if len(terms) != 1:
        return False
    (var, coef), = terms.items()
    if not problem.is_nonneg(var):
        return False
    if sense is Sense.GE:
        return coef > 0 and bound <= 0
    if sense is Sense.LE:
        return coef < 0 and bound >= 0
    return False


def _constant_holds(sense, bound):
    if sense is Sense.LE:
        return 0 <= bound
    if sense is Sense.GE:
        return 0 >= bound
    return bound == 0


_FLIP = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}


def solve(problem: LPProblem) -> Solution:
    """
    Maximize `problem.objective` subject to its constraints.

    Args:
        problem (LPProblem): the problem; it is not modified.

    Returns:
        Solution: Optimal with an exact assignment of every declared variable,
        or Infeasible / Unbounded with an empty assignment.
    """
    # Structural columns; a free variable v is split into v+ (col) and v- (col + 1).
    columns: Dict[object, List] = {}
    ncols = 0
    for var in problem.variables:
        if problem.is_nonneg(var):
            columns[var] = [(ncols, 1)]
            ncols += 1
        else:
            columns[var] = [(ncols, 1), (ncols + 1, -1)]
            ncols += 2

    pending = []
    for c in problem.constraints:
        terms, sense, bound = c.normalized()
        if not terms:
            if not _constant_holds(sense, bound):
                logging.debug('LP %s: constant row %s is violated' % (problem.name, c))
                return Solution(SolveStatus.INFEASIBLE, {}, None)
            continue
        if _implied_by_bounds(terms, sense, bound, problem):
            continue
        row = {}
        for var, coef in terms.items():
            for col, sign in columns[var]:
                row[col] = coef * sign
        if bound < 0:
            row = {k: -v for k, v in row.items()}
            bound = -bound
            sense = _FLIP[sense]
        pending.append((row, sense, bound))

    # Slack and surplus columns follow the structural ones; artificials come last.
    next_col = ncols
    slack_of = []
    for _, sense, _ in pending:
        if sense is Sense.EQ:
            slack_of.append(None)
        else:
            slack_of.append(next_col)
            next_col += 1
    artificial_start = next_col

    tableau = _Tableau()
    artificial_rows = []
    for (row, sense, bound), slack in zip(pending, slack_of):
        if sense is Sense.LE:
            row[slack] = Fraction(1)
            tableau.add_row(row, bound, slack)
        else:
            if sense is Sense.GE:
                row[slack] = Fraction(-1)
            row[next_col] = Fraction(1)
            artificial_rows.append(len(tableau.rows))
            tableau.add_row(row, bound, next_col)
            next_col += 1

    def is_artificial(col):
        return col >= artificial_start

    if artificial_rows:
        for i in artificial_rows:
            for k, v in tableau.rows[i].items():
                if not is_artificial(k):
                    tableau.reduced[k] = tableau.reduced.get(k, _ZERO) + v
            tableau.value -= tableau.rhs[i]
        tableau.reduced = {k: v for k, v in tableau.reduced.items() if v}
        tableau.run()
        if tableau.value < 0:
            logging.debug('LP %s: infeasible after %d pivots' % (problem.name, tableau.pivots))
            return Solution(SolveStatus.INFEASIBLE, {}, None)
        p = 0
        while p < len(tableau.rows):
            if is_artificial(tableau.basis[p]):
                candidates = [k for k in tableau.rows[p] if not is_artificial(k)]
                if candidates:
                    tableau.pivot(p, min(candidates))
                else:
                    tableau.drop_row(p)
                    continue
            p += 1
        for row in tableau.rows:
            for k in [k for k in row if is_artificial(k)]:
                del row[k]

    tableau.reduced = {}
    tableau.value = problem.objective.constant
    for var, coef in problem.objective.terms.items():
        for col, sign in columns[var]:
            tableau.reduced[col] = coef * sign
    for i, b in enumerate(tableau.basis):
        cb = tableau.reduced.get(b)
        if cb:
            _Tableau._axpy(tableau.reduced, cb, tableau.rows[i])
            tableau.value += cb * tableau.rhs[i]
    status = tableau.run()
    logging.debug('LP %s: %s after %d pivots (%d rows, %d columns)'
                  % (problem.name, status.value, tableau.pivots, len(tableau.rows), next_col))
    if status is SolveStatus.UNBOUNDED:
        return Solution(SolveStatus.UNBOUNDED, {}, None)

    values = tableau.values()
    assignment = {}
    for var, cols in columns.items():
        assignment[var] = sum((sign * values.get(col, _ZERO) for col, sign in cols), _ZERO)
    return Solution(SolveStatus.OPTIMAL, assignment, problem.objective.evaluate(assignment))

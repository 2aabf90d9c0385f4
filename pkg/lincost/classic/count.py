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

"""Constraint store of the classic system, and constraint counting."""

import itertools
from typing import List, Optional

from lincost.lp import Constraint, LinExpr, LPProblem, Sense
from lincost.lp.problem import as_linexpr
from lincost.utils import logging


class ConstraintStore:
    """
    Collects the LP of one classic analysis.

    Every fresh annotation variable is non-negative and its bound counts as
    one constraint. Constraints between constants are decided on the spot and
    never counted. Once more than `max_rows` rows have been emitted the store
    stops keeping the LP and only counts.
    """

    def __init__(self, name: str, max_rows: Optional[int] = None):
        self.__problem = LPProblem(name)
        self.__max_rows = max_rows
        self.__ids = itertools.count()
        self.__rows = 0
        self.__bounds = 0
        self.__failed: List[str] = []
        self.__counting_only = False

    @property
    def problem(self) -> Optional[LPProblem]:
        """The LP, or None in counting-only mode."""
        return None if self.__counting_only else self.__problem

    @property
    def counting_only(self) -> bool:
        """Whether the LP grew past `max_rows` and was dropped."""
        return self.__counting_only

    @property
    def rows(self) -> int:
        """Relational constraints emitted."""
        return self.__rows

    @property
    def count(self) -> int:
        """Relational constraints plus non-negativity bounds."""
        return self.__rows + self.__bounds

    @property
    def failed(self) -> List[str]:
        """Constant constraints that do not hold."""
        return list(self.__failed)

    def fresh(self, hint: str = 'q') -> LinExpr:
        """A new non-negative annotation variable."""
        name = '%s_%d' % (hint, next(self.__ids))
        self.__bounds += 1
        if not self.__counting_only:
            self.__problem.add_variable(name)
        return LinExpr.var(name)

    def add(self, lhs, sense: Sense, rhs, origin: str):
        """Emit ``lhs (sense) rhs``."""
        lhs, rhs = as_linexpr(lhs), as_linexpr(rhs)
        diff = lhs - rhs
        if diff.is_constant:
            if not Constraint(diff, sense, LinExpr()).holds({}):
                self.__failed.append('%s: %r %s %r' % (origin, lhs, sense.value, rhs))
            return
        self.__rows += 1
        if self.__counting_only:
            return
        if self.__max_rows is not None and self.__rows > self.__max_rows:
            logging.warning('%s: more than %d LP rows, counting constraints only'
                            % (self.__problem.name, self.__max_rows))
            self.__counting_only = True
            self.__problem = None
            return
        self.__problem.add_constraint(lhs, sense, rhs, origin)

    def le(self, lhs, rhs, origin: str):
        """Emit ``lhs <= rhs``."""
        self.add(lhs, Sense.LE, rhs, origin)

    def ge(self, lhs, rhs, origin: str):
        """Emit ``lhs >= rhs``."""
        self.add(lhs, Sense.GE, rhs, origin)

    def eq(self, lhs, rhs, origin: str):
        """Emit ``lhs = rhs``."""
        self.add(lhs, Sense.EQ, rhs, origin)


def classic_constraint_count(report) -> int:
    """Constraints a classic analysis emitted, retyping cascades included."""
    return report.constraints

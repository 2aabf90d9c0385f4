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

"""Entrywise inequalities between matrices."""

from typing import Iterable, List, NamedTuple, Optional

from lincost.linmap.pmat import PMat
from lincost.linmap.scalar import HAVOC, HavocOnLeft, LinExpr, Scalar
from lincost.lp.problem import Constraint, Sense, as_linexpr
from lincost.potential.index import Index


class ScalarInequality(NamedTuple):
    """``left <= right`` for the entry (`row`, `col`); `origin` describes where it came from."""

    left: Scalar
    right: Scalar
    row: Index
    col: Index
    origin: Optional[str] = None

    @property
    def is_constant(self) -> bool:
        """Whether neither side mentions an unknown."""
        return not isinstance(self.left, LinExpr) and not isinstance(self.right, LinExpr)

    @property
    def is_trivial(self) -> bool:
        """Both sides are the rational zero."""
        return self.is_constant and self.left == 0 and self.right == 0

    def holds(self) -> bool:
        """Exact check of a constant inequality."""
        if not self.is_constant:
            raise ValueError('Inequality mentions unknowns: %s' % (self,))
        return self.left <= self.right

    def to_constraint(self) -> Constraint:
        """The LP row ``left <= right``."""
        return Constraint(as_linexpr(self.left), Sense.LE, as_linexpr(self.right), self.origin)

    def __str__(self):
        where = '' if self.origin is None else ' [%s]' % self.origin
        return '(%s, %s): %r <= %r%s' % (self.row, self.col, self.left, self.right, where)


def leq_constraints(a: PMat, b: PMat, rows: Iterable[Index], cols: Iterable[Index],
                    origin: Optional[str] = None) -> List[ScalarInequality]:
    """
    One inequality ``a[i, j] <= b[i, j]`` per entry of `rows` x `cols`.

    Pairs whose right side is havoc are dropped: an arbitrary choice can
    satisfy them.

    Raises:
        HavocOnLeft: havoc on the left against a non-havoc right side.
    """
    cols = list(cols)
    out = []
    for i in rows:
        for j in cols:
            right = b.entry(i, j)
            if right is HAVOC:
                continue
            left = a.entry(i, j)
            if left is HAVOC:
                raise HavocOnLeft(i, j)
            out.append(ScalarInequality(left, right, i, j, origin))
    return out

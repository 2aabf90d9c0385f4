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

"""The inequalities a function's matrix must satisfy against its body's path maps."""

from typing import Iterable, List, Sequence, Set

from lincost.const import ARG, CONST, RESULT
from lincost.lang.types import Type
from lincost.linmap import PMat, ScalarInequality, leq_constraints, move, zero
from lincost.potential import CONST_INDEX, Basis, Index, display_order, owned_indices

BOUND = 'bound'
CAPTURED = 'captured'
SCOPE = 'scope'


def _origin(fname: str, family: str, path: str) -> str:
    return '%s: %s, %s' % (fname, family, path)


def fun_constraints(fname: str, arg: str, arg_type: Type, ret_type: Type, m: PMat, S: Sequence, C: Sequence,
                    dom: Iterable[str], over: Set[Index], basis: Basis) -> List[ScalarInequality]:
    """
    Inequalities justifying `m` as the matrix of ``fun fname arg = body``.

    Three families, all over the argument's and the constant's columns after
    dropping the potential of the enclosing context `dom`:

    * ``bound``: on argument, result and constant rows, every path map of
      `S` is at least ``m`` applied to the argument;
    * ``captured``: on every other row, the path maps of `S` are non-negative;
    * ``scope``: the maps of `C` are non-negative.

    Inequalities between two zeros are omitted.

    Args:
        S (Sequence[Derived]): path maps to the result.
        C (Sequence[Derived]): scope-exit and call-argument maps.
        over (Set): the index universe of the derivation.

    Raises:
        NonlinearTerm: a product of unknowns arises.
    """
    z = zero(set(dom), over)
    arg_slots = list(owned_indices(arg, arg_type, basis))
    cols = arg_slots + [CONST_INDEX]
    own_rows = arg_slots + list(owned_indices(RESULT, ret_type, basis)) + [CONST_INDEX]
    others = display_order(ix for ix in over if ix.owner not in (arg, RESULT, CONST))
    every = display_order(over)
    applied = m @ move(arg, ARG, [ix.relative() for ix in arg_slots])
    nothing = PMat(support=set(over) | set(own_rows))
    out = []
    for d in S:
        sz = d.mat @ z
        out.extend(leq_constraints(applied, sz, own_rows, cols, _origin(fname, BOUND, d.describe())))
        out.extend(leq_constraints(nothing, sz, others, cols, _origin(fname, CAPTURED, d.describe())))
    for d in C:
        out.extend(leq_constraints(nothing, d.mat @ z, every, cols, _origin(fname, SCOPE, d.describe())))
    return [q for q in out if not q.is_trivial]

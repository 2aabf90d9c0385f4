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

"""Function matrices: index sets, symbolic matrices and concrete normalization."""

from typing import List, Tuple

from lincost.const import ARG, RESULT
from lincost.lang.types import Type
from lincost.linmap import ONE, PMat, UnknownId
from lincost.lp import LinExpr
from lincost.potential import CONST_INDEX, Basis, Index, display_order, indices


def matrix_indices(arg_type: Type, ret_type: Type, basis: Basis) -> Tuple[List[Index], List[Index]]:
    """
    Rows and columns of the matrix of a function ``arg_type -> ret_type``.

    Returns:
        (List, List): ``r`` slots plus ``c`` and ``a`` slots plus ``c``, in display order.
    """
    rows = display_order([ix.under(RESULT) for ix in indices(ret_type, basis)] + [CONST_INDEX])
    cols = display_order([ix.under(ARG) for ix in indices(arg_type, basis)] + [CONST_INDEX])
    return rows, cols


def _support(rows, cols):
    return set(rows) | set(cols)


def symbolic_matrix(fname: str, arg_type: Type, ret_type: Type, basis: Basis) -> PMat:
    """
    Matrix whose argument columns are unknowns; ``a`` and ``r`` rows outside the matrix are zero.

    The constant column is the identity: constant potential passes through a
    call unchanged, so calls chained on one path never multiply unknowns
    through the constant.
    """
    rows, cols = matrix_indices(arg_type, ret_type, basis)
    entries = {(i, j): LinExpr.var(UnknownId(fname, i, j)) for i in rows for j in cols if not j.is_const}
    entries[(CONST_INDEX, CONST_INDEX)] = ONE
    return PMat.from_entries(entries, _support(rows, cols))


def concrete_matrix(m: PMat, arg_type: Type, ret_type: Type, basis: Basis) -> PMat:
    """
    Restrict a user or solver matrix to the slots of the function type.

    Entries outside ``r ∪ c`` rows or ``a ∪ c`` columns are discarded; the
    ``a`` and ``r`` indices missing from `m` become zero columns.
    """
    rows, cols = matrix_indices(arg_type, ret_type, basis)
    entries = {(i, j): m.entry(i, j) for i in rows for j in cols}
    return PMat.from_entries(entries, _support(rows, cols))


def reallocates(m: PMat) -> bool:
    """Whether any result slot of `m` receives potential from some column."""
    return any(not ix.is_const and ix.owner == RESULT and s != 0 for ix, _, s in m.entries())

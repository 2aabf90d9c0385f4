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

"""Index sets of types and contexts."""

from typing import Mapping, Tuple

from lincost.lang.types import ListT, PairT, Type
from lincost.potential.basis import Basis
from lincost.potential.index import CONST_INDEX, Index


def indices(t: Type, basis: Basis) -> Tuple[Index, ...]:
    """
    Path-relative indices of a type.

    Lists carry one slot per degree (or base); pairs prefix their components'
    slots with ``1`` / ``2``; every other type has none. Inner lists of a list
    carry no slots.
    """
    if isinstance(t, ListT):
        return basis.leaves()
    if isinstance(t, PairT):
        return tuple(ix.under('1') for ix in indices(t.fst, basis)) + \
            tuple(ix.under('2') for ix in indices(t.snd, basis))
    return ()


def owned_indices(name: str, t: Type, basis: Basis) -> Tuple[Index, ...]:
    """Indices of `t` below the variable `name`."""
    return tuple(ix.under(name) for ix in indices(t, basis))


def context_indices(ctx: Mapping[str, Type], basis: Basis) -> Tuple[Index, ...]:
    """All indices of a typing context plus the constant."""
    out = []
    for name, t in ctx.items():
        out.extend(owned_indices(name, t, basis))
    out.append(CONST_INDEX)
    return tuple(out)


def uses_pair_indices(t: Type) -> bool:
    """Whether `t` relies on the pair extension of the index sets."""
    return isinstance(t, PairT)

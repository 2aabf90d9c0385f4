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

"""Well-formedness of runtime values against cost-free types."""

from typing import Mapping, Optional

from lincost.lang.syntax import Program
from lincost.lang.types import AlphaT, BoolT, FunT, ListT, PairT, TVar, Type
from lincost.lang.values import VBool, VClosure, VCons, VNil, VPair, Value, iter_list


def type_of_value(v: Value) -> Type:
    """
    A base type of a first-order value.

    Element types that the value does not determine (empty lists) are left
    as fresh type variables.

    Raises:
        ValueError: `v` is a closure or a list with elements of different types.
    """
    if isinstance(v, VBool):
        return BoolT()
    if isinstance(v, VPair):
        return PairT(type_of_value(v.fst), type_of_value(v.snd))
    if isinstance(v, (VNil, VCons)):
        elems = [type_of_value(x) for x in iter_list(v)]
        if not elems:
            return ListT(TVar.fresh())
        if any(e != elems[0] for e in elems[1:]):
            raise ValueError('List %s mixes element types' % (v,))
        return ListT(elems[0])
    raise ValueError('No first-order type for %s' % (v,))


def check_wf(v: Value, t: Type, matrices: Optional[Mapping[str, object]] = None, basis=None,
             program: Optional[Program] = None) -> bool:
    """
    Whether the value `v` is well formed at the cost-free type `t`.

    Booleans, lists and pairs are checked structurally; the abstract element
    type accepts any first-order value. A closure at ``FunT(arg, ret, mat)``
    is well formed when the matrix ``matrices[mat]`` types its body.

    Args:
        v (Value): the value.
        t (Type): cost-free type; function types name their matrix by handle.
        matrices (Mapping): handle to `PMat`.
        basis (Basis): potential basis for closures.
        program (Program): declarations the closure bodies may call.
    """
    if isinstance(t, BoolT):
        return isinstance(v, VBool)
    if isinstance(t, (AlphaT, TVar)):
        return not isinstance(v, VClosure)
    if isinstance(t, ListT):
        if not isinstance(v, (VNil, VCons)):
            return False
        return all(check_wf(x, t.elem, matrices, basis, program) for x in iter_list(v))
    if isinstance(t, PairT):
        return isinstance(v, VPair) and check_wf(v.fst, t.fst, matrices, basis, program) \
            and check_wf(v.snd, t.snd, matrices, basis, program)
    if isinstance(t, FunT):
        if not isinstance(v, VClosure) or t.mat is None or t.mat not in (matrices or {}) or basis is None:
            return False
        from lincost.mapinfer.inference import check_closure
        return check_closure(v, t, matrices[t.mat], basis, program)
    return False

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
Syntax-directed derivation of the path matrices of an expression.

`Deriver.derive` returns, for a let-normal expression, the set S of maps
from the context's annotation to the context-plus-result annotation (one per
path to the result) and the set C of maps giving the annotations of
variables leaving scope and of call arguments. Every map carries the branch
choices of its path for diagnostics.
"""

from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple

from lincost.const import ARG, CONST, RESULT
from lincost.lang.errors import LinCostError
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var, walk)
from lincost.lang.typecheck import TypeInfo, typecheck_expr
from lincost.lang.types import FunT, ListT, PairT, Type
from lincost.linmap import PMat, ScalarInequality, identity, move, nil, proj, proj_neg, shift, unshift, zero
from lincost.potential import CONST_INDEX, Basis, Index, indices, owned_indices


class UnsupportedHigherOrder(LinCostError):
    """A function value whose matrix is not statically known is applied."""


class Derived(NamedTuple):
    """A path map and the branch choices leading to it."""

    mat: PMat
    path: Tuple[str, ...] = ()

    def after(self, right: PMat) -> 'Derived':
        """``mat · right``."""
        return Derived(self.mat @ right, self.path)

    def within(self, step: str) -> 'Derived':
        """Same map reached through one more branch choice."""
        return Derived(self.mat, (step,) + self.path)

    def describe(self) -> str:
        """Readable path."""
        return ' > '.join(self.path) if self.path else 'straight line'


class DeriveResult(NamedTuple):
    """Outcome of typing one expression."""

    type: Type
    S: List[Derived]
    C: List[Derived]
    obligations: List[ScalarInequality] = []
    local_matrices: Mapping[str, PMat] = {}


def _function_types(t: Type) -> Iterator[FunT]:
    if isinstance(t, FunT):
        yield t
        yield from _function_types(t.arg)
        yield from _function_types(t.ret)
    elif isinstance(t, ListT):
        yield from _function_types(t.elem)
    elif isinstance(t, PairT):
        yield from _function_types(t.fst)
        yield from _function_types(t.snd)


def universe(info: TypeInfo, owner: str, root: Expr, basis: Basis, ctx: Optional[Mapping[str, Type]] = None) -> Set[Index]:
    """
    Every index a derivation inside `root` can touch.

    That is the slots of every binder of `owner` and of `ctx`, result slots
    for the type of every node, argument slots for every function type
    occurring, and the constant.
    """
    out = {CONST_INDEX}
    named = dict(ctx or {})
    named.update(info.binder_types(owner))
    for name, t in named.items():
        out.update(owned_indices(name, t, basis))
        for ft in _function_types(t):
            out.update(owned_indices(ARG, ft.arg, basis))
            out.update(owned_indices(RESULT, ft.ret, basis))
    for node in walk(root):
        t = info.type_of(node)
        out.update(owned_indices(RESULT, t, basis))
        for ft in _function_types(t):
            out.update(owned_indices(ARG, ft.arg, basis))
            out.update(owned_indices(RESULT, ft.ret, basis))
    return out


class Deriver:
    """
    Applies the typing rules below one top-level function (or standalone expression).

    Args:
        info (TypeInfo): base types of the normalized program.
        owner (str): declaration whose binders are being typed.
        basis (Basis): potential basis.
        matrices (Mapping): matrix of every callable global, symbolic or concrete.
        over (Set): index universe of the derivation, see `universe`.
        local_matrix (Callable): builds the matrix of a local function from
            ``(name, arg_type, ret_type)``.
        local_obligations (Callable): turns a local function's derivation into
            its inequalities, ``(fun, fun_type, matrix, result, scope, over)``.
    """

    def __init__(self, info: TypeInfo, owner: str, basis: Basis, matrices: Mapping[str, PMat],
                 over: Set[Index], local_matrix, local_obligations):
        self.__info = info
        self.__owner = owner
        self.__basis = basis
        self.__matrices = matrices
        self.__over = over
        self.__local_matrix = local_matrix
        self.__local_obligations = local_obligations

    def _rel(self, name: str):
        return indices(self.__info.var_type(self.__owner, name), self.__basis)

    def derive(self, e: Expr, scope: Tuple[str, ...] = (), handles: Optional[Dict[str, PMat]] = None) -> DeriveResult:
        """
        Type `e` in the context `scope`.

        Args:
            e (Expr): let-normal expression.
            scope (Tuple): names in scope, innermost last.
            handles (Dict): matrices of function-valued variables in scope.

        Returns:
            DeriveResult
        """
        handles = dict(handles or {})
        t = self.__info.type_of(e)
        over = self.__over
        if isinstance(e, (BoolLit, Tick)):
            return DeriveResult(t, [Derived(identity())], [])
        if isinstance(e, Var):
            return DeriveResult(t, [Derived(move(e.name, RESULT, self._rel(e.name)))], [])
        if isinstance(e, Nil):
            return DeriveResult(t, [Derived(nil(RESULT, self.__basis, over))], [])
        if isinstance(e, Cons):
            return DeriveResult(t, [Derived(unshift(e.tail.name, RESULT, self.__basis))], [])
        if isinstance(e, Pair):
            m = move(e.snd.name, (RESULT, '2'), self._rel(e.snd.name)) @ \
                move(e.fst.name, (RESULT, '1'), self._rel(e.fst.name))
            return DeriveResult(t, [Derived(m)], [])
        if isinstance(e, App):
            m = self._callee(e.fn.name, handles)
            s = m @ move(e.arg.name, ARG, self._rel(e.arg.name))
            c = proj({e.arg.name, CONST}, over)
            return DeriveResult(t, [Derived(s)], [Derived(c, ('call %s %s' % (e.fn.name, e.arg.name),))])
        if isinstance(e, If):
            then_ = self.derive(e.then_, scope, handles)
            orelse = self.derive(e.orelse, scope, handles)
            b = e.cond.name
            return DeriveResult(
                t,
                [d.within('if %s: then' % b) for d in then_.S] + [d.within('if %s: else' % b) for d in orelse.S],
                [d.within('if %s: then' % b) for d in then_.C] + [d.within('if %s: else' % b) for d in orelse.C],
                then_.obligations + orelse.obligations,
                {**then_.local_matrices, **orelse.local_matrices})
        if isinstance(e, Let):
            return self._let(e, t, scope, handles)
        if isinstance(e, CaseList):
            return self._case_list(e, t, scope, handles)
        if isinstance(e, CasePair):
            return self._case_pair(e, t, scope, handles)
        if isinstance(e, Fun):
            return self._fun(e, t, scope, handles)
        raise LinCostError('Cannot derive %r' % (e,))

    def _callee(self, name: str, handles: Mapping[str, PMat]) -> PMat:
        if name in handles:
            return handles[name]
        if name in self.__matrices:
            return self.__matrices[name]
        raise UnsupportedHigherOrder('No statically known matrix for the function value %r' % name)

    def _let(self, e: Let, t: Type, scope, handles) -> DeriveResult:
        bound = self.derive(e.bound, scope, handles)
        if isinstance(e.bound, Fun):
            handles[e.name] = bound.local_matrices[e.bound.self_name]
        elif isinstance(e.bound, Var) and e.bound.name in handles:
            handles[e.name] = handles[e.bound.name]
        body = self.derive(e.body, scope + (e.name,), handles)
        x = e.name
        mv = move(RESULT, x, self._rel(x))
        keep_x, drop_x = proj({x}, self.__over), proj_neg({x}, self.__over)
        s_out, c_out = [], list(bound.C)
        for s in bound.S:
            into = mv @ s.mat
            for tr in body.S:
                path = s.path + tr.path
                m = tr.mat @ into
                s_out.append(Derived(drop_x @ m, path))
                c_out.append(Derived(keep_x @ m, path + ('end of %s' % x,)))
            for d in body.C:
                c_out.append(Derived(d.mat @ into, s.path + d.path))
        return DeriveResult(t, s_out, c_out, bound.obligations + body.obligations,
                            {**bound.local_matrices, **body.local_matrices})

    def _case_list(self, e: CaseList, t: Type, scope, handles) -> DeriveResult:
        lst = e.scrutinee.name
        nil_branch = self.derive(e.nil_branch, scope, handles)
        cons_branch = self.derive(e.cons_branch, scope + (e.head, e.tail), handles)
        nl = nil(lst, self.__basis, self.__over)
        sh = shift(lst, e.tail, self.__basis) @ zero({e.head}, self.__over)
        keep, drop = proj({e.head, e.tail}, self.__over), proj_neg({e.head, e.tail}, self.__over)
        on_nil, on_cons = 'case %s: nil' % lst, 'case %s: cons' % lst
        s_out = [d.after(nl).within(on_nil) for d in nil_branch.S]
        c_out = [d.after(nl).within(on_nil) for d in nil_branch.C]
        for d in cons_branch.S:
            m = d.mat @ sh
            s_out.append(Derived(drop @ m, (on_cons,) + d.path))
            c_out.append(Derived(keep @ m, (on_cons,) + d.path + ('end of %s, %s' % (e.head, e.tail),)))
        c_out.extend(d.after(sh).within(on_cons) for d in cons_branch.C)
        return DeriveResult(t, s_out, c_out, nil_branch.obligations + cons_branch.obligations,
                            {**nil_branch.local_matrices, **cons_branch.local_matrices})

    def _case_pair(self, e: CasePair, t: Type, scope, handles) -> DeriveResult:
        p = e.scrutinee.name
        pair_t = self.__info.var_type(self.__owner, p)
        body = self.derive(e.body, scope + (e.fst, e.snd), handles)
        mv = move((p, '2'), e.snd, indices(pair_t.snd, self.__basis)) @ \
            move((p, '1'), e.fst, indices(pair_t.fst, self.__basis))
        keep, drop = proj({e.fst, e.snd}, self.__over), proj_neg({e.fst, e.snd}, self.__over)
        s_out, c_out = [], []
        for d in body.S:
            m = d.mat @ mv
            s_out.append(Derived(drop @ m, d.path))
            c_out.append(Derived(keep @ m, d.path + ('end of %s, %s' % (e.fst, e.snd),)))
        c_out.extend(d.after(mv) for d in body.C)
        return DeriveResult(t, s_out, c_out, body.obligations, body.local_matrices)

    def _fun(self, e: Fun, t: FunT, scope, handles) -> DeriveResult:
        m = self.__local_matrix(e.self_name, t.arg, t.ret)
        inner = dict(handles)
        inner[e.self_name] = m
        body = self.derive(e.body, scope + (e.self_name, e.arg), inner)
        obligations = self.__local_obligations(e, t, m, body, scope + (e.self_name,), self.__over)
        local = dict(body.local_matrices)
        local[e.self_name] = m
        return DeriveResult(t, [Derived(identity())], [], body.obligations + obligations, local)


def derive(ctx: Mapping[str, Type], e: Expr, basis: Basis, matrices: Optional[Mapping[str, PMat]] = None,
           fixed: Optional[Mapping[str, PMat]] = None) -> DeriveResult:
    """
    Derive the path matrices of a standalone let-normal expression.

    Function-typed variables of `ctx` are applied through `matrices`. Local
    functions named in `fixed` use that matrix, the others get symbolic
    ones; the inequalities of every local function are returned as
    obligations.
    """
    from lincost.mapinfer.constraints import fun_constraints
    from lincost.mapinfer.signatures import concrete_matrix, symbolic_matrix

    fixed = dict(fixed or {})

    def local_matrix(name, arg, ret):
        if name in fixed:
            return concrete_matrix(fixed[name], arg, ret, basis)
        return symbolic_matrix(name, arg, ret, basis)

    info = typecheck_expr(e, ctx)
    over = universe(info, '<expr>', e, basis, ctx)

    def local_obligations(fun, ft, m, result, dom, over_):
        return fun_constraints(fun.self_name, fun.arg, ft.arg, ft.ret, m, result.S, result.C, dom, over_, basis)

    deriver = Deriver(info, '<expr>', basis, dict(matrices or {}), over, local_matrix, local_obligations)
    return deriver.derive(e, tuple(ctx))


def derive_function(info: TypeInfo, program: Program, fname: str, basis: Basis,
                    matrices: Mapping[str, PMat], local_matrix, local_obligations):
    """
    Derive the body of the declaration `fname`.

    Returns:
        (DeriveResult, Set): the body's derivation and its index universe.
    """
    decl = program.get(fname)
    over = universe(info, fname, decl, basis)
    deriver = Deriver(info, fname, basis, matrices, over, local_matrix, local_obligations)
    handles = {fname: matrices[fname]}
    scope = tuple(n for n in program.names) + (decl.arg,)
    return deriver.derive(decl.body, scope, handles), over

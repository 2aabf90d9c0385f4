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

"""Monomorphic base typechecker by unification."""

from typing import Dict, Mapping, Optional

from lincost.lang.errors import BaseTypeError, UnboundVariableError
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var)
from lincost.lang.types import ALPHA, BOOL, FunT, ListT, PairT, TVar, Type, strip_handles


class TypeInfo:
    """
    Resolved base types of a typechecked program or expression.

    Node types are looked up by node identity; the checked program is kept so
    the identities stay valid. Type variables left unconstrained resolve to
    the abstract element type.
    """

    def __init__(self, program, node_types: Dict[int, Type], binder_types: Dict[str, Dict[str, Type]],
                 subst: Dict[int, Type]):
        self.__program = program
        self.__nodes = node_types
        self.__binders = binder_types
        self.__subst = subst

    @property
    def program(self):
        """The checked program or expression."""
        return self.__program

    def resolve(self, t: Type) -> Type:
        """Apply the solved substitution; free variables become ``'a``."""
        t = _walk(t, self.__subst)
        if isinstance(t, TVar):
            return ALPHA
        if isinstance(t, ListT):
            return ListT(self.resolve(t.elem))
        if isinstance(t, PairT):
            return PairT(self.resolve(t.fst), self.resolve(t.snd))
        if isinstance(t, FunT):
            return FunT(self.resolve(t.arg), self.resolve(t.ret))
        return t

    def type_of(self, node: Expr) -> Type:
        """Base type of a node of the checked tree."""
        try:
            return self.resolve(self.__nodes[id(node)])
        except KeyError:
            raise KeyError('Node %r was not typechecked' % (node,))

    def binder_types(self, owner: str) -> Dict[str, Type]:
        """Type of every variable bound inside the declaration `owner`, arguments included."""
        return {k: self.resolve(v) for k, v in self.__binders[owner].items()}

    def var_type(self, owner: str, name: str) -> Type:
        """Type of the binder `name` inside `owner`, falling back to top-level signatures."""
        binders = self.__binders.get(owner, {})
        if name in binders:
            return self.resolve(binders[name])
        return self.resolve(self.__binders['<globals>'][name])

    def signature(self, fname: str) -> FunT:
        """Base type of a top-level function."""
        return self.resolve(self.__binders['<globals>'][fname])


def _walk(t: Type, subst) -> Type:
    while isinstance(t, TVar) and t.id in subst:
        t = subst[t.id]
    return t


class TypeChecker:
    """Collects and solves equality constraints between base types."""

    def __init__(self):
        self.subst: Dict[int, Type] = {}
        self.nodes: Dict[int, Type] = {}
        self.binders: Dict[str, Dict[str, Type]] = {'<globals>': {}}
        self._owner = '<globals>'

    def _occurs(self, v: TVar, t: Type) -> bool:
        t = _walk(t, self.subst)
        if t == v:
            return True
        if isinstance(t, ListT):
            return self._occurs(v, t.elem)
        if isinstance(t, PairT):
            return self._occurs(v, t.fst) or self._occurs(v, t.snd)
        if isinstance(t, FunT):
            return self._occurs(v, t.arg) or self._occurs(v, t.ret)
        return False

    def unify(self, a: Type, b: Type, where: Optional[Expr] = None):
        """Make `a` and `b` equal or raise `BaseTypeError`."""
        a, b = _walk(a, self.subst), _walk(b, self.subst)
        if a == b:
            return
        if isinstance(a, TVar) or isinstance(b, TVar):
            v, t = (a, b) if isinstance(a, TVar) else (b, a)
            if self._occurs(v, t):
                raise BaseTypeError('Infinite type %s = %s' % (v, t))
            self.subst[v.id] = t
            return
        if isinstance(a, ListT) and isinstance(b, ListT):
            self.unify(a.elem, b.elem, where)
            return
        if isinstance(a, PairT) and isinstance(b, PairT):
            self.unify(a.fst, b.fst, where)
            self.unify(a.snd, b.snd, where)
            return
        if isinstance(a, FunT) and isinstance(b, FunT):
            self.unify(a.arg, b.arg, where)
            self.unify(a.ret, b.ret, where)
            return
        raise BaseTypeError('Cannot unify %s with %s%s' % (a, b, '' if where is None else ' in %r' % (where,)))

    def _bind(self, env, name, t):
        self.binders[self._owner][name] = t
        inner = dict(env)
        inner[name] = t
        return inner

    def _annotation(self, t: Optional[Type]) -> Type:
        return TVar.fresh() if t is None else strip_handles(t)

    def _fun(self, env, e: Fun) -> Type:
        arg = self._annotation(e.arg_type)
        ret = self._annotation(e.ret_type)
        ft = FunT(arg, ret)
        inner = self._bind(env, e.self_name, ft)
        inner = self._bind(inner, e.arg, arg)
        self.unify(self.infer(inner, e.body), ret, e)
        return ft

    def infer(self, env: Mapping[str, Type], e: Expr) -> Type:
        """Type of `e` under `env`; records it for the node."""
        t = self._infer(env, e)
        self.nodes[id(e)] = t
        return t

    def _infer(self, env, e: Expr) -> Type:
        if isinstance(e, Var):
            if e.name not in env:
                raise UnboundVariableError(e.name)
            return env[e.name]
        if isinstance(e, (BoolLit, Tick)):
            return BOOL
        if isinstance(e, Nil):
            return ListT(TVar.fresh())
        if isinstance(e, Cons):
            head = self.infer(env, e.head)
            tail = self.infer(env, e.tail)
            self.unify(tail, ListT(head), e)
            return tail
        if isinstance(e, Pair):
            return PairT(self.infer(env, e.fst), self.infer(env, e.snd))
        if isinstance(e, If):
            self.unify(self.infer(env, e.cond), BOOL, e)
            then_ = self.infer(env, e.then_)
            self.unify(then_, self.infer(env, e.orelse), e)
            return then_
        if isinstance(e, Let):
            bound = self.infer(env, e.bound)
            return self.infer(self._bind(env, e.name, bound), e.body)
        if isinstance(e, CaseList):
            elem = TVar.fresh()
            self.unify(self.infer(env, e.scrutinee), ListT(elem), e)
            nil_branch = self.infer(env, e.nil_branch)
            inner = self._bind(env, e.head, elem)
            inner = self._bind(inner, e.tail, ListT(elem))
            self.unify(nil_branch, self.infer(inner, e.cons_branch), e)
            return nil_branch
        if isinstance(e, CasePair):
            fst, snd = TVar.fresh(), TVar.fresh()
            self.unify(self.infer(env, e.scrutinee), PairT(fst, snd), e)
            inner = self._bind(env, e.fst, fst)
            inner = self._bind(inner, e.snd, snd)
            return self.infer(inner, e.body)
        if isinstance(e, Fun):
            return self._fun(env, e)
        if isinstance(e, App):
            ret = TVar.fresh()
            self.unify(self.infer(env, e.fn), FunT(self.infer(env, e.arg), ret), e)
            return ret
        raise BaseTypeError('Not an expression: %r' % (e,))

    def check_program(self, program: Program) -> TypeInfo:
        """Typecheck every declaration with all top-level names in scope."""
        env = {}
        for d in program.decls:
            env[d.self_name] = FunT(self._annotation(d.arg_type), self._annotation(d.ret_type))
        self.binders['<globals>'] = dict(env)
        for d in program.decls:
            self._owner = d.self_name
            self.binders[d.self_name] = {}
            self.unify(self.infer(env, d), env[d.self_name], d)
        return TypeInfo(program, self.nodes, self.binders, self.subst)

    def check_expr(self, e: Expr, ctx: Mapping[str, Type], owner='<expr>') -> TypeInfo:
        """Typecheck a standalone expression; its binders are filed under `owner`."""
        self._owner = owner
        self.binders.setdefault(owner, {})
        ctx = {k: strip_handles(v) for k, v in ctx.items()}
        self.binders['<globals>'].update(ctx)
        self.infer(ctx, e)
        return TypeInfo(e, self.nodes, self.binders, self.subst)


def typecheck(program: Program) -> TypeInfo:
    """Base types of every node and binder of `program`."""
    return TypeChecker().check_program(program)


def typecheck_expr(e: Expr, ctx: Mapping[str, Type]) -> TypeInfo:
    """Base types of a standalone expression under `ctx`."""
    return TypeChecker().check_expr(e, ctx)

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
Let-normalization.

Every slot the core grammar restricts to a variable receives a variable;
intermediate results are bound by `Let` to fresh names ``%0``, ``%1``, ...
which cannot collide with source names. Within one top-level function every
binder ends up with a distinct name: binders that would shadow or repeat an
earlier name are renamed to fresh names.
"""

import itertools
from typing import Callable, Dict, Optional

from lincost.const import ARG, CONST, FRESH_PREFIX, RESULT
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var)

Cont = Optional[Callable[[Expr], Expr]]

# Owners of the argument, result and constant slots.
_RESERVED = frozenset((ARG, RESULT, CONST))


class Normalizer:
    """Continuation-based converter to let-normal form; one instance per program."""

    def __init__(self):
        self._counter = itertools.count()
        self._used = set()

    def fresh(self) -> str:
        """A new generated name."""
        return '%s%d' % (FRESH_PREFIX, next(self._counter))

    def _bind(self, name: str, env: Dict[str, str]):
        new = name if name not in self._used else self.fresh()
        self._used.add(new)
        env = dict(env)
        env[name] = new
        return new, env

    def normalize_decl(self, fun: Fun, globals_=()) -> Fun:
        """Normalize a top-level function; `globals_` are the other declared names."""
        self._used = set(globals_) | _RESERVED | {fun.self_name}
        env = {g: g for g in globals_}
        env[fun.self_name] = fun.self_name
        arg, env = self._bind(fun.arg, env)
        return Fun(fun.self_name, arg, self._norm(fun.body, env, None), fun.arg_type, fun.ret_type)

    def normalize(self, e: Expr, free=()) -> Expr:
        """Normalize a standalone expression whose free variables are `free`."""
        self._used = set(free) | _RESERVED
        return self._norm(e, {v: v for v in free}, None)

    def _finish(self, e: Expr, k: Cont) -> Expr:
        return e if k is None else k(e)

    def _name_of(self, e: Expr, env, k: Callable[[Var], Expr]) -> Expr:
        """Normalize `e` and hand a variable holding its value to `k`."""
        def bind(value: Expr) -> Expr:
            if isinstance(value, Var):
                return k(value)
            tmp = self.fresh()
            self._used.add(tmp)
            return Let(tmp, value, k(Var(tmp)))
        return self._norm(e, env, bind)

    def _norm(self, e: Expr, env: Dict[str, str], k: Cont) -> Expr:
        if isinstance(e, Var):
            return self._finish(Var(env.get(e.name, e.name)), k)
        if isinstance(e, (BoolLit, Nil, Tick)):
            return self._finish(e, k)
        if isinstance(e, Cons):
            return self._name_of(e.head, env, lambda h: self._name_of(
                e.tail, env, lambda t: self._finish(Cons(h, t), k)))
        if isinstance(e, App):
            return self._name_of(e.fn, env, lambda f: self._name_of(
                e.arg, env, lambda x: self._finish(App(f, x), k)))
        if isinstance(e, Pair):
            return self._name_of(e.fst, env, lambda a: self._name_of(
                e.snd, env, lambda b: self._finish(Pair(a, b), k)))
        if isinstance(e, Let):
            def body(bound: Expr) -> Expr:
                name, inner = self._bind(e.name, env)
                return Let(name, bound, self._norm(e.body, inner, k))
            return self._norm(e.bound, env, body)
        if isinstance(e, If):
            return self._name_of(e.cond, env, lambda c: self._finish(
                If(c, self._norm(e.then_, env, None), self._norm(e.orelse, env, None)), k))
        if isinstance(e, CaseList):
            def case(s: Var) -> Expr:
                nil_branch = self._norm(e.nil_branch, env, None)
                head, inner = self._bind(e.head, env)
                tail, inner = self._bind(e.tail, inner)
                return self._finish(CaseList(s, nil_branch, head, tail,
                                             self._norm(e.cons_branch, inner, None)), k)
            return self._name_of(e.scrutinee, env, case)
        if isinstance(e, CasePair):
            def case_pair(s: Var) -> Expr:
                fst, inner = self._bind(e.fst, env)
                snd, inner = self._bind(e.snd, inner)
                return self._finish(CasePair(s, fst, snd, self._norm(e.body, inner, None)), k)
            return self._name_of(e.scrutinee, env, case_pair)
        if isinstance(e, Fun):
            self_name, inner = self._bind(e.self_name, env)
            arg, inner = self._bind(e.arg, inner)
            return self._finish(Fun(self_name, arg, self._norm(e.body, inner, None),
                                    e.arg_type, e.ret_type), k)
        raise TypeError('Not an expression: %r' % (e,))


def let_normalize(e: Expr, free=()) -> Expr:
    """Let-normal form of a standalone expression."""
    return Normalizer().normalize(e, free)


def normalize_program(program: Program) -> Program:
    """Let-normal form of every declaration; top-level names are kept."""
    normalizer = Normalizer()
    names = program.names
    out = []
    for d in program.decls:
        others = [n for n in names if n != d.self_name]
        fun = normalizer.normalize_decl(Fun(d.self_name, d.arg, d.body, d.arg_type, d.ret_type), others)
        out.append(fun)
    return program.replace(out)

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
Macro-expansion of higher-order functions.

A top-level declaration whose body is itself a function,
``fun map f = fun go l = ...``, is a template. Each application of a
template to a top-level first-order function ``g`` is replaced by a
first-order specialization ``map_g`` whose body is the inner function with
``f`` replaced by ``g``. Templates are removed afterwards, so inference only
sees first-order code.
"""

from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var, binders)
from lincost.mapinfer.derive import UnsupportedHigherOrder
from lincost.utils import logging

Visit = Callable[[Expr, FrozenSet[str]], Optional[Expr]]


def transform(e: Expr, visit: Visit, bound: FrozenSet[str] = frozenset()) -> Expr:
    """Rebuild `e` bottom-up; `visit` may replace a node given the names bound around it."""
    out = visit(e, bound)
    if out is not None:
        return out
    if isinstance(e, (Var, BoolLit, Nil, Tick)):
        return e
    if isinstance(e, If):
        return If(transform(e.cond, visit, bound), transform(e.then_, visit, bound),
                  transform(e.orelse, visit, bound))
    if isinstance(e, Cons):
        return Cons(transform(e.head, visit, bound), transform(e.tail, visit, bound))
    if isinstance(e, App):
        return App(transform(e.fn, visit, bound), transform(e.arg, visit, bound))
    if isinstance(e, Pair):
        return Pair(transform(e.fst, visit, bound), transform(e.snd, visit, bound))
    if isinstance(e, Let):
        return Let(e.name, transform(e.bound, visit, bound), transform(e.body, visit, bound | {e.name}))
    if isinstance(e, CaseList):
        return CaseList(transform(e.scrutinee, visit, bound), transform(e.nil_branch, visit, bound),
                        e.head, e.tail, transform(e.cons_branch, visit, bound | {e.head, e.tail}))
    if isinstance(e, CasePair):
        return CasePair(transform(e.scrutinee, visit, bound), e.fst, e.snd,
                        transform(e.body, visit, bound | {e.fst, e.snd}))
    if isinstance(e, Fun):
        return Fun(e.self_name, e.arg, transform(e.body, visit, bound | {e.self_name, e.arg}),
                   e.arg_type, e.ret_type)
    raise TypeError('Not an expression: %r' % (e,))


def rename_free(e: Expr, mapping: Dict[str, str]) -> Expr:
    """Replace free occurrences of the variables in `mapping`."""
    def visit(node, bound):
        if isinstance(node, Var) and node.name in mapping and node.name not in bound:
            return Var(mapping[node.name])
        return None
    return transform(e, visit)


def is_template(decl: Fun) -> bool:
    """Whether `decl` is a curried higher-order declaration."""
    return isinstance(decl.body, Fun)


class _Expander:

    def __init__(self, program: Program):
        self._program = program
        self._templates = {d.self_name: d for d in program.decls if is_template(d)}
        self._functions = {d.self_name for d in program.decls if not is_template(d)}
        self._taken = set(program.names)
        self._specialized: Dict[Tuple[str, str], str] = {}
        self._pending: List[Tuple[str, str, str]] = []

    def _fresh(self, base: str) -> str:
        name, n = base, 2
        while name in self._taken:
            name = '%s_%d' % (base, n)
            n += 1
        self._taken.add(name)
        return name

    def _specialize(self, template: str, arg: Expr, bound) -> str:
        if not isinstance(arg, Var) or arg.name in bound or arg.name not in self._functions:
            raise UnsupportedHigherOrder('Argument %r of %s does not name a top-level function' % (arg, template))
        key = (template, arg.name)
        if key not in self._specialized:
            self._specialized[key] = self._fresh('%s_%s' % key)
            self._pending.append((template, arg.name, self._specialized[key]))
        return self._specialized[key]

    def _visit(self, node: Expr, bound) -> Optional[Expr]:
        if isinstance(node, App) and isinstance(node.fn, Var) and node.fn.name in self._templates \
                and node.fn.name not in bound:
            return Var(self._specialize(node.fn.name, node.arg, bound))
        if isinstance(node, Var) and node.name in self._templates and node.name not in bound:
            raise UnsupportedHigherOrder('Higher-order function %s is used without a static argument' % node.name)
        return None

    def _instance(self, template: str, g: str, name: str) -> Fun:
        decl = self._templates[template]
        inner = decl.body
        if g in set(binders(inner.body)):
            raise UnsupportedHigherOrder('Specializing %s to %s would capture %s' % (template, g, g))
        body = rename_free(inner.body, {decl.arg: g, inner.self_name: name})
        logging.debug('Specialized %s to %s as %s' % (template, g, name))
        return Fun(name, inner.arg, transform(body, self._visit, frozenset({name, inner.arg})),
                   inner.arg_type, inner.ret_type)

    def expand(self) -> Program:
        decls = [Fun(d.self_name, d.arg, transform(d.body, self._visit, frozenset({d.self_name, d.arg})),
                     d.arg_type, d.ret_type)
                 for d in self._program.decls if not is_template(d)]
        while self._pending:
            decls.append(self._instance(*self._pending.pop(0)))
        return self._program.replace(decls)


def expand_higher_order(program: Program) -> Program:
    """
    First-order version of `program`; programs without templates are returned unchanged.

    Raises:
        UnsupportedHigherOrder: a template is applied to something other than
            the name of a top-level first-order function.
    """
    if not any(is_template(d) for d in program.decls):
        return program
    return _Expander(program).expand()

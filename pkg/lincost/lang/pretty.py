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

"""Canonical pretty-printer and debug JSON dump of the AST."""

import dataclasses
from fractions import Fraction

from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var)

_STEP = '  '


def _is_atom(e: Expr) -> bool:
    return isinstance(e, (Var, BoolLit, Nil, Pair))


def _atom(e: Expr, ind: str) -> str:
    text = _expr(e, ind)
    return text if _is_atom(e) else '(%s)' % text


def _app_level(e: Expr, ind: str) -> str:
    if isinstance(e, App):
        return '%s %s' % (_app_level(e.fn, ind), _atom(e.arg, ind))
    return _atom(e, ind)


def _fun(e: Fun, ind: str) -> str:
    arg = e.arg if e.arg_type is None else '(%s : %s)' % (e.arg, e.arg_type)
    ret = '' if e.ret_type is None else ' : %s' % e.ret_type
    inner = ind + _STEP
    return 'fun %s %s%s =\n%s%s' % (e.self_name, arg, ret, inner, _expr(e.body, inner))


def _expr(e: Expr, ind: str) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, BoolLit):
        return 'true' if e.value else 'false'
    if isinstance(e, Nil):
        return '[]'
    if isinstance(e, Tick):
        return 'tick %s' % e.cost
    if isinstance(e, Pair):
        return '(%s, %s)' % (_expr(e.fst, ind), _expr(e.snd, ind))
    if isinstance(e, Cons):
        return '%s :: %s' % (_app_level(e.head, ind), _expr(e.tail, ind))
    if isinstance(e, App):
        return _app_level(e, ind)
    if isinstance(e, Let):
        binder = '()' if e.name == '_' else e.name
        return 'let %s = %s in\n%s%s' % (binder, _expr(e.bound, ind + _STEP), ind, _expr(e.body, ind))
    if isinstance(e, If):
        inner = ind + _STEP
        return 'if %s\n%sthen %s\n%selse %s' % (_expr(e.cond, inner), inner, _expr(e.then_, inner),
                                                 inner, _expr(e.orelse, inner))
    if isinstance(e, CaseList):
        inner = ind + _STEP
        return 'case %s of\n%s| [] -> %s\n%s| %s :: %s -> %s' % (
            _expr(e.scrutinee, inner), ind, _expr(e.nil_branch, inner),
            ind, e.head, e.tail, _expr(e.cons_branch, inner))
    if isinstance(e, CasePair):
        inner = ind + _STEP
        return 'case %s of\n%s| (%s, %s) -> %s' % (_expr(e.scrutinee, inner), ind, e.fst, e.snd,
                                                   _expr(e.body, inner))
    if isinstance(e, Fun):
        return _fun(e, ind)
    raise TypeError('Not an expression: %r' % (e,))


def pretty_print(e) -> str:
    """Canonical source text of an expression or a program; `parse` reads it back unchanged."""
    if isinstance(e, Program):
        return '\n\n'.join(_fun(d, '') for d in e.decls) + '\n'
    return _expr(e, '')


def ast_to_json(e):
    """One object per node with a ``kind`` tag; used by ``analyze --dump-ast``."""
    if isinstance(e, Program):
        return {'kind': 'Program', 'decls': [ast_to_json(d) for d in e.decls]}
    out = {'kind': type(e).__name__}
    for f in dataclasses.fields(e):
        v = getattr(e, f.name)
        if dataclasses.is_dataclass(v) and not isinstance(v, type) and f.name not in ('arg_type', 'ret_type'):
            out[f.name] = ast_to_json(v)
        elif isinstance(v, Fraction):
            out[f.name] = str(v)
        elif v is not None and f.name in ('arg_type', 'ret_type'):
            out[f.name] = str(v)
        else:
            out[f.name] = v
    return out

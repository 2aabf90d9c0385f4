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
Abstract syntax of the analyzed language.

Before let-normalization every subexpression slot may hold any expression;
afterwards the slots the core grammar restricts to variables (condition,
cons cells, scrutinees, function and argument of an application, pair
components) hold `Var` nodes.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Set, Tuple, Union

from lincost.lang.types import Type


@dataclass(frozen=True)
class BoolLit:
    """``true`` / ``false``."""

    value: bool


@dataclass(frozen=True)
class Var:
    """Variable occurrence."""

    name: str


@dataclass(frozen=True)
class If:
    """``if cond then then_ else orelse``."""

    cond: 'Expr'
    then_: 'Expr'
    orelse: 'Expr'


@dataclass(frozen=True)
class Nil:
    """``[]``."""


@dataclass(frozen=True)
class Cons:
    """``head :: tail``."""

    head: 'Expr'
    tail: 'Expr'


@dataclass(frozen=True)
class CaseList:
    """``case scrutinee of [] -> nil_branch | head :: tail -> cons_branch``."""

    scrutinee: 'Expr'
    nil_branch: 'Expr'
    head: str
    tail: str
    cons_branch: 'Expr'


@dataclass(frozen=True)
class Let:
    """``let name = bound in body``."""

    name: str
    bound: 'Expr'
    body: 'Expr'


@dataclass(frozen=True)
class Fun:
    """Recursive function ``fun self_name arg = body``; annotations are optional base types."""

    self_name: str
    arg: str
    body: 'Expr'
    arg_type: Optional[Type] = None
    ret_type: Optional[Type] = None


@dataclass(frozen=True)
class App:
    """``fn arg``."""

    fn: 'Expr'
    arg: 'Expr'


@dataclass(frozen=True)
class Tick:
    """``tick cost``: charges `cost` (may be negative) and evaluates to ``true``."""

    cost: Fraction


@dataclass(frozen=True)
class Pair:
    """``(fst, snd)``."""

    fst: 'Expr'
    snd: 'Expr'


@dataclass(frozen=True)
class CasePair:
    """``case scrutinee of (fst, snd) -> body``."""

    scrutinee: 'Expr'
    fst: str
    snd: str
    body: 'Expr'


Expr = Union[BoolLit, Var, If, Nil, Cons, CaseList, Let, Fun, App, Tick, Pair, CasePair]


@dataclass(frozen=True)
class Program:
    """Top-level function declarations, all mutually in scope."""

    decls: Tuple[Fun, ...]

    @property
    def names(self):
        """Declared names in order."""
        return [d.self_name for d in self.decls]

    def get(self, name: str) -> Fun:
        """The declaration of `name`."""
        for d in self.decls:
            if d.self_name == name:
                return d
        raise KeyError('No function named %r' % name)

    def replace(self, decls) -> 'Program':
        """Same program with other declarations."""
        return Program(tuple(decls))


def children(e: Expr) -> Iterator[Expr]:
    """Direct subexpressions."""
    if isinstance(e, If):
        yield from (e.cond, e.then_, e.orelse)
    elif isinstance(e, Cons):
        yield from (e.head, e.tail)
    elif isinstance(e, CaseList):
        yield from (e.scrutinee, e.nil_branch, e.cons_branch)
    elif isinstance(e, Let):
        yield from (e.bound, e.body)
    elif isinstance(e, Fun):
        yield e.body
    elif isinstance(e, App):
        yield from (e.fn, e.arg)
    elif isinstance(e, Pair):
        yield from (e.fst, e.snd)
    elif isinstance(e, CasePair):
        yield from (e.scrutinee, e.body)


def walk(e: Expr) -> Iterator[Expr]:
    """Pre-order traversal."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(list(children(node))))


def free_vars(e: Expr) -> Set[str]:
    """Free variables of `e`."""
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, CaseList):
        return free_vars(e.scrutinee) | free_vars(e.nil_branch) | (free_vars(e.cons_branch) - {e.head, e.tail})
    if isinstance(e, Let):
        return free_vars(e.bound) | (free_vars(e.body) - {e.name})
    if isinstance(e, Fun):
        return free_vars(e.body) - {e.self_name, e.arg}
    if isinstance(e, CasePair):
        return free_vars(e.scrutinee) | (free_vars(e.body) - {e.fst, e.snd})
    out = set()
    for c in children(e):
        out |= free_vars(c)
    return out


def is_let_normal(e: Expr) -> bool:
    """Whether every variable-only slot holds a variable."""
    for node in walk(e):
        if isinstance(node, If) and not isinstance(node.cond, Var):
            return False
        if isinstance(node, (Cons, Pair, App)) and not all(isinstance(c, Var) for c in children(node)):
            return False
        if isinstance(node, (CaseList, CasePair)) and not isinstance(node.scrutinee, Var):
            return False
    return True


def binders(e: Expr) -> Iterator[str]:
    """Every name bound inside `e` (including function self names and arguments)."""
    for node in walk(e):
        if isinstance(node, Let):
            yield node.name
        elif isinstance(node, CaseList):
            yield from (node.head, node.tail)
        elif isinstance(node, CasePair):
            yield from (node.fst, node.snd)
        elif isinstance(node, Fun):
            yield from (node.self_name, node.arg)

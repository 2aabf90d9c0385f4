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
Base and cost-free types of the analyzed language.

The same classes serve both the base typechecker and the cost-free system: a
cost-free function type is a `FunT` whose `mat` names the matrix of its
potential transformation.
"""

import itertools
from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class BoolT:
    """Booleans."""

    def __str__(self):
        return 'bool'


@dataclass(frozen=True)
class AlphaT:
    """The single abstract element type."""

    def __str__(self):
        return "'a"


@dataclass(frozen=True)
class ListT:
    """Lists of `elem`."""

    elem: 'Type'

    def __str__(self):
        inner = str(self.elem)
        if isinstance(self.elem, (PairT, FunT)):
            inner = '(%s)' % inner
        return '%s list' % inner


@dataclass(frozen=True)
class PairT:
    """Pairs."""

    fst: 'Type'
    snd: 'Type'

    def __str__(self):
        def part(t):
            return '(%s)' % t if isinstance(t, (PairT, FunT)) else str(t)
        return '%s * %s' % (part(self.fst), part(self.snd))


@dataclass(frozen=True)
class FunT:
    """Functions; `mat` is the handle of the matrix in the cost-free system."""

    arg: 'Type'
    ret: 'Type'
    mat: Optional[str] = None

    def __str__(self):
        arg = '(%s)' % self.arg if isinstance(self.arg, FunT) else str(self.arg)
        return '%s -> %s' % (arg, self.ret)


_var_ids = itertools.count()


@dataclass(frozen=True)
class TVar:
    """Unification variable of the base typechecker."""

    id: int

    @classmethod
    def fresh(cls):
        """A never-before-used variable."""
        return cls(next(_var_ids))

    def __str__(self):
        return "'t%d" % self.id


Type = Union[BoolT, AlphaT, ListT, PairT, FunT, TVar]

BOOL = BoolT()
ALPHA = AlphaT()


def strip_handles(t: Type) -> Type:
    """Drop matrix handles, leaving the base type."""
    if isinstance(t, FunT):
        return FunT(strip_handles(t.arg), strip_handles(t.ret))
    if isinstance(t, ListT):
        return ListT(strip_handles(t.elem))
    if isinstance(t, PairT):
        return PairT(strip_handles(t.fst), strip_handles(t.snd))
    return t


def is_first_order(t: Type) -> bool:
    """Whether no function type occurs inside `t`."""
    if isinstance(t, FunT):
        return False
    if isinstance(t, ListT):
        return is_first_order(t.elem)
    if isinstance(t, PairT):
        return is_first_order(t.fst) and is_first_order(t.snd)
    return True

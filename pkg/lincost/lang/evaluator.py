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

"""Big-step evaluator with a step budget and a tick cost counter."""

import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from lincost.const import ENV
from lincost.lang.errors import BudgetExceeded, EvaluationError, UnboundVariableError
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var, free_vars)
from lincost.lang.values import FALSE, NIL, TRUE, VBool, VClosure, VCons, VNil, VPair, Value

_RECURSION_LIMIT = 50000


@contextmanager
def _deep_recursion(limit=_RECURSION_LIMIT):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class Evaluator:
    """
    Evaluates expressions of the analyzed language.

    Every rule application counts one step against the budget. Ticks add
    their cost to a running total; `net_cost` is the sum and `peak_cost` the
    largest running total seen, the resource high-water mark.
    """

    def __init__(self, step_budget: Optional[int] = None, globals_: Optional[Mapping[str, Value]] = None):
        self.__budget = ENV.LINCOST_STEP_BUDGET.val if step_budget is None else step_budget
        self.__globals: Dict[str, Value] = dict(globals_ or {})
        self.__free_cache: Dict[int, Tuple[str, ...]] = {}
        self.steps = 0
        self.net_cost = Fraction(0)
        self.peak_cost = Fraction(0)

    @property
    def step_budget(self):
        """Maximum number of rule applications."""
        return self.__budget

    @property
    def globals(self):
        """Top-level closures visible from every body."""
        return self.__globals

    def bind_program(self, program: Program):
        """Make every declaration of `program` available as a global closure."""
        for d in program.decls:
            self.__globals[d.self_name] = self.closure({}, d)

    def closure(self, env: Mapping[str, Value], fun: Fun) -> VClosure:
        """Close `fun` over the variables of `env` it mentions."""
        key = id(fun)
        if key not in self.__free_cache:
            self.__free_cache[key] = tuple(sorted(free_vars(fun)))
        captured = {v: env[v] for v in self.__free_cache[key] if v in env}
        return VClosure(captured, fun.self_name, fun.arg, fun.body)

    def _lookup(self, env, name):
        if name in env:
            return env[name]
        if name in self.__globals:
            return self.__globals[name]
        raise UnboundVariableError(name)

    def _tick(self, cost: Fraction):
        self.net_cost += cost
        self.peak_cost = max(self.peak_cost, self.net_cost)

    def run(self, env: Mapping[str, Value], e: Expr) -> Value:
        """Evaluate `e` under `env`."""
        with _deep_recursion():
            return self._eval(dict(env), e)

    def apply(self, f: Value, arg: Value) -> Value:
        """Apply a closure to an argument."""
        with _deep_recursion():
            return self._apply(f, arg)

    def _apply(self, f: Value, arg: Value) -> Value:
        if not isinstance(f, VClosure):
            raise EvaluationError('Application of a non-function value %s' % (f,))
        inner = dict(f.env)
        inner[f.self_name] = f
        inner[f.arg] = arg
        return self._eval(inner, f.body)

    def _eval(self, env: Dict[str, Value], e: Expr) -> Value:
        self.steps += 1
        if self.steps > self.__budget:
            raise BudgetExceeded(self.__budget)
        if isinstance(e, Var):
            return self._lookup(env, e.name)
        if isinstance(e, BoolLit):
            return TRUE if e.value else FALSE
        if isinstance(e, Nil):
            return NIL
        if isinstance(e, Tick):
            self._tick(e.cost)
            return TRUE
        if isinstance(e, Cons):
            head = self._eval(env, e.head)
            tail = self._eval(env, e.tail)
            if not isinstance(tail, (VNil, VCons)):
                raise EvaluationError('Cons onto a non-list value %s' % (tail,))
            return VCons(head, tail)
        if isinstance(e, Pair):
            return VPair(self._eval(env, e.fst), self._eval(env, e.snd))
        if isinstance(e, If):
            cond = self._eval(env, e.cond)
            if not isinstance(cond, VBool):
                raise EvaluationError('Condition is not a boolean: %s' % (cond,))
            return self._eval(env, e.then_ if cond.value else e.orelse)
        if isinstance(e, Let):
            bound = self._eval(env, e.bound)
            inner = dict(env)
            inner[e.name] = bound
            return self._eval(inner, e.body)
        if isinstance(e, CaseList):
            s = self._eval(env, e.scrutinee)
            if isinstance(s, VNil):
                return self._eval(env, e.nil_branch)
            if not isinstance(s, VCons):
                raise EvaluationError('List case on a non-list value %s' % (s,))
            inner = dict(env)
            inner[e.head] = s.head
            inner[e.tail] = s.tail
            return self._eval(inner, e.cons_branch)
        if isinstance(e, CasePair):
            s = self._eval(env, e.scrutinee)
            if not isinstance(s, VPair):
                raise EvaluationError('Pair case on a non-pair value %s' % (s,))
            inner = dict(env)
            inner[e.fst] = s.fst
            inner[e.snd] = s.snd
            return self._eval(inner, e.body)
        if isinstance(e, Fun):
            return self.closure(env, e)
        if isinstance(e, App):
            return self._apply(self._eval(env, e.fn), self._eval(env, e.arg))
        raise EvaluationError('Not an expression: %r' % (e,))


def evaluate(env: Mapping[str, Value], e: Expr, step_budget: Optional[int] = None) -> Value:
    """
    Evaluate `e` under `env`.

    Raises:
        BudgetExceeded: more than `step_budget` rule applications.
        EvaluationError: a dynamic type error.
    """
    return Evaluator(step_budget).run(env, e)


def evaluate_with_cost(env: Mapping[str, Value], e: Expr, step_budget: Optional[int] = None):
    """
    Evaluate `e` and report the tick cost.

    Returns:
        (Value, Fraction): the result and the net cost of the evaluation.
    """
    ev = Evaluator(step_budget)
    value = ev.run(env, e)
    return value, ev.net_cost


def evaluate_program(program: Program, fname: str, arg: Value, step_budget: Optional[int] = None,
                     evaluator: Optional[Evaluator] = None) -> Value:
    """Apply the declaration `fname` of `program` to `arg`."""
    ev = evaluator or Evaluator(step_budget)
    ev.bind_program(program)
    if fname not in ev.globals:
        raise UnboundVariableError(fname)
    return ev.apply(ev.globals[fname], arg)

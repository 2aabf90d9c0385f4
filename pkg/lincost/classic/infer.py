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
Classic resource analysis with annotated types.

Every function body is typed against a symbolic signature. Calls follow the
call-site retyping scheme for cost-free types:

* a call to a function that is not being typed retypes it from scratch at
  the caller's basis, so each call site gets its own signature;
* a recursive call of a function typed with one annotation per list uses
  the signature itself, up to constant potential;
* otherwise the argument pays the signature plus an excess whose highest
  annotation is zero, and the excess is carried by a cost-free copy of the
  function typed at the next smaller basis.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Optional, Union

import numpy as np

from lincost.classic.anntypes import (ABase, AFun, AList, AnnType, APair, ClassicUnsupported, add, annotate,
                                      annotated_potential, fresh_like, list_annotations, pairs, reshape,
                                      substitute, zeroed)
from lincost.classic.count import ConstraintStore
from lincost.const import DEFAULT_WEIGHT_BASE, ENV
from lincost.lang.errors import BudgetExceeded
from lincost.lang.evaluator import Evaluator, evaluate_program
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil, Pair, Program,
                                 Tick, Var, free_vars)
from lincost.lang.typecheck import typecheck
from lincost.lang.types import BOOL
from lincost.lang.values import to_python
from lincost.lp import LinExpr, SolveStatus, solve
from lincost.mapinfer.inference import PreparedProgram, prepare_program
from lincost.mapinfer.oracle import random_value
from lincost.potential import Basis, Index, shift_vector
from lincost.utils import logging
from lincost.utils.fractions import format_fraction, to_fraction


class Mode(Enum):
    """Whether ticks are charged."""

    COST_FREE = 'costfree'
    COSTFUL = 'costful'


class Objective(Enum):
    """What the LP optimizes."""

    OUTPUT = 'output'
    INPUT = 'input'
    MIN_INPUT = 'min-input'


class ClassicStatus(Enum):
    """Outcome of a classic analysis."""

    INFERRED = 'Inferred'
    INFEASIBLE = 'Infeasible'
    SKIPPED = 'Skipped'

    @property
    def ok(self) -> bool:
        """Whether a type was found."""
        return self is ClassicStatus.INFERRED


@dataclass
class ClassicReport:
    """Result of the classic analysis of one function."""

    name: str
    status: ClassicStatus
    mode: Mode
    signature: AFun
    constraints: int = 0
    retypings: int = 0
    diagnostics: List[str] = field(default_factory=list)
    lp_stats: Dict[str, object] = field(default_factory=dict)
    constr_secs: float = 0.0
    solve_secs: float = 0.0

    @property
    def total_secs(self) -> float:
        """Constraint generation plus solving time."""
        return self.constr_secs + self.solve_secs

    @property
    def reallocates(self) -> bool:
        """Whether the solved result type carries any list potential."""
        if self.status is not ClassicStatus.INFERRED:
            return False
        return any(a.constant for _, a in list_annotations(self.signature.ret))

    def to_json(self):
        """Report JSON, shaped like the matrix reports with ``algo: classic``."""
        return {
            'name': self.name,
            'algo': 'classic',
            'status': self.status.value,
            'mode': self.mode.value,
            'type': str(self.signature),
            'constraints': self.constraints,
            'retypings': self.retypings,
            'linear': True,
            'reallocates': self.reallocates,
            'lp_stats': dict(self.lp_stats),
            'diagnostics': list(self.diagnostics),
            'timing': {'constr_secs': self.constr_secs, 'solve_secs': self.solve_secs,
                       'total_secs': self.total_secs},
        }


class Typed(NamedTuple):
    """Annotated result type and the constant potential left after evaluation."""

    type: AnnType
    const: LinExpr


class FunRef(NamedTuple):
    """A local name bound to a top-level function."""

    name: str


class _Frame(NamedTuple):
    fname: str
    sig: AFun
    basis: Basis
    costful: bool


Context = Dict[str, Union[AnnType, FunRef]]


class ClassicInference:
    """
    Generates the classic LP of one analysis.

    Args:
        prepared (PreparedProgram): a first-order, let-normal program.
        basis (Basis): basis of the analyzed function.
        memoize (bool): reuse one signature per (function, basis, mode) instead of
            retyping at every call site.
        max_rows (int): stop keeping the LP (but keep counting) beyond this many rows.
    """

    def __init__(self, prepared: PreparedProgram, basis: Basis, memoize: bool = False,
                 max_rows: Optional[int] = None, name: str = 'classic'):
        self.__prepared = prepared
        self.__basis = basis
        self.__memoize = memoize
        self.__store = ConstraintStore(name, max_rows)
        self.__stack: Dict[str, List[_Frame]] = {}
        self.__memo: Dict[tuple, AFun] = {}
        self.__retypings = 0

    @property
    def store(self) -> ConstraintStore:
        """The constraints generated so far."""
        return self.__store

    @property
    def retypings(self) -> int:
        """Function bodies typed so far, copies included."""
        return self.__retypings

    def _fresh(self) -> LinExpr:
        return self.__store.fresh()

    def _le_all(self, small: AnnType, big: AnnType, origin: str):
        for s, b in pairs(small, big):
            self.__store.le(s, b, origin)

    def _ge_all(self, big: AnnType, small: AnnType, origin: str):
        for s, b in pairs(small, big):
            self.__store.ge(b, s, origin)

    def _eq_all(self, left: AnnType, right: AnnType, origin: str):
        for a, b in pairs(left, right):
            self.__store.eq(a, b, origin)

    def type_function(self, fname: str, basis: Optional[Basis] = None, costful: bool = False) -> AFun:
        """Type the body of `fname` against a fresh signature at `basis`."""
        basis = basis or self.__basis
        key = (fname, basis.bound, costful)
        if self.__memoize and key in self.__memo:
            return self.__memo[key]
        ft = self.__prepared.info.signature(fname)
        sig = AFun(annotate(ft.arg, basis, self._fresh), self._fresh(),
                   annotate(ft.ret, basis, self._fresh), self._fresh())
        if self.__memoize:
            self.__memo[key] = sig
        self._type_body(fname, sig, basis, costful)
        return sig

    def _type_body(self, fname: str, sig: AFun, basis: Basis, costful: bool):
        self.__retypings += 1
        decl = self.__prepared.program.get(fname)
        arg, arg_const = fresh_like(sig.arg, self._fresh), self._fresh()
        self._eq_all(arg, sig.arg, '%s: argument' % fname)
        self.__store.eq(arg_const, sig.arg_const, '%s: argument constant' % fname)
        frame = _Frame(fname, sig, basis, costful)
        frames = self.__stack.setdefault(fname, [])
        frames.append(frame)
        try:
            typed = self._expr(decl.body, {decl.arg: arg}, arg_const, frame)
        finally:
            frames.pop()
        self._le_all(sig.ret, typed.type, '%s: result' % fname)
        self.__store.le(sig.ret_const, typed.const, '%s: result constant' % fname)

    def _join(self, left: Typed, right: Typed, origin: str) -> Typed:
        out = Typed(fresh_like(left.type, self._fresh), self._fresh())
        for branch in (left, right):
            self._le_all(out.type, branch.type, origin)
            self.__store.le(out.const, branch.const, origin)
        return out

    def _resolve(self, ctx: Context, name: str) -> str:
        ref = ctx.get(name)
        if isinstance(ref, FunRef):
            return ref.name
        if ref is None and name in self.__prepared.program.names:
            return name
        raise ClassicUnsupported('%s is not a top-level function' % name)

    def _value(self, ctx: Context, name: str) -> AnnType:
        t = ctx.get(name)
        if t is None or isinstance(t, FunRef):
            raise ClassicUnsupported('Function %s used as a value' % name)
        return t

    def _expr(self, e: Expr, ctx: Context, q: LinExpr, frame: _Frame) -> Typed:
        store, where = self.__store, frame.fname
        if isinstance(e, BoolLit):
            return Typed(ABase(BOOL), q)
        if isinstance(e, Tick):
            if not frame.costful:
                return Typed(ABase(BOOL), q)
            rest = q - e.cost
            store.ge(rest, 0, '%s: tick %s' % (where, format_fraction(e.cost)))
            return Typed(ABase(BOOL), rest)
        if isinstance(e, Var):
            t = self._value(ctx, e.name)
            out = Typed(fresh_like(t, self._fresh), self._fresh())
            self._le_all(out.type, t, '%s: use of %s' % (where, e.name))
            store.le(out.const, q, '%s: use of %s' % (where, e.name))
            return out
        if isinstance(e, Nil):
            return Typed(annotate(self.__prepared.info.type_of(e), frame.basis, self._fresh), q)
        if isinstance(e, Cons):
            return self._cons(e, ctx, q, frame)
        if isinstance(e, Pair):
            fst, snd = self._value(ctx, e.fst.name), self._value(ctx, e.snd.name)
            out = APair(fresh_like(fst, self._fresh), fresh_like(snd, self._fresh))
            if e.fst.name == e.snd.name:
                self._le_all(add(out.fst, out.snd), fst, '%s: shared pair component' % where)
            else:
                self._le_all(out.fst, fst, '%s: pair' % where)
                self._le_all(out.snd, snd, '%s: pair' % where)
            return Typed(out, q)
        if isinstance(e, If):
            left = self._expr(e.then_, ctx, q, frame)
            right = self._expr(e.orelse, ctx, q, frame)
            return self._join(left, right, '%s: if' % where)
        if isinstance(e, CaseList):
            return self._case_list(e, ctx, q, frame)
        if isinstance(e, CasePair):
            pt = self._value(ctx, e.scrutinee.name)
            inner = dict(ctx)
            inner.update({e.scrutinee.name: zeroed(pt), e.fst: pt.fst, e.snd: pt.snd})
            return self._expr(e.body, inner, q, frame)
        if isinstance(e, Let):
            return self._let(e, ctx, q, frame)
        if isinstance(e, App):
            return self._app(e, ctx, q, frame)
        if isinstance(e, Fun):
            raise ClassicUnsupported('Local function %s' % e.self_name)
        raise ClassicUnsupported('Unexpected expression %r' % (e,))

    def _cons(self, e: Cons, ctx: Context, q: LinExpr, frame: _Frame) -> Typed:
        head, tail = self._value(ctx, e.head.name), self._value(ctx, e.tail.name)
        out = fresh_like(tail, self._fresh)
        shifted, gain = shift_vector(out.coeffs, frame.basis)
        for n, a in zip(tail.degrees, tail.anns):
            self.__store.eq(a, shifted.get(n, 0), '%s: cons' % frame.fname)
        self._le_all(out.elem, head, '%s: cons head' % frame.fname)
        self._le_all(out.elem, tail.elem, '%s: cons tail' % frame.fname)
        rest = q - gain
        self.__store.ge(rest, 0, '%s: cons' % frame.fname)
        return Typed(out, rest)

    def _case_list(self, e: CaseList, ctx: Context, q: LinExpr, frame: _Frame) -> Typed:
        lt = self._value(ctx, e.scrutinee.name)
        nil = self._expr(e.nil_branch, ctx, q, frame)
        shifted, gain = shift_vector(lt.coeffs, frame.basis)
        tail = AList(lt.elem, lt.degrees, tuple(LinExpr() + shifted.get(n, 0) for n in lt.degrees))
        inner = dict(ctx)
        inner.update({e.scrutinee.name: zeroed(lt), e.head: lt.elem, e.tail: tail})
        cons = self._expr(e.cons_branch, inner, q + gain, frame)
        return self._join(nil, cons, '%s: case %s' % (frame.fname, e.scrutinee.name))

    def _let(self, e: Let, ctx: Context, q: LinExpr, frame: _Frame) -> Typed:
        if isinstance(e.bound, Fun):
            raise ClassicUnsupported('Local function %s' % e.bound.self_name)
        if isinstance(e.bound, Var) and not isinstance(ctx.get(e.bound.name), (ABase, AList, APair)):
            inner = dict(ctx)
            inner[e.name] = FunRef(self._resolve(ctx, e.bound.name))
            return self._expr(e.body, inner, q, frame)
        first, second = dict(ctx), dict(ctx)
        shared = (free_vars(e.bound) & free_vars(e.body)) - {e.name}
        for v in sorted(shared):
            t = ctx.get(v)
            if t is None or isinstance(t, FunRef):
                continue
            first[v], second[v] = fresh_like(t, self._fresh), fresh_like(t, self._fresh)
            self._eq_all(t, add(first[v], second[v]), '%s: share %s' % (frame.fname, v))
        bound = self._expr(e.bound, first, q, frame)
        second[e.name] = bound.type
        return self._expr(e.body, second, bound.const, frame)

    def _app(self, e: App, ctx: Context, q: LinExpr, frame: _Frame) -> Typed:
        callee = self._resolve(ctx, e.fn.name)
        arg = self._value(ctx, e.arg.name)
        frames = self.__stack.get(callee)
        if callee == frame.fname and frame.basis.length > 1:
            copy = self.type_function(callee, frame.basis.reduced(), costful=False)
            need = AFun(add(frame.sig.arg, copy.arg), frame.sig.arg_const + copy.arg_const,
                        add(frame.sig.ret, copy.ret), frame.sig.ret_const + copy.ret_const)
            return self._call(need, arg, q, frame, 'recursive call of %s' % callee)
        if frames:
            sig = frames[-1].sig
            if not frames[-1].costful:
                sig = self._shifted(sig, callee)
            return self._call(sig, arg, q, frame, 'call of %s' % callee)
        sig = self.type_function(callee, frame.basis, frame.costful)
        return self._call(sig, arg, q, frame, 'call of %s' % callee)

    def _shifted(self, sig: AFun, fname: str) -> AFun:
        """
        `sig` with both constants moved by the same amount, up or down; list annotations stay equal.

        Only cost-free typings admit the move down; a costful call keeps its
        signature and passes surplus constant potential around it.
        """
        arg_const, ret_const = self._fresh(), self._fresh()
        self.__store.eq(ret_const - arg_const, sig.ret_const - sig.arg_const,
                        '%s: recursive call constants' % fname)
        return AFun(sig.arg, arg_const, sig.ret, ret_const)

    def _call(self, sig: AFun, arg: AnnType, q: LinExpr, frame: _Frame, what: str) -> Typed:
        origin = '%s: %s' % (frame.fname, what)
        self._ge_all(arg, sig.arg, origin)
        rest = q - sig.arg_const
        self.__store.ge(rest, 0, origin)
        degrees = tuple(leaf.n for leaf in frame.basis.leaves())
        return Typed(reshape(sig.ret, degrees), rest + sig.ret_const)

    def solve(self):
        """Solve the generated LP; returns (status, solution-or-None, unbounded)."""
        problem = self.__store.problem
        solution = solve(problem)
        unbounded = solution.status is SolveStatus.UNBOUNDED
        if unbounded:
            logging.warning('%s: objective is unbounded, solving for feasibility only' % problem.name)
            problem.set_objective(LinExpr())
            solution = solve(problem)
        return solution, unbounded


def _weight(n: int, basis: Basis, weight_base: int) -> Fraction:
    return Fraction(weight_base) ** Index((), basis.leaf_kind, n).degree


def _weighted(t: AnnType, basis: Basis, weight_base: int) -> LinExpr:
    return LinExpr.sum(a * _weight(n, basis, weight_base) for n, a in list_annotations(t))


def classic_infer(program: Program, fname: str, basis: Basis, mode: Mode = Mode.COST_FREE,
                  objective: Optional[Objective] = None, pin_input: Optional[Mapping[int, object]] = None,
                  pin_output_to_input: bool = False, require_output=None, memoize: bool = False,
                  max_lp_rows: Optional[int] = None, weight_base: int = DEFAULT_WEIGHT_BASE,
                  prepared: Optional[PreparedProgram] = None) -> ClassicReport:
    """
    Infer a classic annotated type for `fname`.

    Args:
        mode (Mode): cost-free (ticks ignored) or costful.
        objective (Objective): defaults to `OUTPUT` when cost-free and `MIN_INPUT` when costful.
            `OUTPUT` maximizes the weighted result annotations from a pinned input,
            `INPUT` maximizes the weighted argument annotations and `MIN_INPUT`
            minimizes the argument annotations and constant for a zero result.
        pin_input (Mapping): degree (or base) to coefficient for every list of the
            argument, constant zero; `OUTPUT` defaults to the unit top annotation.
        pin_output_to_input (bool): result lists carry the annotations of the argument lists.
        require_output: lower bound on the sum of the result's list annotations.
        memoize (bool): one signature per (function, basis, mode) instead of call-site retyping.
        max_lp_rows (int): beyond this many rows only count constraints (status Skipped).

    Returns:
        ClassicReport: the solved signature, or a zero signature when infeasible.

    Raises:
        ClassicUnsupported: local functions or function-typed data.
    """
    costful = mode is Mode.COSTFUL
    if objective is None:
        objective = Objective.MIN_INPUT if costful else Objective.OUTPUT
    start = time.perf_counter()
    prepared = prepared or prepare_program(program)
    inference = ClassicInference(prepared, basis, memoize, max_lp_rows, name='classic_%s' % fname)
    sig = inference.type_function(fname, basis, costful)
    store = inference.store
    count = store.count
    if objective is Objective.OUTPUT and pin_input is None:
        pin_input = {basis.bound: 1}
    if pin_input is not None:
        for n, a in list_annotations(sig.arg):
            store.eq(a, to_fraction(pin_input.get(n, 0)), '%s: pinned input' % fname)
        store.eq(sig.arg_const, 0, '%s: pinned input constant' % fname)
    if pin_output_to_input:
        if type(sig.arg) is not type(sig.ret):
            raise ValueError('pin_output_to_input needs argument and result of the same shape')
        for r, a in pairs(sig.ret, sig.arg):
            store.eq(r, a, '%s: output pinned to input' % fname)
    elif objective is Objective.MIN_INPUT:
        for _, a in list_annotations(sig.ret):
            store.eq(a, 0, '%s: zero output' % fname)
        store.eq(sig.ret_const, 0, '%s: zero output constant' % fname)
    if require_output is not None:
        total = LinExpr.sum(a for _, a in list_annotations(sig.ret))
        store.ge(total, to_fraction(require_output), '%s: required output' % fname)
    constr_secs = time.perf_counter() - start
    report = ClassicReport(fname, ClassicStatus.SKIPPED, mode, sig, constraints=count,
                           retypings=inference.retypings, constr_secs=constr_secs)
    if store.counting_only:
        report.diagnostics.append('LP not solved: more than %d rows' % max_lp_rows)
        logging.info('%s (classic): %d constraints, %d typings, not solved'
                     % (fname, count, inference.retypings))
        return report
    if store.failed:
        report.status = ClassicStatus.INFEASIBLE
        report.signature = _zero_signature(sig)
        report.diagnostics.extend('constant constraint fails: %s' % f for f in store.failed)
        logging.warning('%s (classic): infeasible' % fname)
        return report
    if objective is Objective.OUTPUT:
        goal = _weighted(sig.ret, basis, weight_base) + sig.ret_const
    elif objective is Objective.INPUT:
        goal = _weighted(sig.arg, basis, weight_base)
    else:
        goal = -(_weighted(sig.arg, basis, weight_base) + sig.arg_const)
    store.problem.set_objective(goal)
    logging.debug('LP %s: %d variables, %d rows' % (store.problem.name, len(store.problem.variables),
                                                     len(store.problem)))
    start = time.perf_counter()
    solution, unbounded = inference.solve()
    report.solve_secs = time.perf_counter() - start
    report.lp_stats = {'vars': len(store.problem.variables), 'constraints': len(store.problem),
                       'solve_state': solution.status.value}
    if unbounded:
        report.diagnostics.append('warning: objective unbounded, type is a feasible point only')
    if solution.status is SolveStatus.OPTIMAL:
        report.status = ClassicStatus.INFERRED
        values = solution.assignment
        report.signature = AFun(substitute(sig.arg, values), sig.arg_const.substitute(values),
                                substitute(sig.ret, values), sig.ret_const.substitute(values))
    else:
        report.status = ClassicStatus.INFEASIBLE
        report.signature = _zero_signature(sig)
        report.diagnostics.append('LP infeasible')
    logging.info('%s (classic): %s %s (%d constraints, %d typings)'
                 % (fname, report.status.value, report.signature, count, inference.retypings))
    return report


def _zero_signature(sig: AFun) -> AFun:
    return AFun(zeroed(sig.arg), LinExpr(), zeroed(sig.ret), LinExpr())


class CostViolation(NamedTuple):
    """An input on which the annotated type does not pay for the evaluation."""

    value: object
    phi_in: Fraction
    phi_out: Fraction
    cost: Fraction


def check_costful_soundness(program: Program, fname: str, report: ClassicReport, basis: Basis,
                            samples: int = 100, max_length: int = 12,
                            rng: Optional[np.random.Generator] = None,
                            step_budget: Optional[int] = None) -> List[CostViolation]:
    """
    Sample inputs and report every case with ``Φ_in - Φ_out < net cost``.

    Args:
        report (ClassicReport): an Inferred report of `fname`.
        rng (Generator): defaults to ``default_rng(LINCOST_SEED)``.
    """
    rng = rng if rng is not None else np.random.default_rng(ENV.LINCOST_SEED.val)
    ft = typecheck(program).signature(fname)
    sig = report.signature
    out = []
    for _ in range(samples):
        v = random_value(ft.arg, rng, max_length)
        ev = Evaluator(step_budget)
        try:
            result = evaluate_program(program, fname, v, evaluator=ev)
        except BudgetExceeded:
            continue
        phi_in = annotated_potential(v, sig.arg, basis) + sig.arg_const.constant
        phi_out = annotated_potential(result, sig.ret, basis) + sig.ret_const.constant
        if phi_in - phi_out < ev.net_cost:
            out.append(CostViolation(to_python(v), phi_in, phi_out, ev.net_cost))
    return out

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
Checking and inference of function matrices.

Functions are processed callee first, one strongly connected component of
the call graph at a time. The matrices of a component are symbolic while its
inequalities are generated; callees outside it already have concrete
matrices, so only products of a component's own unknowns can make the
system nonlinear.
"""

import time
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from lincost.const import DEFAULT_WEIGHT_BASE
from lincost.lang.errors import LinCostError
from lincost.lang.normalize import let_normalize, normalize_program
from lincost.lang.syntax import Fun, Program
from lincost.lang.typecheck import TypeInfo, typecheck
from lincost.lang.types import FunT, strip_handles
from lincost.lang.values import VClosure
from lincost.linmap import HavocOnLeft, NonlinearTerm, PMat, ScalarInequality, UnknownId, zero_reallocation
from lincost.lp import LinExpr, LPProblem, SolveStatus, solve
from lincost.mapinfer.callgraph import SCC, topological_sccs
from lincost.mapinfer.constraints import fun_constraints
from lincost.mapinfer.derive import derive, derive_function
from lincost.mapinfer.higher_order import expand_higher_order
from lincost.mapinfer.report import FunReport, FunStatus
from lincost.mapinfer.signatures import concrete_matrix, matrix_indices, reallocates, symbolic_matrix
from lincost.potential import Basis, uses_pair_indices
from lincost.utils import logging


class PreparedProgram(NamedTuple):
    """A first-order, let-normal, typechecked program."""

    program: Program
    info: TypeInfo


def prepare_program(program: Program) -> PreparedProgram:
    """Expand higher-order templates, let-normalize and typecheck."""
    normalized = normalize_program(expand_higher_order(program))
    return PreparedProgram(normalized, typecheck(normalized))


class LPOutcome(NamedTuple):
    """What solving the inequalities of one component produced."""

    status: SolveStatus
    assignment: Dict
    problem: LPProblem
    failed: List[ScalarInequality]
    unbounded: bool


def objective_weight(u: UnknownId, base: int) -> Fraction:
    """``base^(deg row + deg col)``: reallocations between high degrees weigh most."""
    return Fraction(base) ** (u.row.degree + u.col.degree)


def build_problem(name: str, inequalities: Sequence[ScalarInequality],
                  weight_base: Optional[int]) -> Tuple[LPProblem, List[ScalarInequality]]:
    """
    The LP of the non-constant inequalities, and the constant ones that fail.

    Unknowns are free. With `weight_base` the LP maximizes the weighted sum
    of all unknowns.
    """
    problem = LPProblem(name)
    failed = [q for q in inequalities if q.is_constant and not q.holds()]
    rows = [q for q in inequalities if not q.is_constant]
    for q in rows:
        for v in q.to_constraint().variables():
            problem.add_variable(v, nonneg=False)
    for q in rows:
        problem.add_le(q.left, q.right, q.origin)
    if weight_base is not None:
        problem.set_objective(LinExpr.sum(LinExpr.var(u, objective_weight(u, weight_base))
                                          for u in problem.variables))
    return problem, failed


def solve_inequalities(name: str, inequalities: Sequence[ScalarInequality], weight_base: Optional[int]) -> LPOutcome:
    """
    Check constant inequalities exactly and solve the rest as one LP.

    Without `weight_base`, or when the weighted objective is unbounded, any
    feasible point is returned.
    """
    problem, failed = build_problem(name, inequalities, weight_base)
    if failed:
        return LPOutcome(SolveStatus.INFEASIBLE, {}, problem, failed, False)
    logging.debug('LP %s: %d unknowns, %d rows' % (name, len(problem.variables), len(problem)))
    solution = solve(problem)
    unbounded = solution.status is SolveStatus.UNBOUNDED
    if unbounded:
        logging.warning('LP %s: objective is unbounded, solving for feasibility only' % name)
        problem.set_objective(LinExpr())
        solution = solve(problem)
    return LPOutcome(solution.status, solution.assignment, problem, [], unbounded)


PAIR_NOTE = 'note: pair components are indexed with 1. and 2. path segments'


def _lp_stats(outcome: LPOutcome):
    return {'vars': len(outcome.problem.variables), 'constraints': len(outcome.problem),
            'solve_state': outcome.status.value}


class MatrixInference:
    """
    Holds the concrete matrices found so far for one prepared program.

    Args:
        prepared (PreparedProgram): the program.
        basis (Basis): potential basis.
        weight_base (int): base of the objective weights.
        known (Mapping): matrices to use as given instead of inferring them.
    """

    def __init__(self, prepared: PreparedProgram, basis: Basis, weight_base: int = DEFAULT_WEIGHT_BASE,
                 known: Optional[Mapping[str, PMat]] = None):
        self.__prepared = prepared
        self.__basis = basis
        self.__weight_base = weight_base
        self.__matrices: Dict[str, PMat] = {}
        self.__reports: Dict[str, FunReport] = {}
        for name, m in (known or {}).items():
            self.__matrices[name] = self._concrete(name, m)

    @property
    def program(self) -> Program:
        """The prepared program."""
        return self.__prepared.program

    @property
    def matrices(self) -> Dict[str, PMat]:
        """Concrete matrices of the functions processed so far."""
        return dict(self.__matrices)

    @property
    def reports(self) -> Dict[str, FunReport]:
        """Reports of the functions processed so far."""
        return dict(self.__reports)

    def signature(self, fname: str) -> FunT:
        """Base type of a top-level function."""
        return self.__prepared.info.signature(fname)

    def _concrete(self, fname: str, m: PMat) -> PMat:
        ft = self.signature(fname)
        return concrete_matrix(m, ft.arg, ft.ret, self.__basis)

    def _fallback(self, fname: str) -> PMat:
        return self._concrete(fname, zero_reallocation())

    def _indices(self, fname: str):
        ft = self.signature(fname)
        return matrix_indices(ft.arg, ft.ret, self.__basis)

    def _generate(self, members: Iterable[str], matrices: Mapping[str, PMat]):
        """
        Inequalities of `members` under `matrices`.

        Returns:
            (List, Dict, Dict): all inequalities, their count per member and the
            matrices of local functions keyed ``owner.name``.
        """
        basis = self.__basis
        program, info = self.__prepared
        out, counts, local = [], {}, {}
        for f in members:
            def local_matrix(name, arg, ret, owner=f):
                return symbolic_matrix('%s.%s' % (owner, name), arg, ret, basis)

            def local_obligations(fun, ft, m, result, dom, over):
                return fun_constraints(fun.self_name, fun.arg, ft.arg, ft.ret, m, result.S, result.C, dom,
                                       over, basis)

            decl = program.get(f)
            ft = self.signature(f)
            result, over = derive_function(info, program, f, basis, matrices, local_matrix, local_obligations)
            ineqs = fun_constraints(f, decl.arg, ft.arg, ft.ret, matrices[f], result.S, result.C,
                                    program.names, over, basis)
            ineqs += result.obligations
            counts[f] = len(ineqs)
            out.extend(ineqs)
            local.update({'%s.%s' % (f, k): m for k, m in result.local_matrices.items()})
        return out, counts, local

    def _report(self, fname, status, matrix, **kwargs) -> FunReport:
        ft = self.signature(fname)
        if uses_pair_indices(ft.arg) or uses_pair_indices(ft.ret):
            kwargs['diagnostics'] = list(kwargs.get('diagnostics', ())) + [PAIR_NOTE]
        rows, cols = self._indices(fname)
        report = FunReport(fname, status, matrix, rows, cols, reallocates=reallocates(matrix), **kwargs)
        self.__reports[fname] = report
        logging.info('%s: %s (%d constraints)' % (fname, status.value, report.constraints))
        return report

    def infer_scc(self, scc: SCC) -> List[FunReport]:
        """Infer the matrices of one component jointly."""
        members = [f for f in scc.members if f not in self.__matrices]
        if not members:
            return [self.__reports[f] for f in scc.members if f in self.__reports]
        start = time.perf_counter()
        matrices = dict(self.__matrices)
        for f in members:
            ft = self.signature(f)
            matrices[f] = symbolic_matrix(f, ft.arg, ft.ret, self.__basis)
        try:
            ineqs, counts, local = self._generate(members, matrices)
        except NonlinearTerm as e:
            secs = time.perf_counter() - start
            logging.warning('%s: nonlinear constraints (%s), using zero-reallocation matrices'
                            % (', '.join(members), e))
            reports = []
            for f in members:
                self.__matrices[f] = self._fallback(f)
                reports.append(self._report(f, FunStatus.NONLINEAR, self.__matrices[f], linear=False,
                                            diagnostics=['NonlinearTerm: %s' % e], constr_secs=secs))
            return reports
        constr_secs = time.perf_counter() - start
        start = time.perf_counter()
        outcome = solve_inequalities('infer_%s' % '_'.join(members), ineqs, self.__weight_base)
        solve_secs = time.perf_counter() - start
        diagnostics = []
        if outcome.unbounded:
            diagnostics.append('warning: objective unbounded, matrix is a feasible point only')
        reports = []
        for f in members:
            if outcome.status is SolveStatus.OPTIMAL:
                status, m = FunStatus.INFERRED, self._concrete(f, matrices[f].substitute(outcome.assignment))
                notes = list(diagnostics)
            else:
                status, m = FunStatus.INFEASIBLE, self._fallback(f)
                notes = ['LP infeasible'] + ['constant inequality fails: %s' % (q,) for q in outcome.failed]
                logging.warning('%s: no matrix satisfies the constraints, using the zero-reallocation matrix' % f)
            self.__matrices[f] = m
            locals_ = {k: v.substitute(outcome.assignment) for k, v in local.items() if k.startswith(f + '.')}
            reports.append(self._report(f, status, m, constraints=counts[f], diagnostics=notes,
                                        lp_stats=_lp_stats(outcome), constr_secs=constr_secs,
                                        solve_secs=solve_secs, local_matrices=locals_))
        return reports

    def _component_of(self, fname: str) -> Tuple[List[SCC], SCC]:
        before = []
        for scc in topological_sccs(self.program):
            if fname in scc.members:
                return before, scc
            before.append(scc)
        raise KeyError('No function named %r' % fname)

    def infer(self, fname: str) -> FunReport:
        """Infer `fname` after every function it depends on."""
        before, scc = self._component_of(fname)
        for other in before:
            self.infer_scc(other)
        self.infer_scc(scc)
        return self.__reports[fname]

    def infer_all(self) -> Dict[str, FunReport]:
        """Infer every function; reports in declaration order."""
        for scc in topological_sccs(self.program):
            self.infer_scc(scc)
        return {f: self.__reports[f] for f in self.program.names if f in self.__reports}

    def problem(self, fname: str) -> LPProblem:
        """
        The inference LP of the component of `fname`, unsolved.

        Everything the component depends on is inferred first.

        Raises:
            NonlinearTerm: the component's inequalities are not linear.
        """
        before, scc = self._component_of(fname)
        for other in before:
            self.infer_scc(other)
        matrices = dict(self.__matrices)
        for f in scc.members:
            ft = self.signature(f)
            matrices[f] = symbolic_matrix(f, ft.arg, ft.ret, self.__basis)
        ineqs, _, _ = self._generate(scc.members, matrices)
        problem, _ = build_problem('infer_%s' % '_'.join(scc.members), ineqs, self.__weight_base)
        return problem

    def check(self, fname: str, m: PMat) -> FunReport:
        """
        Check a concrete matrix for `fname`.

        Callees are inferred first. Peers in the same component without a known
        matrix stay symbolic and only need to exist.
        """
        before, scc = self._component_of(fname)
        for other in before:
            self.infer_scc(other)
        start = time.perf_counter()
        matrix = self._concrete(fname, m)
        matrices = dict(self.__matrices)
        matrices[fname] = matrix
        members = [fname]
        for g in scc.members:
            if g not in matrices:
                ft = self.signature(g)
                matrices[g] = symbolic_matrix(g, ft.arg, ft.ret, self.__basis)
                members.append(g)
        try:
            ineqs, counts, _ = self._generate(members, matrices)
        except NonlinearTerm as e:
            return self._report(fname, FunStatus.NONLINEAR, matrix, linear=False,
                                diagnostics=['NonlinearTerm: %s' % e],
                                constr_secs=time.perf_counter() - start)
        except HavocOnLeft as e:
            return self._report(fname, FunStatus.REJECTED, matrix, diagnostics=[str(e)],
                                constr_secs=time.perf_counter() - start)
        constr_secs = time.perf_counter() - start
        start = time.perf_counter()
        outcome = solve_inequalities('check_%s' % fname, ineqs, None)
        solve_secs = time.perf_counter() - start
        if outcome.status is SolveStatus.OPTIMAL:
            status, notes = FunStatus.CHECKED, []
        else:
            status = FunStatus.REJECTED
            notes = ['inequality fails: %s' % (q,) for q in outcome.failed] or ['no assignment of local unknowns']
        return self._report(fname, status, matrix, constraints=counts[fname], diagnostics=notes,
                            lp_stats=_lp_stats(outcome), constr_secs=constr_secs, solve_secs=solve_secs)


def check_function(program: Program, fname: str, m: PMat, basis: Basis,
                   known: Optional[Mapping[str, PMat]] = None) -> FunReport:
    """
    Check that `m` is a valid matrix for `fname`.

    Callees without a matrix in `known` are inferred first.

    Returns:
        FunReport: Checked, or Rejected with one diagnostic per failing inequality.
    """
    return MatrixInference(prepare_program(program), basis, known=known).check(fname, m)


def infer_function(program: Program, fname: str, basis: Basis, weight_base: int = DEFAULT_WEIGHT_BASE,
                   known: Optional[Mapping[str, PMat]] = None) -> FunReport:
    """Infer the matrix of `fname` (and of everything it calls)."""
    return MatrixInference(prepare_program(program), basis, weight_base, known).infer(fname)


def infer_program(program: Program, basis: Basis, weight_base: int = DEFAULT_WEIGHT_BASE) -> Dict[str, FunReport]:
    """Infer every function of `program` in topological order of its call graph."""
    return MatrixInference(prepare_program(program), basis, weight_base).infer_all()


def check_closure(closure: VClosure, ft: FunT, m: PMat, basis: Basis, program: Optional[Program] = None) -> bool:
    """
    Whether `m` types the closure as ``ft`` in the sense of value well-formedness.

    Captured values contribute their types only; captured closures are not
    supported. Global functions of `program` are applied with their inferred
    matrices.
    """
    from lincost.lang.wellformed import type_of_value

    ctx, matrices = {}, {}
    if program is not None:
        inference = MatrixInference(prepare_program(program), basis)
        inference.infer_all()
        matrices = inference.matrices
        ctx.update({n: inference.signature(n) for n in inference.program.names})
    for name, v in closure.env.items():
        if isinstance(v, VClosure):
            if name in matrices:
                continue
            return False
        ctx[name] = type_of_value(v)
    fun = Fun(closure.self_name, closure.arg, closure.body, strip_handles(ft.arg), strip_handles(ft.ret))
    fun = let_normalize(fun, free=tuple(ctx))
    try:
        result = derive(ctx, fun, basis, matrices, fixed={fun.self_name: m})
    except LinCostError as e:
        logging.debug('Closure %s is not well-formed: %s' % (closure.self_name, e))
        return False
    return solve_inequalities('closure_%s' % closure.self_name, result.obligations, None).status \
        is SolveStatus.OPTIMAL

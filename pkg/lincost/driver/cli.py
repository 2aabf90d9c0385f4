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
Command-line interface.

Subcommands: ``analyze``, ``check``, ``eval``, ``bench`` and ``export-lp``.
Usage errors exit with 2; failed analyses exit with 1 under ``--strict``,
as do unreadable inputs.
"""

import argparse
import json
import sys
from typing import List, Optional

from lincost.classic import ClassicUnsupported, Mode, check_costful_soundness, classic_infer
from lincost.driver.bench import run_grid
from lincost.driver.config import AnalysisConfig, BenchConfig
from lincost.driver.report import report_json, report_text
from lincost.lang.errors import LinCostError
from lincost.lang.evaluator import Evaluator, evaluate, evaluate_program
from lincost.lang.parser import parse, parse_program
from lincost.lang.pretty import ast_to_json
from lincost.lang.syntax import Program
from lincost.linmap import PMat
from lincost.lp import export_lp
from lincost.mapinfer import FunStatus, MatrixInference, check_soundness, prepare_program
from lincost.potential import Basis
from lincost.utils import logging


def _read_program(path: str) -> Program:
    with open(path, 'r') as f:
        return parse_program(f.read())


def _basis(args) -> Basis:
    return Basis.from_name(args.basis or 'poly', args.degree or 1, args.base or 2)


def _analyze(args) -> int:
    program = _read_program(args.file)
    cfg = AnalysisConfig(args.config, basis=args.basis, degree=args.degree, base=args.base, algo=args.algo,
                         mode=args.mode, strict=args.strict or None, memoize=args.memoize or None)
    prepared = prepare_program(program)
    if args.dump_ast:
        print(json.dumps(ast_to_json(prepared.program), indent=2))
    names = [args.fn] if args.fn else prepared.program.names
    reports, failed = [], False
    if 'new' in cfg.algorithms:
        inference = MatrixInference(prepared, cfg.basis, cfg.weight_base)
        for fname in names:
            report = inference.infer(fname)
            if args.fuzz and report.status.ok:
                violations = check_soundness(prepared.program, fname, report.matrix, cfg.basis, samples=args.fuzz,
                                             step_budget=cfg.step_budget)
                report.diagnostics.extend('soundness violation: input %s, annotation %s' % (v.value, v.annotation)
                                          for v in violations)
                failed = failed or bool(violations)
            failed = failed or not report.status.ok
            reports.append(report)
    if 'classic' in cfg.algorithms:
        mode = Mode(cfg.mode)
        for fname in names:
            try:
                report = classic_infer(program, fname, cfg.basis, mode, memoize=cfg.memoize,
                                       weight_base=cfg.weight_base, prepared=prepared)
            except ClassicUnsupported as e:
                logging.error('%s (classic): %s' % (fname, e))
                failed = True
                continue
            if args.fuzz and mode is Mode.COSTFUL and report.status.ok:
                violations = check_costful_soundness(prepared.program, fname, report, cfg.basis,
                                                     samples=args.fuzz, step_budget=cfg.step_budget)
                report.diagnostics.extend('cost not covered: input %s, cost %s' % (v.value, v.cost)
                                          for v in violations)
                failed = failed or bool(violations)
            failed = failed or not report.status.ok
            reports.append(report)
    print(report_json(reports) if args.format == 'json' else report_text(reports))
    return 1 if failed and cfg.strict else 0


def _check(args) -> int:
    program = _read_program(args.file)
    with open(args.matrix, 'r') as f:
        m = PMat.from_json(json.load(f))
    report = MatrixInference(prepare_program(program), _basis(args)).check(args.fn, m)
    print(report_json([report]) if args.format == 'json' else report_text([report]))
    return 0 if report.status is FunStatus.CHECKED else 1


def _eval(args) -> int:
    program = _read_program(args.file)
    fname = args.fn or program.names[-1]
    value = evaluate({}, parse(args.input))
    ev = Evaluator(args.step_budget)
    result = evaluate_program(program, fname, value, evaluator=ev)
    print('result: %s' % result)
    print('cost: %s' % ev.net_cost)
    return 0


def _bench(args) -> int:
    d = c = l = None  # noqa: E741
    if args.grid:
        ranges = args.grid.split(',')
        if len(ranges) != 3:
            raise ValueError('--grid needs three ranges, e.g. 1..2,0..1,0..1')
        d, c, l = ranges  # noqa: E741
    cfg = BenchConfig(args.config, d=d, c=c, l=l, basis=args.basis, algorithms=args.algo, timeout=args.timeout,
                      output=args.out, workers=args.workers, max_lp_rows=args.max_lp_rows)
    rows = run_grid(cfg, progress=not args.quiet)
    print('%d rows written to %s' % (len(rows), cfg.output))
    return 0


def _export_lp(args) -> int:
    program = _read_program(args.file)
    problem = MatrixInference(prepare_program(program), _basis(args)).problem(args.fn)
    with open(args.out, 'w') as f:
        export_lp(problem, f)
    logging.info('Wrote %s (%d rows)' % (args.out, len(problem)))
    return 0


def _add_basis_args(parser, defaults=True):
    parser.add_argument('--basis', choices=['poly', 'exp'], default='poly' if defaults else None,
                        help='potential basis')
    parser.add_argument('--degree', type=int, default=None, help='maximum polynomial degree D_max')
    parser.add_argument('--base', type=int, default=None, help='maximum exponential base B_max')


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the `lincost` command."""
    parser = argparse.ArgumentParser(prog='lincost', description='Cost-free resource analysis with linear maps.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('analyze', help='infer matrices (and classic types) for a program')
    p.add_argument('file')
    _add_basis_args(p, defaults=False)
    p.add_argument('--algo', choices=['new', 'classic', 'both'], default=None)
    p.add_argument('--mode', choices=['costfree', 'costful'], default=None, help='classic algorithm only')
    p.add_argument('--format', choices=['json', 'text'], default='json')
    p.add_argument('--strict', action='store_true', help='exit 1 when any function fails')
    p.add_argument('--memoize', action='store_true', help='classic algorithm: reuse retypings')
    p.add_argument('--config', default=None, help='YAML analysis configuration')
    p.add_argument('--fn', default=None, help='analyze only this function')
    p.add_argument('--fuzz', type=int, default=0, metavar='N', help='run N soundness samples per function')
    p.add_argument('--dump-ast', action='store_true', help='print the normalized program as JSON')
    p.set_defaults(handler=_analyze)

    p = sub.add_parser('check', help='check a given matrix for one function')
    p.add_argument('file')
    p.add_argument('--fn', required=True)
    p.add_argument('--matrix', required=True, help='matrix JSON')
    p.add_argument('--format', choices=['json', 'text'], default='json')
    _add_basis_args(p)
    p.set_defaults(handler=_check)

    p = sub.add_parser('eval', help='evaluate a function on an input value')
    p.add_argument('file')
    p.add_argument('--input', required=True, help='value literal, e.g. "[true, false]"')
    p.add_argument('--fn', default=None, help='defaults to the last declaration')
    p.add_argument('--step-budget', type=int, default=None)
    p.set_defaults(handler=_eval)

    p = sub.add_parser('bench', help='run the synthetic benchmark grid')
    p.add_argument('--grid', default=None, help='dLO..dHI,cLO..cHI,lLO..lHI')
    p.add_argument('--timeout', type=float, default=None, help='seconds per cell')
    p.add_argument('--out', default=None, help='CSV path')
    p.add_argument('--algo', choices=['new', 'classic', 'both'], default=None)
    p.add_argument('--basis', choices=['poly', 'exp'], default=None)
    p.add_argument('--config', default=None, help='YAML bench configuration')
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--max-lp-rows', type=int, default=None)
    p.add_argument('--quiet', action='store_true', help='no progress bar')
    p.set_defaults(handler=_bench)

    p = sub.add_parser('export-lp', help='write the inference LP of one function')
    p.add_argument('file')
    p.add_argument('--fn', required=True)
    p.add_argument('--out', required=True)
    _add_basis_args(p)
    p.set_defaults(handler=_export_lp)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (LinCostError, ValueError, KeyError, OSError) as e:
        logging.error('%s: %s' % (type(e).__name__, e))
        return 1


if __name__ == '__main__':
    sys.exit(main())

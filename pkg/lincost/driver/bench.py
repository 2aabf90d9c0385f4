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
Benchmark harness over the synthetic grid.

Every (d, c, l, algorithm) cell runs in its own process under a wall-clock
budget. Rows record constraint counts and timings; timed out cells are kept
with status ``timeout``.
"""

import csv
import multiprocessing
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from lincost.classic import ClassicStatus, classic_infer
from lincost.driver.config import BenchConfig
from lincost.driver.synthetic import synthetic_name, synthetic_program
from lincost.lang.errors import LinCostError
from lincost.mapinfer import FunStatus, MatrixInference, prepare_program
from lincost.potential import Basis, binom
from lincost.utils import logging

CSV_HEADER = ('d', 'c', 'l', 'algo', 'constr_secs', 'solve_secs', 'total_secs', 'constrs', 'status')

OK = 'ok'
INFEASIBLE = 'infeasible'
NONLINEAR = 'nonlinear'
TIMEOUT = 'timeout'
SKIPPED = 'skipped'
ERROR = 'error'


@dataclass
class BenchRow:
    """One measured grid cell."""

    d: int
    c: int
    l: int  # noqa: E741
    algo: str
    constr_secs: float
    solve_secs: float
    total_secs: float
    constrs: Optional[int]
    status: str
    # function bodies the classic analysis typed; not part of the CSV
    typings: Optional[int] = None

    def to_csv(self) -> List[str]:
        """CSV fields; seconds to microseconds, unknown counts empty."""
        return [str(self.d), str(self.c), str(self.l), self.algo, '%.6f' % self.constr_secs,
                '%.6f' % self.solve_secs, '%.6f' % self.total_secs,
                '' if self.constrs is None else str(self.constrs), self.status]

    @classmethod
    def from_csv(cls, fields: Sequence[str]) -> 'BenchRow':
        """Inverse of `to_csv`."""
        d, c, l, algo, constr_secs, solve_secs, total_secs, constrs, status = fields  # noqa: E741
        return cls(int(d), int(c), int(l), algo, float(constr_secs), float(solve_secs), float(total_secs),
                   int(constrs) if constrs else None, status)


def classic_bound(d: int, c: int, l: int) -> int:  # noqa: E741
    """
    Closed-form overapproximation ``d c^(l+1) (binom(d+l+1, d) - 1)`` of the classic recurrence.

    The recurrence counts typings of function bodies, each charged ``c d``
    relations up to a constant factor. The harness therefore holds the
    measured number of typings to this bound; raw constraint counts carry
    the per-typing constant and are reported beside it.
    """
    if c < 1:
        raise ValueError('classic_bound needs c >= 1, got %d' % c)
    return d * c ** (l + 1) * (binom(d + l + 1, d) - 1)


def linear_growth_fit(ls: Sequence[int], counts: Sequence[int]) -> Tuple[float, float, float]:
    """
    Least-squares line through (l, count).

    Returns:
        (float, float, float): slope, intercept and the largest absolute residual
        relative to the largest count.
    """
    x = np.asarray(ls, dtype=float)
    y = np.asarray(counts, dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    residual = np.max(np.abs(y - (slope * x + intercept))) / max(float(np.max(np.abs(y))), 1.0)
    return float(slope), float(intercept), float(residual)


def _new_cell(program, basis: Basis):
    start = time.perf_counter()
    reports = MatrixInference(prepare_program(program), basis).infer_all().values()
    total = time.perf_counter() - start
    statuses = {r.status for r in reports}
    if FunStatus.NONLINEAR in statuses:
        status = NONLINEAR
    elif FunStatus.INFEASIBLE in statuses:
        status = INFEASIBLE
    else:
        status = OK
    return (sum(r.constr_secs for r in reports), sum(r.solve_secs for r in reports), total,
            sum(r.constraints for r in reports), status)


_CLASSIC_STATUS = {ClassicStatus.INFERRED: OK, ClassicStatus.INFEASIBLE: INFEASIBLE, ClassicStatus.SKIPPED: SKIPPED}


def _classic_cell(program, fname: str, basis: Basis, max_lp_rows: Optional[int]):
    start = time.perf_counter()
    report = classic_infer(program, fname, basis, max_lp_rows=max_lp_rows)
    total = time.perf_counter() - start
    return (report.constr_secs, report.solve_secs, total, report.constraints, _CLASSIC_STATUS[report.status],
            report.retypings)


def run_cell(d: int, c: int, l: int, algo: str, basis: Basis,  # noqa: E741
             max_lp_rows: Optional[int] = None) -> BenchRow:
    """Measure one cell in the current process."""
    program = synthetic_program(c, l)
    if algo == 'new':
        measured = _new_cell(program, basis)
    elif algo == 'classic':
        measured = _classic_cell(program, synthetic_name(l), basis, max_lp_rows)
    else:
        raise ValueError('Unknown algorithm %r' % algo)
    return BenchRow(d, c, l, algo, *measured)


def _cell_worker(queue, args):
    try:
        queue.put(astuple(run_cell(*args)))
    except LinCostError as e:
        logging.error('Cell %s failed: %s' % (args[:4], e))
        d, c, l, algo = args[:4]  # noqa: E741
        queue.put(astuple(BenchRow(d, c, l, algo, 0.0, 0.0, 0.0, None, ERROR)))


def run_cell_with_timeout(d: int, c: int, l: int, algo: str, basis: Basis, timeout: float,  # noqa: E741
                          max_lp_rows: Optional[int] = None) -> BenchRow:
    """Measure one cell in a child process, giving up after `timeout` seconds."""
    queue = multiprocessing.Queue()
    proc = multiprocessing.Process(target=_cell_worker, args=(queue, (d, c, l, algo, basis, max_lp_rows)))
    start = time.perf_counter()
    proc.start()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        logging.warning('Cell d=%d c=%d l=%d %s timed out after %.0fs' % (d, c, l, algo, timeout))
        return BenchRow(d, c, l, algo, 0.0, 0.0, time.perf_counter() - start, None, TIMEOUT)
    if queue.empty():
        logging.error('Cell d=%d c=%d l=%d %s exited with code %s' % (d, c, l, algo, proc.exitcode))
        return BenchRow(d, c, l, algo, 0.0, 0.0, time.perf_counter() - start, None, ERROR)
    return BenchRow(*queue.get())


def write_csv(rows: Iterable[BenchRow], path: str):
    """Write rows under `CSV_HEADER`."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.to_csv())


def read_csv(path: str) -> List[BenchRow]:
    """Rows of a CSV written by `write_csv`."""
    with open(path, 'r', newline='') as f:
        reader = csv.reader(f)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError('Unexpected bench CSV header %r' % (header,))
        return [BenchRow.from_csv(fields) for fields in reader]


def check_rows(rows: Sequence[BenchRow]) -> List[str]:
    """
    Harness assertions over completed cells.

    Returns:
        List[str]: one message per classic cell that typed more bodies than
        `classic_bound` allows and per cell where the new method emitted more
        constraints than the classic one.
    """
    problems = []
    done = {(r.d, r.c, r.l, r.algo): r for r in rows if r.constrs is not None}
    for (d, c, l, algo), row in done.items():  # noqa: E741
        if algo != 'classic':
            continue
        if c >= 1 and row.typings is not None and row.typings > classic_bound(d, c, l):
            problems.append('classic typings %d exceed bound %d at d=%d c=%d l=%d'
                            % (row.typings, classic_bound(d, c, l), d, c, l))
        new = done.get((d, c, l, 'new'))
        if new is not None and new.constrs > row.constrs:
            problems.append('new count %d exceeds classic count %d at d=%d c=%d l=%d'
                            % (new.constrs, row.constrs, d, c, l))
    return problems


def run_grid(cfg: BenchConfig, progress: bool = True, write: bool = True) -> List[BenchRow]:
    """
    Run every cell of the grid and write the CSV.

    Cells run `cfg.workers` at a time; rows come back in grid order.
    """
    jobs = [(d, c, l, algo) for d, c, l in cfg.cells() for algo in cfg.algorithms]  # noqa: E741

    def measure(job):
        d, c, l, algo = job  # noqa: E741
        return run_cell_with_timeout(d, c, l, algo, cfg.basis_for(d), cfg.timeout, cfg.max_lp_rows)

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        rows = list(tqdm(pool.map(measure, jobs), total=len(jobs), disable=not progress, desc='bench'))
    for problem in check_rows(rows):
        logging.warning(problem)
    if write:
        write_csv(rows, cfg.output)
        logging.info('Wrote %d rows to %s' % (len(rows), cfg.output))
    return rows

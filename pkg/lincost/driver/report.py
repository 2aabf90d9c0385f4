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

"""Human-readable and JSON output of analyses."""

import json
from typing import Iterable, List, Sequence, Tuple, Union

from lincost.classic import ClassicReport
from lincost.driver.corpus import CorpusEntry
from lincost.linmap.scalar import render
from lincost.mapinfer import FunReport

Report = Union[FunReport, ClassicReport]

CORPUS_COLUMNS = ('function', 'constr secs', 'solve secs', 'total secs', 'constrs', 'linear', 'success',
                  'reallocates')


def report_json(reports: Iterable[Report], indent=2) -> str:
    """``{"functions": [...]}`` over reports of either algorithm."""
    return json.dumps({'functions': [r.to_json() for r in reports]}, indent=indent)


def _matrix_lines(report: FunReport) -> List[str]:
    cells = [[str(i)] + [str(render(s)) for s in row]
             for i, row in zip(report.rows, report.matrix.dense(report.rows, report.cols))]
    header = [''] + [str(j) for j in report.cols]
    widths = [max(len(line[k]) for line in [header] + cells) for k in range(len(header))]

    def fmt(line):
        return '  ' + '  '.join(cell.rjust(w) for cell, w in zip(line, widths))
    return [fmt(header)] + [fmt(line) for line in cells]


def report_text(reports: Iterable[Report]) -> str:
    """One block per report: name, algorithm, status, counts, then the matrix or the type."""
    lines = []
    for r in reports:
        if isinstance(r, ClassicReport):
            lines.append('%s [classic] %s: %d constraints, %d typings, %.3fs'
                         % (r.name, r.status.value, r.constraints, r.retypings, r.total_secs))
            lines.append('  %s' % r.signature)
        else:
            lines.append('%s [new] %s: %d constraints, %.3fs' % (r.name, r.status.value, r.constraints,
                                                                 r.total_secs))
            lines.extend(_matrix_lines(r))
        lines.extend('  %s' % d for d in r.diagnostics)
    return '\n'.join(lines)


def corpus_rows(results: Sequence[Tuple[CorpusEntry, FunReport]]) -> List[List[str]]:
    """Corpus table rows under `CORPUS_COLUMNS`."""
    def mark(flag):
        return 'yes' if flag else 'no'
    return [[entry.name, '%.3f' % r.constr_secs, '%.3f' % r.solve_secs, '%.3f' % r.total_secs,
             str(r.constraints), mark(r.linear), mark(r.status.ok), mark(r.reallocates)]
            for entry, r in results]


def corpus_text(results: Sequence[Tuple[CorpusEntry, FunReport]]) -> str:
    """The corpus table as aligned text."""
    rows = [list(CORPUS_COLUMNS)] + corpus_rows(results)
    widths = [max(len(row[k]) for row in rows) for k in range(len(CORPUS_COLUMNS))]
    return '\n'.join('  '.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)

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

"""Per-function analysis reports."""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional

from lincost.linmap import PMat
from lincost.potential import Index


class FunStatus(Enum):
    """Outcome of checking or inferring one function."""

    CHECKED = 'Checked'
    REJECTED = 'Rejected'
    INFERRED = 'Inferred'
    INFEASIBLE = 'Infeasible'
    NONLINEAR = 'Nonlinear'

    @property
    def ok(self) -> bool:
        """Whether the matrix was justified."""
        return self in (FunStatus.CHECKED, FunStatus.INFERRED)


@dataclass
class FunReport:
    """
    Result of the analysis of one function.

    `constraints` counts the non-trivial scalar inequalities generated;
    `lp_stats` describes the LP actually solved, whose rows are only the
    inequalities mentioning unknowns.
    """

    name: str
    status: FunStatus
    matrix: PMat
    rows: List[Index]
    cols: List[Index]
    constraints: int = 0
    linear: bool = True
    reallocates: bool = False
    diagnostics: List[str] = field(default_factory=list)
    lp_stats: Dict[str, object] = field(default_factory=dict)
    constr_secs: float = 0.0
    solve_secs: float = 0.0
    local_matrices: Dict[str, PMat] = field(default_factory=dict)

    @property
    def total_secs(self) -> float:
        """Constraint generation plus solving time."""
        return self.constr_secs + self.solve_secs

    def to_json(self):
        """``{name, status, matrix, constraints, lp_stats, ...}``."""
        return {
            'name': self.name,
            'algo': 'new',
            'status': self.status.value,
            'matrix': self.matrix.to_json(self.rows, self.cols),
            'constraints': self.constraints,
            'linear': self.linear,
            'reallocates': self.reallocates,
            'lp_stats': dict(self.lp_stats),
            'diagnostics': list(self.diagnostics),
            'timing': {'constr_secs': self.constr_secs, 'solve_secs': self.solve_secs,
                       'total_secs': self.total_secs},
        }


def analysis_report(reports: Iterable[FunReport], indent: Optional[int] = 2) -> str:
    """Analysis report JSON of several functions, in the given order."""
    return json.dumps({'functions': [r.to_json() for r in reports]}, indent=indent)

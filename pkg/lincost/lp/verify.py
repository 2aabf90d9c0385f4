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

"""Independent feasibility checker for LP assignments (no simplex state)."""

from typing import Hashable, List, Mapping

from fractions import Fraction

from lincost.lp.problem import Constraint, LPProblem


def violated_constraints(problem: LPProblem, assignment: Mapping[Hashable, Fraction]) -> List[Constraint]:
    """
    Re-check an assignment against every constraint and bound, exactly.

    Args:
        problem (LPProblem): the problem the assignment claims to solve.
        assignment (Mapping): value of every declared variable.

    Returns:
        List[Constraint]: the violated constraints; bound violations are
        reported as ``v >= 0`` constraints.

    Raises:
        ValueError: a declared variable is missing from the assignment.
    """
    missing = [v for v in problem.variables if v not in assignment]
    if missing:
        raise ValueError('Assignment misses variables: %s' % ', '.join(map(str, missing[:5])))
    bad = [c for c in problem.constraints if not c.holds(assignment)]
    for v in problem.variables:
        if problem.is_nonneg(v) and assignment[v] < 0:
            bad.append(Constraint.bound(v))
    return bad

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

"""Cost-free typing with linear maps: derivation, constraint generation, checking and inference."""

from lincost.mapinfer.callgraph import SCC, call_graph, topological_sccs
from lincost.mapinfer.constraints import fun_constraints
from lincost.mapinfer.derive import DeriveResult, Derived, UnsupportedHigherOrder, derive
from lincost.mapinfer.higher_order import expand_higher_order
from lincost.mapinfer.inference import (MatrixInference, PreparedProgram, build_problem, check_closure,
                                        check_function, infer_function, infer_program, prepare_program)
from lincost.mapinfer.oracle import Violation, check_soundness
from lincost.mapinfer.report import FunReport, FunStatus, analysis_report
from lincost.mapinfer.signatures import concrete_matrix, matrix_indices, symbolic_matrix

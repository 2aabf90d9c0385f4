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

"""Classic resource analysis with annotated types and call-site retyping."""

from lincost.classic.anntypes import ABase, AFun, AList, AnnType, APair, ClassicUnsupported, annotated_potential
from lincost.classic.count import ConstraintStore, classic_constraint_count
from lincost.classic.infer import (ClassicInference, ClassicReport, ClassicStatus, CostViolation, Mode, Objective,
                                   check_costful_soundness, classic_infer)

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

"""Havoc-aware matrix algebra over annotation indices and the primitive potential maps."""

from lincost.linmap.inequalities import ScalarInequality, leq_constraints
from lincost.linmap.pmat import PMat
from lincost.linmap.primitives import (identity, move, nil, proj, proj_neg, shift, unshift,
                                       zero, zero_reallocation)
from lincost.linmap.scalar import (HAVOC, ONE, Affine, HavocOnLeft, NonlinearTerm, SymbolicEntryError,
                                   UnknownId, add, mul)

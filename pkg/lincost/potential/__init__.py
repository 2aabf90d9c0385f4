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

"""Indices, bases, annotation vectors and the potential function."""

from lincost.potential.annvec import AnnVec
from lincost.potential.basis import Basis, BasisKind
from lincost.potential.combinatorics import binom, stirling2
from lincost.potential.index import CONST_INDEX, Index, display_order
from lincost.potential.indexsets import context_indices, indices, owned_indices, uses_pair_indices
from lincost.potential.potential import (list_weight, potential, potential_of_value, shift_vector,
                                         unshift_vector)

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
Constants.

Contains constants that LinCost uses as well as
user-settable Environment Variables that
influence LinCost behavior.
"""

from enum import Enum, auto

import os

# Below consts can be modified if necessary.
# Note that if one of these consts requires frequent modification,
# it should probably be moved into `ENV`.

# Default directory for logs, LP exports, bench output, etc.
DEFAULT_WORKING_DIR = '/tmp/lincost'
os.makedirs(DEFAULT_WORKING_DIR, exist_ok=True)
# Default directory for bench CSV files
DEFAULT_BENCH_DIR = os.path.join(DEFAULT_WORKING_DIR, 'bench')
# Prefix of names generated by let-normalization; source names may not contain it
FRESH_PREFIX = u"%"
# Reserved path segments for the argument and the result of a function
ARG = u"a"
RESULT = u"r"
# Name of the constant index
CONST = u"c"

# Weight base of the inference objective: an entry from a column of degree j
# into a row of degree i is weighted by base ** (i + j).
DEFAULT_WEIGHT_BASE = 10
# Default per-cell wall-clock budget of the benchmark harness, in seconds
DEFAULT_CELL_TIMEOUT = 120
# Classic LPs with more rows than this are counted but not solved
DEFAULT_MAX_LP_ROWS = 20000
# Degree used for the realistic corpus
CORPUS_DEGREE = 10


class ENV(Enum):
    """
    LinCost Environment Variables.

    This is an Enum because in some instances we need to access the `name`
    field of a property.

    Since we use each environment variable in such different ways,
    we just make the enum value a lambda that will be called by
    our own `val` property.

    For example, we want `LINCOST_SEED` to be an int
    depending on the string set as an environment variable, so the lambda returns
    the parsed value or the default seed.
    """

    LINCOST_MIN_LOG_LEVEL = auto(), lambda v: v or "INFO"                # noqa: E731
    LINCOST_SEED = auto(), lambda v: int(v or "0")                       # noqa: E731
    LINCOST_STEP_BUDGET = auto(), lambda v: int(v or "1000000")          # noqa: E731
    LINCOST_IS_TESTING = auto(), lambda v: (v or "False") == "True"      # noqa: E731

    @property
    def val(self):
        """Return the output of the lambda on the system's value in the environment."""
        # pylint: disable=invalid-envvar-value, unpacking-non-sequence
        _, default_fn = self.value
        return default_fn(os.getenv(self.name))

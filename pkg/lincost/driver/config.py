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

"""Analysis and benchmark configuration."""

import os
import re
from typing import Tuple

import yaml

from lincost.const import DEFAULT_BENCH_DIR, DEFAULT_CELL_TIMEOUT, DEFAULT_MAX_LP_ROWS, DEFAULT_WEIGHT_BASE, ENV
from lincost.potential import Basis
from lincost.utils import logging

ALGORITHMS = ('new', 'classic')
MODES = ('costfree', 'costful')


def _load(config_file):
    if config_file is None:
        return {}
    with open(config_file, 'r') as f:
        info = yaml.safe_load(f) or {}
    if not isinstance(info, dict):
        raise ValueError('Configuration %s must be a mapping' % config_file)
    return info


def _positive_int(info, key, default):
    value = info.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError('%s must be a positive integer, got %r' % (key, value))
    return value


def _algorithms(value):
    if value == 'both':
        return ALGORITHMS
    algos = (value,) if isinstance(value, str) else tuple(value)
    for a in algos:
        if a not in ALGORITHMS:
            raise ValueError('algo must be new, classic or both, got %r' % (a,))
    if not algos:
        raise ValueError('algo must name at least one algorithm')
    return algos


class AnalysisConfig:
    """
    Settings of one `analyze` run.

    Contains the basis, the algorithms and their options, found by parsing an
    optional `analysis.yml`; keyword arguments override file values.
    """

    def __init__(self, config_file=None, **overrides):
        """
        Load and validate the configuration.

        Args:
            config_file (string, optional): path to a YAML file. Defaults to None.
            **overrides: values taking precedence over the file; None means unset.
        """
        info = _load(config_file)
        info.update({k: v for k, v in overrides.items() if v is not None})
        self.__basis = Basis.from_name(info.get('basis', 'poly'), _positive_int(info, 'degree', 1),
                                       _positive_int(info, 'base', 2))
        self.__algorithms = _algorithms(info.get('algo', 'new'))
        self.__mode = info.get('mode', 'costfree')
        if self.__mode not in MODES:
            raise ValueError('mode must be costfree or costful, got %r' % (self.__mode,))
        objective = info.get('objective') or {}
        if not isinstance(objective, dict):
            raise ValueError('objective must be a mapping, got %r' % (objective,))
        self.__weight_base = _positive_int(objective, 'row_weight_base', DEFAULT_WEIGHT_BASE)
        self.__strict = bool(info.get('strict', False))
        self.__memoize = bool(info.get('memoize', False))
        self.__step_budget = _positive_int(info, 'step_budget', ENV.LINCOST_STEP_BUDGET.val)
        logging.info('Analysis config: basis=%s algo=%s mode=%s' % (self.__basis, ','.join(self.__algorithms),
                                                                   self.__mode))

    @property
    def basis(self) -> Basis:
        """Potential basis."""
        return self.__basis

    @property
    def algorithms(self) -> Tuple[str, ...]:
        """Selected algorithms, `new` and/or `classic`."""
        return self.__algorithms

    @property
    def mode(self) -> str:
        """`costfree` or `costful` (classic only)."""
        return self.__mode

    @property
    def weight_base(self) -> int:
        """Base of the objective weights."""
        return self.__weight_base

    @property
    def strict(self) -> bool:
        """Whether any failed function makes the run fail."""
        return self.__strict

    @property
    def memoize(self) -> bool:
        """Whether the classic system reuses retypings."""
        return self.__memoize

    @property
    def step_budget(self) -> int:
        """Evaluation step budget."""
        return self.__step_budget


def parse_range(value) -> Tuple[int, int]:
    """Read ``lo..hi``, ``n`` or a two-element list as an inclusive range."""
    if isinstance(value, (list, tuple)) and len(value) == 2:
        lo, hi = value
    elif isinstance(value, int) and not isinstance(value, bool):
        lo = hi = value
    else:
        match = re.fullmatch(r'\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?', str(value))
        if not match:
            raise ValueError('Malformed range %r (expected lo..hi)' % (value,))
        lo = int(match.group(1))
        hi = int(match.group(2) or lo)
    if not isinstance(lo, int) or not isinstance(hi, int) or lo < 0 or hi < lo:
        raise ValueError('Empty or negative range %r' % (value,))
    return lo, hi


class BenchConfig:
    """
    Settings of the synthetic benchmark grid.

    Contains the d, c and l ranges, the basis family, the algorithms and the
    per-cell budget, found by parsing an optional `bench.yml`; keyword
    arguments override file values.
    """

    def __init__(self, config_file=None, **overrides):
        """
        Load and validate the configuration.

        Args:
            config_file (string, optional): path to a YAML file. Defaults to None.
            **overrides: values taking precedence over the file; None means unset.
        """
        info = _load(config_file)
        info.update({k: v for k, v in overrides.items() if v is not None})
        self.__d = parse_range(info.get('d', '1..2'))
        self.__c = parse_range(info.get('c', '0..1'))
        self.__l = parse_range(info.get('l', '0..1'))
        if self.__d[0] < 1:
            raise ValueError('d must start at 1 or more, got %r' % (self.__d,))
        self.__basis = info.get('basis', 'poly')
        Basis.from_name(self.__basis, self.__d[0], self.__d[0] + 1)
        self.__algorithms = _algorithms(info.get('algorithms', info.get('algo', 'both')))
        timeout = info.get('timeout', DEFAULT_CELL_TIMEOUT)
        if isinstance(timeout, bool) or not isinstance(timeout, (int, float)) or timeout <= 0:
            raise ValueError('timeout must be a positive number of seconds, got %r' % (timeout,))
        self.__timeout = float(timeout)
        self.__output = info.get('output')
        self.__workers = _positive_int(info, 'workers', 1)
        self.__max_lp_rows = _positive_int(info, 'max_lp_rows', DEFAULT_MAX_LP_ROWS)
        logging.info('Bench config: d=%s c=%s l=%s basis=%s algorithms=%s timeout=%ss'
                     % (self.__d, self.__c, self.__l, self.__basis, ','.join(self.__algorithms), self.__timeout))

    @property
    def d(self) -> Tuple[int, int]:
        """Inclusive range of degrees (or, for the exponential basis, of B_max - 1)."""
        return self.__d

    @property
    def c(self) -> Tuple[int, int]:
        """Inclusive range of calls per level."""
        return self.__c

    @property
    def l(self) -> Tuple[int, int]:  # noqa: E743
        """Inclusive range of nesting levels."""
        return self.__l

    @property
    def basis(self) -> str:
        """`poly` or `exp`."""
        return self.__basis

    def basis_for(self, d: int) -> Basis:
        """Basis of the cells with degree `d`."""
        return Basis.from_name(self.__basis, degree=d, base=d + 1)

    @property
    def algorithms(self) -> Tuple[str, ...]:
        """Selected algorithms."""
        return self.__algorithms

    @property
    def timeout(self) -> float:
        """Per-cell wall-clock budget in seconds."""
        return self.__timeout

    @property
    def output(self) -> str:
        """CSV path; defaults to `bench.csv` under the bench directory."""
        return self.__output or os.path.join(DEFAULT_BENCH_DIR, "bench.csv")

    @property
    def workers(self) -> int:
        """Parallel cells."""
        return self.__workers

    @property
    def max_lp_rows(self) -> int:
        """Classic LPs above this size are counted but not solved."""
        return self.__max_lp_rows

    def cells(self):
        """Every (d, c, l) of the grid, in row-major order."""
        return [(d, c, l)
                for d in range(self.__d[0], self.__d[1] + 1)
                for c in range(self.__c[0], self.__c[1] + 1)
                for l in range(self.__l[0], self.__l[1] + 1)]  # noqa: E741

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

"""Synthetic benchmark programs."""

from lincost.lang.parser import parse_program
from lincost.lang.syntax import Program


def synthetic_name(l: int) -> str:  # noqa: E741
    """Name of the outermost function of a synthetic program."""
    return 'f%d' % l


def gen_synthetic(c: int, l: int) -> str:  # noqa: E741
    """
    Source of a synthetic program with `l` levels and `c` calls per level.

    ``f0`` is the list identity. Each ``fi`` walks its list and rebuilds it,
    passing the recursive result through ``c`` nested calls of ``f(i-1)``.
    Every generated function computes the identity.
    """
    if c < 0 or l < 0:
        raise ValueError('c and l must be non-negative, got c=%d l=%d' % (c, l))
    lines = ['fun f0 (x0 : bool list) : bool list = x0']
    for i in range(1, l + 1):
        call = 'f%d t%d' % (i, i)
        for _ in range(c):
            call = 'f%d (%s)' % (i - 1, call)
        lines.extend([
            '',
            'fun f%d (x%d : bool list) : bool list =' % (i, i),
            '  case x%d of' % i,
            '  | [] -> []',
            '  | h%d :: t%d -> h%d :: %s' % (i, i, i, call),
        ])
    return '\n'.join(lines) + '\n'


def synthetic_program(c: int, l: int) -> Program:  # noqa: E741
    """Parsed `gen_synthetic`."""
    return parse_program(gen_synthetic(c, l))

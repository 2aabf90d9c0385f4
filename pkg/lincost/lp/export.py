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

"""CPLEX LP-format writer for `LPProblem`s, for cross-checking with external solvers."""

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Dict, Optional, TextIO

from lincost.lp.problem import LinExpr, LPProblem, Sense

_SANITIZE = re.compile(r'[^A-Za-z0-9_]')


def _terminates(value: Fraction) -> bool:
    d = value.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def _decimal(value: Fraction) -> str:
    """Exact decimal text of a terminating rational."""
    if value.denominator == 1:
        return str(value.numerator)
    k = 0
    while (10 ** k) % value.denominator:
        k += 1
    scaled = abs(value.numerator) * (10 ** k // value.denominator)
    digits = str(scaled).rjust(k + 1, '0')
    text = (digits[:-k] + '.' + digits[-k:]).rstrip('0')
    return ('-' if value < 0 else '') + text


def _scale(coefs):
    """Factor making every coefficient representable: 1 if all terminate, else the LCM of denominators."""
    if all(_terminates(c) for c in coefs):
        return 1
    return reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coefs), 1)


class _Names:
    """Sanitized, collision-free LP names for arbitrary variable ids."""

    def __init__(self):
        self._by_var: Dict[object, str] = {}
        self._used = set()

    def __call__(self, var) -> str:
        if var in self._by_var:
            return self._by_var[var]
        base = _SANITIZE.sub('_', str(var)) or 'v'
        if not base[0].isalpha():
            base = 'v' + base
        name, n = base, 1
        while name in self._used:
            n += 1
            name = '%s_%d' % (base, n)
        self._used.add(name)
        self._by_var[var] = name
        return name


def _terms_text(terms, names, scale):
    out = []
    for var, coef in terms.items():
        coef = coef * scale
        sign = '-' if coef < 0 else '+'
        mag = abs(coef)
        body = names(var) if mag == 1 else '%s %s' % (_decimal(mag), names(var))
        if not out:
            out.append(body if sign == '+' else '- ' + body)
        else:
            out.append('%s %s' % (sign, body))
    return ' '.join(out) if out else '0'


def export_lp(problem: LPProblem, sink: Optional[TextIO] = None) -> str:
    """
    Render `problem` in CPLEX LP format.

    Every row is written with its variables on the left and a constant on the
    right. Coefficients are exact decimals when every number of the row
    terminates; otherwise the row is multiplied by the LCM of its denominators
    so that it only holds integers. Non-negative variables rely on the format's
    default bound; free variables are listed in ``Bounds``.

    Args:
        problem (LPProblem): problem to write.
        sink (TextIO, optional): stream that also receives the text.

    Returns:
        str: the LP text.
    """
    names = _Names()
    for v in problem.variables:
        names(v)
    lines = ['Maximize']
    objective: LinExpr = problem.objective
    terms = objective.terms
    if terms:
        scale = _scale(list(terms.values()))
        lines.append(' obj: %s' % _terms_text(terms, names, scale))
    else:
        lines.append(' obj: 0')
    lines.append('Subject To')
    for i, c in enumerate(problem.constraints, start=1):
        terms, sense, bound = c.normalized()
        scale = _scale(list(terms.values()) + [bound])
        label = names('c%d' % i) if c.name is None else names('c_' + c.name)
        lines.append(' %s: %s %s %s' % (label, _terms_text(terms, names, scale),
                                        sense.value, _decimal(bound * scale)))
    lines.append('Bounds')
    for v in problem.variables:
        if not problem.is_nonneg(v):
            lines.append(' %s free' % names(v))
    lines.append('End')
    text = '\n'.join(lines) + '\n'
    if sink is not None:
        sink.write(text)
    return text


def read_lp_rows(text: str):
    """
    Parse the rows written by `export_lp` back into ``(terms, sense, bound)``.

    Only the subset of the format that `export_lp` emits is understood; this is
    used to check that scaled rows are equivalent to the originals.
    """
    rows = []
    section = None
    for line in text.splitlines():
        stripped = line.strip()
        if stripped in ('Maximize', 'Subject To', 'Bounds', 'End'):
            section = stripped
            continue
        if section != 'Subject To':
            continue
        _, expr = stripped.split(':', 1)
        for sense in (Sense.LE, Sense.GE, Sense.EQ):
            token = ' %s ' % sense.value
            if token in expr:
                left, right = expr.split(token)
                break
        else:
            raise ValueError('Cannot read LP row: %s' % line)
        terms = {}
        tokens = left.split()
        sign, coef = 1, Fraction(1)
        for tok in tokens:
            if tok in ('+', '-'):
                sign, coef = (1 if tok == '+' else -1), Fraction(1)
            elif re.match(r'^[0-9.]+$', tok):
                coef = Fraction(tok)
            else:
                terms[tok] = sign * coef
                sign, coef = 1, Fraction(1)
        rows.append((terms, sense, Fraction(right.strip())))
    return rows

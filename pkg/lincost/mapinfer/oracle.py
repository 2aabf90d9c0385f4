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

"""Randomized soundness oracle: a function's matrix must never create potential."""

from fractions import Fraction
from typing import List, NamedTuple, Optional

import numpy as np

from lincost.const import ARG, ENV, RESULT
from lincost.lang.errors import BudgetExceeded
from lincost.lang.evaluator import Evaluator, evaluate_program
from lincost.lang.syntax import Program
from lincost.lang.typecheck import typecheck
from lincost.lang.types import FunT, ListT, PairT, Type
from lincost.lang.values import FALSE, NIL, TRUE, VCons, VPair, Value, to_python
from lincost.linmap import PMat
from lincost.potential import CONST_INDEX, AnnVec, Basis, owned_indices, potential


class Violation(NamedTuple):
    """An input and argument annotation under which potential grows."""

    value: object
    annotation: dict
    phi_in: Fraction
    phi_out: Fraction


def random_value(t: Type, rng: np.random.Generator, max_length: int) -> Value:
    """A random value of `t`; element types other than lists and pairs are booleans."""
    if isinstance(t, ListT):
        out = NIL
        for _ in range(int(rng.integers(0, max_length + 1))):
            out = VCons(random_value(t.elem, rng, max_length), out)
        return out
    if isinstance(t, PairT):
        return VPair(random_value(t.fst, rng, max_length), random_value(t.snd, rng, max_length))
    if isinstance(t, FunT):
        raise ValueError('Cannot sample function values')
    return TRUE if rng.integers(0, 2) else FALSE


def random_annotation(t: Type, basis: Basis, rng: np.random.Generator, max_entry: int) -> AnnVec:
    """A random non-negative integral annotation of the argument slots of `t` and the constant."""
    slots = list(owned_indices(ARG, t, basis)) + [CONST_INDEX]
    return AnnVec({ix: int(rng.integers(0, max_entry + 1)) for ix in slots})


def check_soundness(program: Program, fname: str, m: PMat, basis: Basis, samples: int = 100,
                    max_length: int = 12, max_entry: int = 5, rng: Optional[np.random.Generator] = None,
                    step_budget: Optional[int] = None) -> List[Violation]:
    """
    Sample inputs and annotations and report every case with ``Φ_in < Φ_out``.

    Args:
        program (Program): a first-order program, e.g. `PreparedProgram.program`.
        fname (str): the function the matrix `m` types.
        samples (int): number of (input, annotation) draws.
        rng (Generator): defaults to ``default_rng(LINCOST_SEED)``.

    Returns:
        List[Violation]: empty when no sample gains potential.
    """
    rng = rng if rng is not None else np.random.default_rng(ENV.LINCOST_SEED.val)
    ft = typecheck(program).signature(fname)
    out = []
    for _ in range(samples):
        v = random_value(ft.arg, rng, max_length)
        p = random_annotation(ft.arg, basis, rng, max_entry)
        try:
            result = evaluate_program(program, fname, v, evaluator=Evaluator(step_budget))
        except BudgetExceeded:
            continue
        phi_in = potential({ARG: v}, {ARG: ft.arg}, p, basis)
        phi_out = potential({RESULT: result}, {RESULT: ft.ret}, m.apply(p), basis)
        if phi_out > phi_in:
            out.append(Violation(to_python(v), p.to_json(), phi_in, phi_out))
    return out

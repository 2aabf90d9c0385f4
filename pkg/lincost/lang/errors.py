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

"""Error hierarchy of LinCost."""


class LinCostError(Exception):
    """Base class of every error LinCost raises on purpose."""


class LcSyntaxError(LinCostError):
    """Malformed program text."""

    def __init__(self, message, line, column):
        super().__init__('%s at line %d, column %d' % (message, line, column))
        self.message = message
        self.line = line
        self.column = column


class UnboundVariableError(LinCostError):
    """A variable is used outside the scope of its binder."""

    def __init__(self, name, line=None, column=None):
        where = '' if line is None else ' at line %d, column %d' % (line, column)
        super().__init__('Unbound variable %r%s' % (name, where))
        self.name = name


class BaseTypeError(LinCostError):
    """Base (unannotated) type mismatch."""


class EvaluationError(LinCostError):
    """Dynamic type error during evaluation, e.g. applying a non-closure."""


class BudgetExceeded(LinCostError):
    """Evaluation ran out of its step budget."""

    def __init__(self, steps):
        super().__init__('Evaluation exceeded the step budget of %d rule applications' % steps)
        self.steps = steps

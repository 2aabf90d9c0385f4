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

"""Exact rational helpers shared by reports, JSON files and the CLI."""

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """
    Convert a JSON/YAML/CLI value to an exact rational.

    Accepts ints, Fractions, strings of the form ``p/q``, ``p`` or a
    terminating decimal such as ``0.25``. Floats are converted through their
    shortest decimal representation so ``0.1`` becomes ``1/10``.

    Raises:
        ValueError: the value cannot be read as a rational.
    """
    if isinstance(value, bool):
        raise ValueError('Not a rational: %r' % (value,))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError('Not a rational: %r' % (value,)) from e
    raise ValueError('Not a rational: %r' % (value,))


def format_fraction(value: Rational) -> str:
    """Render a rational as ``p/q`` (or ``p`` when integral)."""
    return str(Fraction(value))

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

"""Potential bases: polynomial (binomial) and exponential (Stirling)."""

from enum import Enum
from typing import Tuple

from lincost.potential.index import Index


class BasisKind(Enum):
    """Family of potential functions."""

    POLYNOMIAL = 'poly'
    EXPONENTIAL = 'exp'


class Basis:
    """
    The potential basis of one analysis.

    Polynomial(D_max) tracks ``binom(n, k)`` for ``1 <= k <= D_max``;
    Exponential(B_max) tracks ``stirling2(n + 1, b)`` for ``2 <= b <= B_max``.
    """

    def __init__(self, kind: BasisKind, bound: int):
        if kind is BasisKind.POLYNOMIAL and bound < 1:
            raise ValueError('Polynomial basis needs D_max >= 1, got %d' % bound)
        if kind is BasisKind.EXPONENTIAL and bound < 2:
            raise ValueError('Exponential basis needs B_max >= 2, got %d' % bound)
        self.__kind = kind
        self.__bound = bound

    @classmethod
    def polynomial(cls, d_max: int) -> 'Basis':
        """Polynomial(D_max)."""
        return cls(BasisKind.POLYNOMIAL, d_max)

    @classmethod
    def exponential(cls, b_max: int) -> 'Basis':
        """Exponential(B_max)."""
        return cls(BasisKind.EXPONENTIAL, b_max)

    @classmethod
    def from_name(cls, name: str, degree: int = 1, base: int = 2) -> 'Basis':
        """Build from the CLI/config spelling ``poly`` or ``exp``."""
        if name == BasisKind.POLYNOMIAL.value:
            return cls.polynomial(degree)
        if name == BasisKind.EXPONENTIAL.value:
            return cls.exponential(base)
        raise ValueError('Unknown basis %r (expected poly or exp)' % name)

    @property
    def kind(self) -> BasisKind:
        """Polynomial or exponential."""
        return self.__kind

    @property
    def bound(self) -> int:
        """D_max or B_max."""
        return self.__bound

    @property
    def is_polynomial(self) -> bool:
        """Whether this is the binomial basis."""
        return self.__kind is BasisKind.POLYNOMIAL

    @property
    def leaf_kind(self) -> str:
        """`deg` or `base`."""
        return 'deg' if self.is_polynomial else 'base'

    @property
    def lowest(self) -> int:
        """Smallest tracked degree (1) or base (2)."""
        return 1 if self.is_polynomial else 2

    @property
    def length(self) -> int:
        """Number of annotation slots per list."""
        return self.__bound - self.lowest + 1

    def leaves(self) -> Tuple[Index, ...]:
        """Path-less list indices, highest degree or base first."""
        return tuple(Index((), self.leaf_kind, k) for k in range(self.__bound, self.lowest - 1, -1))

    def reduced(self) -> 'Basis':
        """The basis one degree (or base) lower; used for cost-free copies."""
        return Basis(self.__kind, self.__bound - 1)

    def __eq__(self, other):
        return isinstance(other, Basis) and (self.__kind, self.__bound) == (other.kind, other.bound)

    def __hash__(self):
        return hash((self.__kind, self.__bound))

    def __repr__(self):
        if self.is_polynomial:
            return 'Polynomial(D_max=%d)' % self.__bound
        return 'Exponential(B_max=%d)' % self.__bound

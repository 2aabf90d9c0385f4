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

"""Annotation vectors: finite maps from indices to exact rationals."""

from collections.abc import Mapping
from fractions import Fraction
from typing import Dict, Iterable, Optional

from lincost.potential.index import Index, display_order
from lincost.utils.fractions import format_fraction, to_fraction

_ZERO = Fraction(0)


class AnnVec(Mapping):
    """
    Annotation vector. Missing indices read as zero.

    Entries are exact rationals; vectors produced by applying a matrix may also
    hold the havoc marker at indices whose value is an arbitrary choice.
    """

    __slots__ = ('_entries',)

    def __init__(self, entries: Optional[Mapping[Index, object]] = None):
        self._entries: Dict[Index, object] = {}
        for ix, v in (entries or {}).items():
            if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
                v = Fraction(v)
                if not v:
                    continue
            self._entries[ix] = v

    @classmethod
    def parse(cls, entries: Mapping[str, object]) -> 'AnnVec':
        """Build from ``{"x.deg2": "3/2", ...}``."""
        return cls({Index.parse(k): to_fraction(v) for k, v in entries.items()})

    def __getitem__(self, ix: Index):
        return self._entries.get(ix, _ZERO)

    def __contains__(self, ix):
        return ix in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, AnnVec):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == AnnVec(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def _rational(self):
        if self.havoc_indices():
            raise ValueError('Arithmetic on an annotation vector with havoc entries')

    def __add__(self, other: 'AnnVec') -> 'AnnVec':
        self._rational()
        other._rational()
        out = dict(self._entries)
        for ix, v in other.items():
            out[ix] = out.get(ix, _ZERO) + v
        return AnnVec(out)

    def __sub__(self, other: 'AnnVec') -> 'AnnVec':
        return self + other * -1

    def __mul__(self, k) -> 'AnnVec':
        self._rational()
        k = Fraction(k)
        return AnnVec({ix: v * k for ix, v in self._entries.items()})

    __rmul__ = __mul__

    def havoc_indices(self):
        """Indices holding a non-rational entry."""
        return [ix for ix, v in self._entries.items() if not isinstance(v, Fraction)]

    def renamed(self, old: str, new: str) -> 'AnnVec':
        """Move the slots owned by `old` under `new`."""
        return AnnVec({(ix.renamed(new) if ix.owner == old else ix): v for ix, v in self._entries.items()})

    def to_json(self, owners: Optional[Iterable[str]] = None):
        """``{"x.deg2": "p/q", ...}`` in display order; havoc renders as ``*``."""
        out = {}
        for ix in display_order(self._entries, list(owners or ())):
            v = self._entries[ix]
            out[str(ix)] = format_fraction(v) if isinstance(v, Fraction) else str(v)
        return out

    def __repr__(self):
        return 'AnnVec(%s)' % ', '.join('%s: %s' % kv for kv in self.to_json().items())

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

"""Annotation indices."""

from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from lincost.const import CONST

_LEAF_KINDS = ('deg', 'base')


class Index(NamedTuple):
    """
    One annotation slot: a path of name segments and a leaf.

    The leaf is ``deg k``, ``base b`` or the constant ``c`` (empty path).
    Paths start at a variable (or the reserved ``a`` / ``r``) and continue
    with ``1`` / ``2`` for pair components.
    """

    path: Tuple[str, ...]
    kind: str
    n: int = 0

    @property
    def owner(self) -> str:
        """The variable owning this slot (``c`` for the constant)."""
        return self.path[0] if self.path else CONST

    @property
    def is_const(self) -> bool:
        """Whether this is the constant slot."""
        return self.kind == CONST

    @property
    def degree(self) -> int:
        """Degree used for objective weights: ``deg k`` -> k, ``base b`` -> b - 1, ``c`` -> 0."""
        if self.kind == 'deg':
            return self.n
        if self.kind == 'base':
            return self.n - 1
        return 0

    def under(self, *prefix: str) -> 'Index':
        """The same slot below `prefix`."""
        return Index(tuple(prefix) + self.path, self.kind, self.n)

    def relative(self) -> 'Index':
        """Drop the owner segment."""
        return Index(self.path[1:], self.kind, self.n)

    def renamed(self, owner: str) -> 'Index':
        """Replace the owner segment."""
        return Index((owner,) + self.path[1:], self.kind, self.n)

    def __str__(self):
        if self.is_const:
            return CONST
        return '.'.join(self.path + ('%s%d' % (self.kind, self.n),))

    @classmethod
    def parse(cls, text: str) -> 'Index':
        """Inverse of `str`: ``x.deg2``, ``p.1.base3``, ``c``."""
        if text == CONST:
            return CONST_INDEX
        *path, leaf = text.split('.')
        for kind in _LEAF_KINDS:
            if leaf.startswith(kind) and leaf[len(kind):].isdigit():
                return cls(tuple(path), kind, int(leaf[len(kind):]))
        raise ValueError('Malformed index %r' % text)


CONST_INDEX = Index((), CONST, 0)


def display_order(indices: Iterable[Index], owners: Optional[Sequence[str]] = None) -> List[Index]:
    """
    Sort indices the way matrices are printed.

    Variables appear in `owners` order (then alphabetically), components in
    path order, degrees and bases highest first, the constant last.
    """
    rank = {o: i for i, o in enumerate(owners or ())}

    def key(ix: Index):
        if ix.is_const:
            return (1, 0, '', (), 0)
        return (0, rank.get(ix.owner, len(rank)), ix.owner, ix.path[1:], -ix.n)

    return sorted(set(indices), key=key)

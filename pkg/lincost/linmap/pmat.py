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
Potential-transformation matrices.

A `PMat` acts on annotation vectors indexed by `Index`. It stores explicit
columns for the indices in its support and behaves as the identity on every
other index (the ``M ⊕ I`` reading), so matrices over different index sets
compose without padding.
"""

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence

from lincost.linmap.scalar import (HAVOC, ONE, ZERO, LinExpr, Scalar, SymbolicEntryError,
                                   add, is_zero, mul, render)
from lincost.potential.annvec import AnnVec
from lincost.potential.index import Index
from lincost.utils.fractions import to_fraction

Column = Dict[Index, Scalar]


def _keeps_choice(col: Mapping[Index, Scalar]) -> bool:
    if len(col) != 1:
        return False
    s = next(iter(col.values()))
    return s is HAVOC or (isinstance(s, Fraction) and s > 0)


class PMat:
    """
    Sparse matrix with identity extension.

    Columns are stored as ``{row: entry}`` maps without zero entries. Every
    stored row lies in the support; an index outside the support maps to
    itself with coefficient one.
    """

    __slots__ = ('_support', '_cols')

    def __init__(self, columns: Optional[Mapping[Index, Mapping[Index, Scalar]]] = None,
                 support: Iterable[Index] = ()):
        columns = columns or {}
        full = set(support) | set(columns)
        for col in columns.values():
            full.update(col)
        self._support: FrozenSet[Index] = frozenset(full)
        self._cols: Dict[Index, Column] = {}
        for j in full:
            if j in columns:
                self._cols[j] = {i: s for i, s in columns[j].items() if not is_zero(s)}
            elif j in support:
                self._cols[j] = {}
            else:
                self._cols[j] = {j: ONE}

    @classmethod
    def identity(cls) -> 'PMat':
        """The identity on every index."""
        return cls()

    @classmethod
    def from_entries(cls, entries: Mapping, support: Iterable[Index] = ()) -> 'PMat':
        """Build from ``{(row, col): entry}``; columns of `support` without entries are zero. Numbers become `Fraction`."""
        columns: Dict[Index, Column] = {}
        for (i, j), s in entries.items():
            if s is not HAVOC and not isinstance(s, LinExpr):
                s = Fraction(s)
            columns.setdefault(j, {})[i] = s
        return cls(columns, support)

    @property
    def support(self) -> FrozenSet[Index]:
        """Indices with an explicit column."""
        return self._support

    def column(self, j: Index) -> Mapping[Index, Scalar]:
        """Column `j` as ``{row: entry}``."""
        col = self._cols.get(j)
        return {j: ONE} if col is None else col

    def entry(self, i: Index, j: Index) -> Scalar:
        """Entry at (`i`, `j`)."""
        return self.column(j).get(i, ZERO)

    def entries(self):
        """Yield ``(row, col, entry)`` for every nonzero stored entry."""
        for j, col in self._cols.items():
            for i, s in col.items():
                yield i, j, s

    def compose(self, other: 'PMat') -> 'PMat':
        """
        ``self · other``: apply `other` first.

        A havoc entry of `other` is one arbitrary choice. It passes through
        unchanged when `self` sends its row to a single row with a positive
        coefficient; otherwise the choice is fixed to zero, the annotation an
        empty list always admits.

        Raises:
            NonlinearTerm: an unknown-bearing entry meets another one.
        """
        support = self._support | other._support
        cols = {}
        for j in support:
            out: Column = {}
            for k, bk in other.column(j).items():
                spread = self.column(k)
                if bk is HAVOC and not _keeps_choice(spread):
                    continue
                for i, aik in spread.items():
                    term = mul(aik, bk)
                    if is_zero(term):
                        continue
                    prev = out.get(i)
                    out[i] = term if prev is None else add(prev, term)
            cols[j] = out
        return PMat(cols, support)

    def __matmul__(self, other: 'PMat') -> 'PMat':
        return self.compose(other)

    def apply(self, p: Mapping[Index, Fraction]) -> AnnVec:
        """
        Matrix-vector product with havoc algebra.

        Raises:
            SymbolicEntryError: the matrix mentions unknowns.
        """
        out: Dict[Index, Scalar] = {}
        for j, pj in p.items():
            pj = Fraction(pj)
            if not pj:
                continue
            for i, s in self.column(j).items():
                if isinstance(s, LinExpr):
                    raise SymbolicEntryError('Cannot apply a matrix with symbolic entry at (%s, %s)' % (i, j))
                term = mul(s, pj)
                out[i] = term if i not in out else add(out[i], term)
        return AnnVec(out)

    def unknowns(self):
        """LP unknowns mentioned by any entry, in first-occurrence order."""
        seen = {}
        for _, _, s in self.entries():
            if isinstance(s, LinExpr):
                seen.update(dict.fromkeys(s.variables()))
        return list(seen)

    @property
    def is_concrete(self) -> bool:
        """Whether every entry is a rational or havoc."""
        return not any(isinstance(s, LinExpr) for _, _, s in self.entries())

    def substitute(self, assignment: Mapping) -> 'PMat':
        """Replace unknowns by their values; unknowns missing from `assignment` become 0."""
        cols = {}
        for j, col in self._cols.items():
            new = {}
            for i, s in col.items():
                if isinstance(s, LinExpr):
                    s = s.substitute(assignment).substitute({v: ZERO for v in s.variables()}).constant
                new[i] = s
            cols[j] = new
        return PMat(cols, self._support)

    def dense(self, rows: Sequence[Index], cols: Sequence[Index]) -> List[List[Scalar]]:
        """Rows-by-cols view."""
        return [[self.entry(i, j) for j in cols] for i in rows]

    def __eq__(self, other):
        if not isinstance(other, PMat):
            return NotImplemented
        for j in self._support | other._support:
            a = {i: s for i, s in self.column(j).items()}
            b = {i: s for i, s in other.column(j).items()}
            if a != b:
                return False
        return True

    __hash__ = None

    def to_json(self, rows: Sequence[Index], cols: Sequence[Index]):
        """``{rows, cols, entries: [[row, col, "p/q" | "*" | {aff}]...]}`` over the given index lists."""
        entries = []
        for i in rows:
            for j in cols:
                s = self.entry(i, j)
                if not is_zero(s):
                    entries.append([str(i), str(j), render(s)])
        return {'rows': [str(i) for i in rows], 'cols': [str(j) for j in cols], 'entries': entries}

    @classmethod
    def from_json(cls, obj) -> 'PMat':
        """
        Inverse of `to_json` for concrete matrices.

        Every listed column becomes explicit: entries not listed are zero.

        Raises:
            ValueError: malformed document or affine entries.
        """
        try:
            rows = [Index.parse(r) for r in obj['rows']]
            cols = [Index.parse(c) for c in obj['cols']]
            entries = {}
            for r, c, v in obj['entries']:
                if isinstance(v, dict):
                    raise ValueError('Symbolic entries cannot be loaded')
                entries[(Index.parse(r), Index.parse(c))] = HAVOC if v == '*' else to_fraction(v)
        except (KeyError, TypeError) as e:
            raise ValueError('Malformed matrix JSON: %s' % e) from e
        return cls.from_entries(entries, support=set(rows) | set(cols))

    def __repr__(self):
        parts = []
        for j in sorted(self._support, key=str):
            col = self._cols[j]
            parts.append('%s: {%s}' % (j, ', '.join('%s: %r' % (i, s) for i, s in sorted(col.items(), key=lambda t: str(t[0])))))
        return 'PMat(%s)' % '; '.join(parts)

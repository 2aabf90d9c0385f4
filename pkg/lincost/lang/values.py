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

"""Runtime values of the analyzed language."""

from dataclasses import dataclass, field
from typing import Any, Mapping, Union


@dataclass(frozen=True)
class VBool:
    """A boolean."""

    value: bool

    def __str__(self):
        return 'true' if self.value else 'false'


@dataclass(frozen=True)
class VNil:
    """The empty list."""

    def __str__(self):
        return '[]'


@dataclass(frozen=True)
class VCons:
    """A list cell."""

    head: 'Value'
    tail: 'Value'

    def __str__(self):
        return '[%s]' % ', '.join(str(v) for v in iter_list(self))


@dataclass(frozen=True)
class VPair:
    """A pair."""

    fst: 'Value'
    snd: 'Value'

    def __str__(self):
        return '(%s, %s)' % (self.fst, self.snd)


@dataclass(frozen=True)
class VClosure:
    """A recursive closure: `self_name` is bound to the closure itself inside `body`."""

    env: Mapping[str, 'Value'] = field(compare=False, hash=False)
    self_name: str = ''
    arg: str = ''
    body: Any = None

    def __str__(self):
        return '<fun %s>' % self.self_name


Value = Union[VBool, VNil, VCons, VPair, VClosure]

NIL = VNil()
TRUE = VBool(True)
FALSE = VBool(False)


def iter_list(v: Value):
    """Yield the elements of a list value."""
    while isinstance(v, VCons):
        yield v.head
        v = v.tail
    if not isinstance(v, VNil):
        raise ValueError('Not a list value: %r' % (v,))


def list_length(v: Value) -> int:
    """Number of cells of a list value."""
    return sum(1 for _ in iter_list(v))


def from_python(obj) -> Value:
    """Build a value from nested Python bools, lists and 2-tuples."""
    if isinstance(obj, bool):
        return VBool(obj)
    if isinstance(obj, tuple) and len(obj) == 2:
        return VPair(from_python(obj[0]), from_python(obj[1]))
    if isinstance(obj, list):
        out: Value = NIL
        for item in reversed(obj):
            out = VCons(from_python(item), out)
        return out
    raise ValueError('Cannot convert %r to a value' % (obj,))


def to_python(v: Value):
    """Inverse of `from_python`; closures are returned unchanged."""
    if isinstance(v, VBool):
        return v.value
    if isinstance(v, VPair):
        return to_python(v.fst), to_python(v.snd)
    if isinstance(v, (VNil, VCons)):
        return [to_python(x) for x in iter_list(v)]
    return v

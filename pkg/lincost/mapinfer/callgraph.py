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

"""Call graph of a program and its strongly connected components."""

from typing import Dict, List, NamedTuple, Tuple

from lincost.lang.syntax import Program, free_vars


class SCC(NamedTuple):
    """Mutually recursive functions, in declaration order."""

    members: Tuple[str, ...]
    recursive: bool


def call_graph(program: Program) -> Dict[str, List[str]]:
    """Top-level functions each declaration mentions, itself included."""
    names = program.names
    graph = {}
    for d in program.decls:
        mentioned = free_vars(d.body) - {d.arg}
        graph[d.self_name] = [n for n in names if n in mentioned]
    return graph


class SCCAnalysis:
    """Tarjan's algorithm; components come out callees first."""

    def __init__(self, graph: Dict[str, List[str]]):
        self._graph = graph
        self._lowlinks: Dict[str, int] = {}
        self._order: Dict[str, int] = {}
        self._stack: List[str] = []
        self._on_stack = set()
        self._counter = 0
        self._sccs: List[SCC] = []

    def analyze(self) -> List[SCC]:
        """Components in topological order of the condensation, callees before callers."""
        for node in self._graph:
            if node not in self._order:
                self._analyze_r(node)
        return self._sccs

    def _analyze_r(self, node: str):
        self._order[node] = self._lowlinks[node] = self._counter
        self._counter += 1
        self._stack.append(node)
        self._on_stack.add(node)

        for succ in self._graph[node]:
            if succ not in self._order:
                self._analyze_r(succ)
                self._lowlinks[node] = min(self._lowlinks[node], self._lowlinks[succ])
            elif succ in self._on_stack:
                self._lowlinks[node] = min(self._lowlinks[node], self._order[succ])

        if self._lowlinks[node] == self._order[node]:
            members = []
            while True:
                top = self._stack.pop()
                self._on_stack.discard(top)
                members.append(top)
                if top == node:
                    break
            rank = {n: i for i, n in enumerate(self._graph)}
            members.sort(key=rank.get)
            recursive = len(members) > 1 or node in self._graph[node]
            self._sccs.append(SCC(tuple(members), recursive))


def topological_sccs(program: Program) -> List[SCC]:
    """Strongly connected components of the call graph, callees first."""
    return SCCAnalysis(call_graph(program)).analyze()

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

"""The realistic corpus: common list functions with golden input/output pairs."""

import os
from typing import List, NamedTuple, Optional, Tuple

from lincost.const import CORPUS_DEGREE, DEFAULT_WEIGHT_BASE
from lincost.lang.parser import parse_program
from lincost.lang.syntax import Program
from lincost.mapinfer import FunReport, MatrixInference, prepare_program
from lincost.potential import Basis
from lincost.utils import logging

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'corpus')

T, F = True, False


class CorpusEntry(NamedTuple):
    """One corpus function: display name, source file, analyzed declaration, golden pairs."""

    name: str
    file: str
    fname: str
    golden: Tuple[tuple, ...]

    @property
    def path(self) -> str:
        """Absolute path of the source."""
        return os.path.join(CORPUS_DIR, self.file)

    def load(self) -> Program:
        """Parse the source."""
        with open(self.path, 'r') as f:
            return parse_program(f.read())


CORPUS = (
    CorpusEntry('cons', 'cons.lc', 'cons',
                (((T, []), [T]), ((F, [T]), [F, T]), ((T, [F, F]), [T, F, F]))),
    CorpusEntry('uncons', 'uncons.lc', 'uncons',
                (([], (F, [])), ([T], (T, [])), ([F, T, T], (F, [T, T])))),
    CorpusEntry('map', 'map.lc', 'negate_all',
                (([], []), ([T], [F]), ([T, F, F], [F, T, T]))),
    CorpusEntry('filter', 'filter.lc', 'keep_true',
                (([], []), ([F, F], []), ([T, F, T], [T, T]))),
    CorpusEntry('zip', 'zip.lc', 'zip',
                ((([], [T]), []), (([T, F], [F]), [(T, F)]), (([T, F], [F, T]), [(T, F), (F, T)]))),
    CorpusEntry('unzip', 'unzip.lc', 'unzip',
                (([], ([], [])), ([(T, F)], ([T], [F])), ([(T, F), (F, F)], ([T, F], [F, F])))),
    CorpusEntry('insert', 'insert.lc', 'insert',
                (((T, []), [T]), ((F, [T]), [F, T]), ((T, [F, T]), [F, T, T]))),
    CorpusEntry('remove', 'remove.lc', 'remove',
                (((T, []), []), ((T, [F, T, T]), [F, T]), ((F, [F]), []))),
    CorpusEntry('insertion sort', 'isort.lc', 'isort',
                (([], []), ([T, F], [F, T]), ([T, F, T, F], [F, F, T, T]))),
    CorpusEntry('split', 'split.lc', 'split',
                (([], ([], [])), ([T], ([T], [])), ([T, F, F], ([T, F], [F])))),
    CorpusEntry('merge', 'merge.lc', 'merge',
                ((([], [T]), [T]), (([F, T], []), [F, T]), (([F, T], [F, T]), [F, F, T, T]))),
    CorpusEntry('merge sort', 'msort.lc', 'msort',
                (([], []), ([T], [T]), ([T, F, T, F], [F, F, T, T]))),
)


def realistic_corpus() -> List[CorpusEntry]:
    """The corpus in table order."""
    return list(CORPUS)


def analyze_corpus(basis: Optional[Basis] = None, weight_base: int = DEFAULT_WEIGHT_BASE,
                   entries: Optional[List[CorpusEntry]] = None) -> List[Tuple[CorpusEntry, FunReport]]:
    """
    Infer the matrix of every corpus function.

    Args:
        basis (Basis): defaults to polynomial potential of degree `CORPUS_DEGREE`.

    Returns:
        List: (entry, report of the entry's declaration) pairs in corpus order.
    """
    basis = basis or Basis.polynomial(CORPUS_DEGREE)
    out = []
    for entry in entries or CORPUS:
        inference = MatrixInference(prepare_program(entry.load()), basis, weight_base)
        report = inference.infer(entry.fname)
        logging.info('corpus %s: %s in %.3fs' % (entry.name, report.status.value, report.total_secs))
        out.append((entry, report))
    return out

import json

import pytest

from lincost.classic import classic_infer
from lincost.driver.corpus import CORPUS, analyze_corpus, realistic_corpus
from lincost.driver.report import CORPUS_COLUMNS, corpus_rows, corpus_text, report_json, report_text
from lincost.driver.synthetic import synthetic_program
from lincost.lang.evaluator import evaluate_program
from lincost.lang.values import from_python, to_python
from lincost.mapinfer import MatrixInference, check_soundness, infer_function, prepare_program
from lincost.mapinfer.inference import PAIR_NOTE
from lincost.potential import Basis


def test_corpus_size():
    names = [entry.name for entry in realistic_corpus()]
    assert len(names) == 12
    assert names[0] == 'cons'
    assert names[-1] == 'merge sort'


@pytest.mark.parametrize(
    argnames='entry',
    argvalues=CORPUS,
    ids=[entry.file for entry in CORPUS]
)
def test_corpus_golden(entry):
    program = entry.load()
    assert entry.fname in program.names
    for arg, expected in entry.golden:
        assert to_python(evaluate_program(program, entry.fname, from_python(arg))) == expected


def test_analyze_corpus_subset():
    results = analyze_corpus(Basis.polynomial(2), entries=list(CORPUS[:2]))
    assert [entry.name for entry, _ in results] == ['cons', 'uncons']
    assert all(r.status.ok for _, r in results)
    rows = corpus_rows(results)
    assert all(len(row) == len(CORPUS_COLUMNS) for row in rows)
    assert all(row[5] == 'yes' and row[6] == 'yes' for row in rows)
    text = corpus_text(results)
    assert text.splitlines()[0].startswith('function')
    assert len(text.splitlines()) == 3


@pytest.mark.integration
def test_corpus_all_linear():
    results = analyze_corpus()
    assert len(results) == 12
    for entry, report in results:
        assert report.status.ok, entry.name
        assert report.linear, entry.name


def test_report_text_and_json():
    basis = Basis.polynomial(2)
    program = CORPUS[0].load()
    new = infer_function(program, 'cons', basis)
    classic = classic_infer(program, 'cons', basis)
    assert PAIR_NOTE in new.diagnostics
    doc = json.loads(report_json([new, classic]))
    assert [f['algo'] for f in doc['functions']] == ['new', 'classic']
    text = report_text([new, classic])
    assert text.startswith('cons [new] ')
    assert 'cons [classic] ' in text


@pytest.mark.parametrize(
    argnames='basis',
    argvalues=[Basis.polynomial(2), pytest.param(Basis.polynomial(10), marks=pytest.mark.integration)]
)
def test_merge_and_msort_keep_list_potential(basis):
    entries = [entry for entry in CORPUS if entry.file in ('merge.lc', 'msort.lc')]
    results = analyze_corpus(basis, entries=entries)
    assert [entry.name for entry, _ in results] == ['merge', 'merge sort']
    for entry, report in results:
        assert report.status.ok, entry.name
        assert report.linear, entry.name
        assert not report.reallocates, entry.name


@pytest.mark.parametrize(
    argnames='basis, samples',
    argvalues=[
        (Basis.polynomial(2), 30),
        (Basis.exponential(3), 30),
        pytest.param(Basis.polynomial(10), 200, marks=pytest.mark.integration),
        pytest.param(Basis.exponential(4), 200, marks=pytest.mark.integration),
    ]
)
def test_inferred_matrices_never_create_potential(basis, samples):
    programs = [(entry.file, entry.load()) for entry in CORPUS]
    programs += [('synthetic c=2 l=2', synthetic_program(2, 2)), ('synthetic c=1 l=3', synthetic_program(1, 3))]
    for source, program in programs:
        inference = MatrixInference(prepare_program(program), basis)
        inference.infer_all()
        for name, m in inference.matrices.items():
            if name not in inference.program.names:
                continue
            violations = check_soundness(inference.program, name, m, basis, samples=samples, max_length=8)
            assert violations == [], (source, name, violations[0])

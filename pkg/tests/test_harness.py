import json
import logging

import pytest
from sympy import factorint

from classifiers import THEOREM_IDS, TheoremError, is_admissible_cyclic_order, rhs_predicate
from group import GroupError, GroupSpecError
from harness import (
    DEFAULT_CORPUS,
    PRODUCT_ORDER_LIMIT,
    Subject,
    analyze_group,
    default_corpus,
    get_case,
    load_corpus_file,
    make_entry,
    parse_corpus,
    parse_path,
    product_pairs,
    run_all,
    run_theorem_case,
)
from pattern import PatternError, is_cograph, is_free, verify_witness

SMALL_CORPUS = ['C1', 'C2', 'C3', 'C6', 'C9', 'C12', 'C36', 'D4', 'D6', 'Q8', 'E2^3', 'C3xC3', 'S3', 'A4',
                'SD(7,3,2)', 'SD(5,4,4)', 'C2xC6']


def corpus_of(*specs):
    return [make_entry(s) for s in specs]


def without_time(reports):
    return [{k: v for k, v in r.to_dict().items() if k != 'ms'} for r in reports]


# ---------------------------------------------------------
# Corpus
# ---------------------------------------------------------
def test_default_corpus():
    corpus = default_corpus()
    labels = [e.label for e in corpus]
    assert len(corpus) >= 45
    assert len(set(labels)) == len(labels)
    for spec in ['S6', 'A7', 'C36', 'E2^3xC9', 'C6', 'D6', 'PSL(2,13)', 'Sz(512)']:
        assert spec in labels
    assert labels == [make_entry(s).label for s in DEFAULT_CORPUS]


def test_corpus_tags():
    entries = {e.label: e for e in default_corpus()}
    assert entries['Sz(8)'].rhs_only and entries['Sz(8)'].parameter == 8
    assert not entries['PSL(2,7)'].rhs_only and entries['PSL(2,7)'].parameter == 7
    assert 'product' in entries['SD(7,3,2)'].tags
    assert 'product' not in entries['C12'].tags
    assert entries['S6'].family == 'S' and entries['S6'].parameter == 6
    assert entries['C6'].parameter is None
    assert entries['A7'].order == 2520


def test_parse_corpus():
    entries = parse_corpus(['# small groups', 'C4', '', '  S3  # symmetric', 'C2xC6'])
    assert [e.label for e in entries] == ['C4', 'S3', 'C2xC6']
    with pytest.raises(GroupSpecError, match='corpus.txt:2'):
        parse_corpus(['C4', 'K7'], 'corpus.txt')


def test_load_corpus_file(tmp_path):
    path = tmp_path / 'corpus.txt'
    path.write_text('C4xC4\n# comment\nQ8\n')
    assert [e.label for e in load_corpus_file(str(path))] == ['C4xC4', 'Q8']


def test_product_pairs():
    pairs = product_pairs(default_corpus())
    assert len(pairs) == 13 * 13
    labels = {(g.label, h.label) for g, h in pairs}
    assert ('C4', 'C3') in labels and ('C3', 'C4') in labels and ('C6', 'C6') in labels
    assert all(g.order * h.order <= 2048 for g, h in pairs)
    assert product_pairs(corpus_of('C1', 'C2')) == [(make_entry('C2'), make_entry('C2'))]


def test_product_order_limit():
    assert PRODUCT_ORDER_LIMIT == 2048
    pairs = product_pairs(corpus_of('C2', 'C3', 'C4'), limit=8)
    assert [(g.label, h.label) for g, h in pairs] == [('C2', 'C2'), ('C2', 'C3'), ('C2', 'C4'), ('C3', 'C2'),
                                                      ('C4', 'C2')]
    report = run_theorem_case('T-P5P5B-PRODUCT', corpus_of('C2', 'C3', 'C4'), product_order_limit=6)
    assert [e.group for e in report.entries] == ['C2xC2', 'C2xC3', 'C3xC2']


def test_subject_builds_lazily():
    subject = Subject(corpus_of('C4', 'C3'))
    assert subject.label == 'C4xC3'
    assert subject._group is None
    assert subject.group.order == 12
    assert subject.flags.is_cyclic
    assert subject.reduced().original is subject.graph()


def test_build_failure_names_the_spec(monkeypatch):
    monkeypatch.setenv('PG_GROUP_CAP', '100')
    subject = Subject(corpus_of('S5'))
    with pytest.raises(GroupError, match="'S5'"):
        _ = subject.group


# ---------------------------------------------------------
# Single cases
# ---------------------------------------------------------
def test_unknown_case():
    with pytest.raises(TheoremError):
        run_theorem_case('T-NOPE', [])


@pytest.mark.slow
def test_symmetric_groups():
    report = run_theorem_case('T-SN', default_corpus())
    assert [e.group for e in report.entries] == ['S2', 'S3', 'S4', 'S5', 'S6']
    assert report.mismatches == 0
    s6 = report.entry('S6')
    assert s6.graph_side is False and s6.rhs is False
    assert s6.witness.name == 'P5'
    assert all(e.graph_side for e in report.entries[:4])


def test_diamond_case():
    report = run_theorem_case('T-DIAMOND', corpus_of(*SMALL_CORPUS))
    assert report.mismatches == 0
    c6 = report.entry('C6')
    assert c6.graph_side is False and c6.rhs is False
    subject = Subject(corpus_of('C6'))
    assert verify_witness(subject.graph(), 'diamond', c6.witness.vertices)
    assert report.entry('D4').graph_side is True
    assert report.entry('Q8').graph_side is False


def test_chain_case(caplog):
    with caplog.at_level(logging.INFO, logger='harness.verify'):
        report = run_theorem_case('T-CHAIN', corpus_of(*SMALL_CORPUS))
    assert report.mismatches == 0
    e23 = report.entry('E2^3')
    assert e23.graph_side and e23.rhs
    for spec in ['C3', 'S3']:
        assert report.entry(spec).graph_side
    for spec in ['C9', 'C3xC3', 'A4', 'C12']:
        assert not report.entry(spec).graph_side
    assert 'sub-case' in caplog.text


def test_applicability():
    corpus = corpus_of(*SMALL_CORPUS)
    nilpotent = [e.group for e in run_theorem_case('T-P2P3-NILP', corpus).entries]
    non_nilpotent = [e.group for e in run_theorem_case('T-P2P3-NONNILP', corpus).entries]
    assert 'Q8' in nilpotent and 'S3' not in nilpotent
    assert 'S3' in non_nilpotent and 'Q8' not in non_nilpotent
    assert sorted(nilpotent + non_nilpotent) == sorted(SMALL_CORPUS)
    eppo = [e.group for e in run_theorem_case('S-COGRAPH-NULLPRIME', corpus).entries]
    assert 'C6' not in eppo and 'A4' in eppo


def test_p2p3_cases():
    corpus = corpus_of(*SMALL_CORPUS, 'C30', 'E2^3xC9')
    nilpotent = run_theorem_case('T-P2P3-NILP', corpus)
    non_nilpotent = run_theorem_case('T-P2P3-NONNILP', corpus)
    assert nilpotent.mismatches == 0 and non_nilpotent.mismatches == 0
    assert nilpotent.entry('C12').graph_side and nilpotent.entry('C2xC6').graph_side
    for spec in ['C36', 'C30', 'E2^3xC9']:
        assert not nilpotent.entry(spec).graph_side
    assert non_nilpotent.entry('SD(7,3,2)').graph_side and non_nilpotent.entry('A4').graph_side
    assert not non_nilpotent.entry('SD(5,4,4)').graph_side


def test_diamond_codiamond_case():
    report = run_theorem_case('T-DIAMOND-CODIAMOND', corpus_of('C8', 'E2^3', 'Q8', 'C12', 'S3'))
    assert report.mismatches == 0
    assert [e.graph_side for e in report.entries] == [True, True, False, False, False]
    assert report.positives == 2
    for spec in ['Q8', 'C12', 'S3']:
        entry = report.entry(spec)
        graph = Subject(corpus_of(spec)).graph()
        assert verify_witness(graph, entry.witness.name, entry.witness.vertices)


def test_even_hole_diamond_case():
    report = run_theorem_case('T-EVENHOLE-DIAMOND', corpus_of('C8', 'D4', 'S4', 'C6', 'Q8'), min_hole_length=6)
    assert report.mismatches == 0
    assert [e.graph_side for e in report.entries] == [True, True, True, False, False]


def test_rhs_only_entries():
    report = run_theorem_case('T-SZ', default_corpus())
    assert [e.group for e in report.entries] == ['Sz(8)', 'Sz(32)', 'Sz(128)', 'Sz(512)']
    for entry in report.entries:
        assert entry.graph_side is None and entry.agree and entry.rhs
        assert entry.to_dict()['witness'] is None
    # Suzuki atoms take part in no other case
    assert all(e.group != 'Sz(8)' for e in run_theorem_case('T-DIAMOND', corpus_of('Sz(8)', 'C2')).entries)


def test_report_schema():
    report = run_theorem_case('T-DIAMOND', corpus_of('C6', 'C8'))
    document = report.to_dict()
    assert set(document) == {'theorem', 'entries', 'mismatches', 'published_mismatches', 'ms'}
    assert document['theorem'] == 'T-DIAMOND'
    assert document['mismatches'] == document['published_mismatches'] == 0
    c6, c8 = document['entries']
    assert set(c6) == {'group', 'graph_side', 'rhs', 'agree', 'published', 'published_agree', 'witness'}
    assert len(c6['witness']) == 4 and all(isinstance(label, str) for label in c6['witness'])
    assert c8 == {'group': 'C8', 'graph_side': True, 'rhs': True, 'agree': True, 'published': True,
                  'published_agree': True, 'witness': None}
    json.dumps(document)


def test_mismatch_is_reported(tmp_path, caplog):
    path = tmp_path / 'corpus.txt'
    path.write_text('C4\nC4xC4\n')
    report = run_theorem_case('T-P2P3-NILP', load_corpus_file(str(path)))
    assert report.mismatches == 1
    entry = report.entry('C4xC4')
    assert entry.rhs and not entry.graph_side and not entry.agree
    assert entry.witness.name == 'P2uP3'
    assert 'mismatch on C4xC4' in caplog.text


def test_published_statement_is_reported(caplog):
    with caplog.at_level(logging.INFO, logger='harness.verify'):
        report = run_theorem_case('T-DIAMOND', corpus_of('Q8', 'C8', 'C6'))
    assert report.mismatches == 0
    assert report.published_mismatches == 1
    q8 = report.entry('Q8')
    assert q8.agree and not q8.published_agree
    assert q8.graph_side is False and q8.rhs is False and q8.published is True
    assert q8.witness.name == 'diamond'
    assert report.entry('C6').published_agree
    assert 'T-DIAMOND on Q8' in caplog.text


def test_published_nilpotent_p2p3_condition():
    report = run_theorem_case('T-P2P3-NILP', corpus_of('E2^3xC9', 'C6'))
    entry = report.entry('E2^3xC9')
    assert entry.graph_side is False and entry.rhs is False and entry.published is True
    assert entry.agree and not entry.published_agree
    assert report.entry('C6').published_agree


def test_published_product_condition():
    case = get_case('T-P5P5B-PRODUCT')
    subject = Subject(corpus_of('C4', 'C6'))
    assert not case.rhs(subject) and case.published_rhs(subject)
    assert case.graph_side(subject).holds is False


def test_rhs_only_entries_agree_with_published():
    report = run_theorem_case('T-SZ', corpus_of('Sz(8)'))
    entry = report.entry('Sz(8)')
    assert entry.published is True and entry.published_agree
    assert report.published_mismatches == 0


# ---------------------------------------------------------
# Direct products
# ---------------------------------------------------------
@pytest.mark.parametrize('left, right, expected', [
    ('C4', 'C3', True), ('C2', 'S3', True), ('C3', 'SD(7,3,2)', True), ('Q8', 'D4', True),
    ('C4', 'C9', False), ('C6', 'C6', False), ('C9', 'SD(3,2,2)', False), ('C3', 'S3', False),
])
def test_product_pairs_agree(left, right, expected):
    case = get_case('T-P5P5B-PRODUCT')
    subject = Subject(corpus_of(left, right))
    assert case.applies(subject)
    assert case.rhs(subject) == expected
    assert case.graph_side(subject).holds == expected


@pytest.mark.slow
def test_product_corpus():
    report = run_theorem_case('T-P5P5B-PRODUCT', default_corpus())
    assert report.applicable == 13 * 13
    assert report.mismatches == 0
    assert report.entry('C4xC3').rhs and not report.entry('C4xC9').rhs


# ---------------------------------------------------------
# Sweeps
# ---------------------------------------------------------
@pytest.mark.parametrize('n', [n if n <= 60 else pytest.param(n, marks=pytest.mark.slow) for n in range(1, 201)])
def test_cyclic_sweep(power_graph, n):
    assert is_free(power_graph(f'C{n}'), ['P5', 'P5bar']).free == is_admissible_cyclic_order(n)


@pytest.mark.parametrize('n', range(1, 101))
def test_cyclic_cographs(power_graph, n):
    exponents = sorted(factorint(n).values())
    expected = len(exponents) <= 1 or exponents == [1, 1]
    assert is_cograph(power_graph(f'C{n}')).holds == expected


@pytest.mark.slow
def test_psl2_coherence():
    corpus = default_corpus()
    report = run_theorem_case('T-PSL2', corpus)
    assert [e.group for e in report.entries] == [f'PSL(2,{q})' for q in (4, 5, 7, 8, 9, 11, 13)]
    assert report.mismatches == 0
    for entry, q in zip(report.entries, (4, 5, 7, 8, 9, 11, 13)):
        assert entry.rhs == rhs_predicate('T-PSL2', q)
    alternating = run_theorem_case('T-AN', corpus)
    assert report.entry('PSL(2,4)').graph_side == alternating.entry('A5').graph_side
    assert report.entry('PSL(2,9)').graph_side == alternating.entry('A6').graph_side


# ---------------------------------------------------------
# Whole corpus
# ---------------------------------------------------------
def test_run_all_empty_corpus():
    reports = run_all([])
    assert [r.theorem for r in reports] == list(THEOREM_IDS)
    assert all(r.applicable == 0 and r.mismatches == 0 for r in reports)


def test_run_all_c2():
    reports = run_all(corpus_of('C2'))
    assert len(reports) == 16
    assert all(r.mismatches == 0 for r in reports)
    assert run_all(corpus_of('C2'))[0].entry('C2').graph_side


def test_concurrent_matches_sequential():
    corpus = corpus_of('C2', 'C6', 'S3', 'Q8', 'D4', 'C12', 'A4')
    sequential = run_all(corpus, jobs=1)
    concurrent = run_all(corpus, jobs=3)
    assert without_time(sequential) == without_time(concurrent)


@pytest.mark.slow
def test_default_corpus_has_no_mismatches():
    reports = run_all(default_corpus())
    assert len(reports) == 16
    assert {r.theorem: r.mismatches for r in reports} == {t: 0 for t in THEOREM_IDS}


# ---------------------------------------------------------
# Analysis
# ---------------------------------------------------------
def test_analyze_a5():
    document = analyze_group('A5')
    assert document['order'] == 60
    assert document['flags']['is_eppo']
    assert document['prime_graph'] == {'primes': [2, 3, 5], 'edges': [], 'null': True}
    assert document['cograph']['holds']
    assert document['pattern_sets']['P5,P5bar']
    json.dumps(document)


def test_analyze_trivial_group():
    document = analyze_group('C1')
    assert document['order'] == 1
    assert document['factorization'] == []
    assert all(v['free'] for v in document['freeness'].values())
    assert document['chordal']['holds'] and document['cograph']['holds'] and document['chain']['holds']


def test_analyze_psl27():
    document = analyze_group('PSL(2,7)', patterns='P5,P5bar')
    assert document['order'] == 168
    assert list(document['freeness']) == ['P5', 'P5bar']
    assert document['pattern_sets'] == {'P5,P5bar': True}


def test_analyze_witnesses():
    document = analyze_group('C6', patterns=['diamond', 'C4'], proper=True)
    assert document['graph']['proper'] and document['graph']['vertices'] == 5
    assert document['freeness']['C4'] == {'free': True, 'witness': None}
    witness = document['freeness']['diamond']['witness']
    assert document['freeness']['diamond']['free'] is False
    assert witness['pattern'] == 'diamond' and len(witness['labels']) == 4


def test_analyze_path():
    document = analyze_group('S3', patterns='P4', path='(1 2); (); (1 3)')
    assert document['path'] == {'elements': ['(1 2)', '()', '(1 3)'], 'induced': True}
    assert not analyze_group('S3', patterns='P4', path='(1 2) ~ (1 3)')['path']['induced']
    with pytest.raises(GroupError):
        analyze_group('S3', proper=True, patterns='P4', path='(1 2); ()')
    assert parse_path(' (1 2) ~ (1 2 3);(4 5) ') == ['(1 2)', '(1 2 3)', '(4 5)']


def test_analyze_export(tmp_path):
    destination = tmp_path / 'graphs' / 's3.json'
    document = analyze_group('S3', patterns='P4', export=('json', str(destination)))
    assert document['export'] == {'format': 'json', 'path': str(destination)}
    assert json.loads(destination.read_text())['n'] == 6


def test_analyze_errors():
    with pytest.raises(GroupSpecError):
        analyze_group('Sz(8)')
    with pytest.raises(PatternError):
        analyze_group('C4', patterns='P6')
    with pytest.raises(PatternError):
        analyze_group('C4', twin_cap=3)

import csv
import json

import pytest

from main import fill_defaults, main, parse_args
from process_results import format_summary, report_rows, save, save_report
from harness import make_entry, run_theorem_case


@pytest.fixture
def corpus_file(tmp_path):
    def write(*specs):
        path = tmp_path / 'corpus.txt'
        path.write_text('\n'.join(['# test corpus', *specs]) + '\n')
        return str(path)
    return write


# ---------------------------------------------------------
# Arguments and defaults
# ---------------------------------------------------------
def test_parse_args():
    args = parse_args(['verify', 'all', '--no-save', '--jobs', '2', '-vv', '--min-hole-length', '6'])
    assert args['command'] == 'verify' and args['theorem'] == 'all'
    assert args['save'] is False and args['jobs'] == 2 and args['verbose'] == 2
    assert args['min_hole_length'] == 6
    assert parse_args(['verify', 'T-P5P5B-PRODUCT', '--product-order-limit', '64'])['product_order_limit'] == 64
    assert parse_args(['analyze', 'C6', '--export', 'dot', 'c6.dot'])['export'] == ['dot', 'c6.dot']


def test_fill_defaults(tmp_path):
    path = tmp_path / 'defaults.yml'
    path.write_text('verify:\n  jobs: 4\n  save: no\n')
    args = fill_defaults(parse_args(['verify', 'T-SN']), str(path))
    assert args['jobs'] == 4 and args['save'] is False
    assert 'corpus' not in args and 'twin_cap' not in args
    args = fill_defaults(parse_args(['verify', 'T-SN', '--jobs', '2']), str(path))
    assert args['jobs'] == 2


def test_fill_defaults_without_file(tmp_path):
    args = fill_defaults(parse_args(['numbers', 'sz', '8']), str(tmp_path / 'missing.yml'))
    assert args == {'command': 'numbers', 'kind': 'sz', 'q': 8}


def test_repository_defaults():
    args = fill_defaults(parse_args(['verify', 'T-SN']))
    assert args['save'] is True and args['save_dir'] == 'results' and args['twin_cap'] == 5
    assert args['product_order_limit'] == 2048


# ---------------------------------------------------------
# Commands
# ---------------------------------------------------------
def test_numbers(capsys):
    assert main(['numbers', 'psl2', '11']) == 0
    assert 'condition holds: True' in capsys.readouterr().out
    assert main(['numbers', 'sz', '8', '--json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert [item['n'] for item in document['numbers']] == [7, 5, 13]
    assert document['holds']


def test_numbers_error(capsys):
    assert main(['numbers', 'psl2', '6']) == 2
    assert capsys.readouterr().err.startswith('pg: error:')


def test_corpus_list(capsys, corpus_file):
    assert main(['corpus', 'list']) == 0
    out = capsys.readouterr().out
    assert 'S6' in out and 'Sz(8)' in out and 'rhs-only' in out
    assert main(['corpus', 'list', '--corpus', corpus_file('C4', 'Q8'), '--json']) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [{'group': 'C4', 'order': 4, 'tags': ['C', 'product']}, {'group': 'Q8', 'order': 8,
                                                                           'tags': ['Q', 'product']}]


def test_analyze(capsys):
    assert main(['analyze', 'C6', '--patterns', 'diamond', '--json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['order'] == 6 and document['freeness']['diamond']['free'] is False
    assert main(['analyze', 'A5', '--patterns', 'P5,P5bar']) == 0
    out = capsys.readouterr().out
    assert '{P5,P5bar}-free: True' in out and 'prime graph: null' in out


def test_analyze_path(capsys):
    assert main(['analyze', 'S3', '--patterns', 'P4', '--path', '(1 2) ~ () ~ (1 3)', '--json']) == 0
    assert json.loads(capsys.readouterr().out)['path']['induced']


def test_analyze_export(tmp_path, capsys):
    destination = tmp_path / 'c4.dot'
    assert main(['analyze', 'C4', '--patterns', 'P4', '--export', 'dot', str(destination)]) == 0
    assert destination.read_text().startswith('graph G {')
    assert main(['analyze', 'C4', '--patterns', 'P4', '--export', 'png', str(destination)]) == 2


def test_analyze_errors(capsys):
    assert main(['analyze', 'K7']) == 2
    assert main(['analyze', 'Sz(8)']) == 2
    assert main(['analyze', 'C4', '--patterns', 'P9']) == 2
    assert capsys.readouterr().err.count('pg: error:') == 3


def test_cap_from_environment(monkeypatch, capsys):
    monkeypatch.setenv('PG_GROUP_CAP', '50')
    assert main(['analyze', 'A5', '--patterns', 'P4']) == 2
    assert 'cap 50' in capsys.readouterr().err
    monkeypatch.setenv('PG_GROUP_CAP', 'many')
    assert main(['analyze', 'C4', '--patterns', 'P4']) == 2


def test_verify(capsys, corpus_file):
    assert main(['verify', 'T-DIAMOND', '--corpus', corpus_file('C6', 'C8', 'S4'), '--no-save', '--json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['theorem'] == 'T-DIAMOND' and document['mismatches'] == 0
    assert [e['group'] for e in document['entries']] == ['C6', 'C8', 'S4']


def test_verify_all(capsys, corpus_file):
    assert main(['verify', 'all', '--corpus', corpus_file('C2', 'C3', 'S3'), '--no-save']) == 0
    out = capsys.readouterr().out
    assert 'T-CHAIN' in out and 'S-COGRAPH-NILP' in out and 'MISMATCH' not in out


def test_verify_mismatch_saves_reports(tmp_path, capsys, corpus_file):
    save_dir = tmp_path / 'results'
    code = main(['verify', 'T-P2P3-NILP', '--corpus', corpus_file('C4', 'C4xC4'), '--save-dir', str(save_dir)])
    assert code == 1
    assert 'MISMATCH T-P2P3-NILP C4xC4' in capsys.readouterr().out
    csv_file, = save_dir.glob('verify/*/T-P2P3-NILP.csv')
    with open(csv_file) as f:
        rows = list(csv.DictReader(f))
    assert [r['group'] for r in rows] == ['C4', 'C4xC4']
    assert rows[1]['agree'] == 'False'
    json_file, = save_dir.glob('verify/*/T-P2P3-NILP.json')
    assert json.loads(json_file.read_text())[0]['mismatches'] == 1


def test_verify_unknown_theorem(capsys):
    assert main(['verify', 'T-NOPE', '--no-save']) == 2
    assert 'Unknown theorem' in capsys.readouterr().err


def test_verify_reports_published_disagreement(capsys, corpus_file):
    assert main(['verify', 'T-DIAMOND', '--corpus', corpus_file('Q8', 'C8'), '--no-save']) == 0
    out = capsys.readouterr().out
    assert 'PUBLISHED T-DIAMOND Q8: graph side False, published condition True' in out
    assert 'MISMATCH' not in out and 'PUBLISHED T-DIAMOND C8' not in out


def test_verify_product_order_limit(capsys, corpus_file):
    corpus = corpus_file('C2', 'C3', 'C4')
    assert main(['verify', 'T-P5P5B-PRODUCT', '--corpus', corpus, '--no-save', '--json',
                 '--product-order-limit', '8']) == 0
    document = json.loads(capsys.readouterr().out)
    assert [e['group'] for e in document['entries']] == ['C2xC2', 'C2xC3', 'C2xC4', 'C3xC2', 'C4xC2']


# ---------------------------------------------------------
# Saving
# ---------------------------------------------------------
def test_save_appends(tmp_path):
    path = str(tmp_path / 'out')
    save(path, 'rows', [{'a': 1, 'b': 2}])
    save(path, 'rows', [{'a': 3, 'b': 4}])
    save(path, 'rows', [])
    with open(f'{path}/rows.csv') as f:
        assert f.read().splitlines() == ['a,b', '1,2', '3,4']


def test_save_report_and_summary(tmp_path):
    reports = [run_theorem_case('T-DIAMOND', [make_entry('C6'), make_entry('C8')])]
    rows = report_rows(reports)
    assert [r['group'] for r in rows] == ['C6', 'C8']
    assert rows[0]['witness'].count(' ~ ') == 3 and rows[1]['witness'] == ''
    path = save_report(str(tmp_path), 'T-DIAMOND', reports)
    assert (tmp_path / 'T-DIAMOND.csv').exists() and (tmp_path / 'T-DIAMOND.json').exists()
    assert path == str(tmp_path)
    table = format_summary(reports).splitlines()
    assert table[0].split() == ['theorem', 'applicable', 'positives', 'mismatches', 'published', 'ms']
    assert table[1].split() == ['T-DIAMOND', '2', '1', '0', '0', str(reports[0].ms)]
    assert table[-1].split()[:5] == ['total', '2', '1', '0', '0']
    assert rows[1]['published'] is True and rows[1]['published_agree'] is True

# -*- coding: utf-8 -*-
import json
import os
from datetime import datetime
from typing import Optional, Sequence

import process_results as pr

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2


def _dump(document):
    print(json.dumps(document, indent=2))


def analyze(
        spec: str,
        proper: bool = False,
        patterns: Optional[str] = None,
        twin_cap: int = 5,
        export: Optional[Sequence[str]] = None,
        path: Optional[str] = None,
        allow_large: bool = False,
        as_json: bool = False,
        verbose: Optional[int] = None,
) -> int:
    """
    Analyzes one group and its power graph
    :param spec: group spec, e.g. 'SD(7,3,2)'
    :param proper: analyze P*(G) instead of P(G)
    :param patterns: comma-separated catalog patterns; all of them when not given
    :param twin_cap: members kept per twin class
    :param export: (format, file) to write the graph to
    :param path: element sequence, separated by ';' or '~', to re-verify as an induced path
    :param allow_large: raise the group-order cap
    :param as_json: print the JSON document instead of a summary
    :param verbose: how much information to output to console
    :return: exit code
    """
    from group import group_cap
    from harness import analyze_group

    if verbose is None:
        verbose = 0
    document = analyze_group(spec, proper=proper, patterns=patterns or None, twin_cap=twin_cap,
                             export=tuple(export) if export else None, path=path, cap=group_cap(allow_large))
    if as_json:
        _dump(document)
        return EXIT_OK

    graph = document['graph']
    print(f'{document["group"]}: order {document["order"]}, '
          f'{"P*" if graph["proper"] else "P"} has {graph["vertices"]} vertices, {graph["edges"]} edges, '
          f'{graph["twin_classes"]} twin classes')
    flags = document['flags']
    print('  ' + ', '.join(f'{k}={flags[k]}' for k in ('is_p_group', 'is_cyclic', 'is_nilpotent', 'is_eppo',
                                                      'is_epo', 'nested_cyclic')))
    print(f'  prime graph: {"null" if document["prime_graph"]["null"] else document["prime_graph"]["edges"]}')
    for name, result in document['freeness'].items():
        witness = result['witness']
        print(f'  {name}-free: {result["free"]}' + (f'  [{" ~ ".join(witness["labels"])}]' if witness else ''))
    for name, free in document['pattern_sets'].items():
        print(f'  {{{name}}}-free: {free}')
    for name in ('chordal', 'cograph', 'chain'):
        print(f'  {name}: {document[name]["holds"]}')
    if 'path' in document:
        print(f'  induced path {" ~ ".join(document["path"]["elements"])}: {document["path"]["induced"]}')
    return EXIT_OK


def verify(
        theorem: str,
        corpus: Optional[str] = None,
        allow_large: bool = False,
        min_hole_length: int = 4,
        twin_cap: int = 5,
        product_order_limit: int = 2048,
        jobs: int = 1,
        as_json: bool = False,
        verbose: Optional[int] = None,
        save: bool = True,
        save_dir: str = 'results',
) -> int:
    """
    Checks theorems over a corpus: the graph side against the structural side
    :param theorem: a theorem id, or 'all'
    :param corpus: corpus file, one spec per line; the default corpus when not given
    :param allow_large: raise the group-order cap
    :param min_hole_length: shortest even hole counted by T-EVENHOLE-DIAMOND
    :param twin_cap: members kept per twin class
    :param product_order_limit: largest |G|*|H| among the direct-product pairs
    :param jobs: worker processes for 'all'
    :param as_json: print the JSON reports instead of a summary table
    :param verbose: how much information to output to console
    :param save: whether to save the reports or not
    :param save_dir: directory where the reports will be saved
    :return: exit code, 1 if any entry disagrees
    """
    from group import group_cap
    from harness import default_corpus, load_corpus_file, run_all, run_theorem_case

    if verbose is None:
        verbose = 0
    entries = load_corpus_file(corpus) if corpus else default_corpus()
    options = {'cap': group_cap(allow_large), 'twin_cap': twin_cap, 'min_hole_length': min_hole_length,
               'product_order_limit': product_order_limit, 'verbose': verbose}

    if verbose >= 1:
        print(f'Checking {theorem} over {len(entries)} corpus entries.\n')
    if theorem == 'all':
        reports = run_all(entries, jobs=jobs, **options)
    else:
        reports = [run_theorem_case(theorem, entries, **options)]

    # Build a path to save directory
    path = os.path.join(save_dir, 'verify', datetime.now().strftime('%Y-%m-%d-%H-%M')) if save else None
    if save:
        pr.save_report(path, theorem, reports)

    if as_json:
        _dump(reports[0].to_dict() if theorem != 'all' else [r.to_dict() for r in reports])
    else:
        print(pr.format_summary(reports))
        for row in pr.report_rows(reports):
            if not row['agree']:
                print(f'MISMATCH {row["theorem"]} {row["group"]}: graph side {row["graph_side"]}, '
                      f'structural side {row["rhs"]}, witness {row["witness"] or "-"}')
            elif not row['published_agree']:
                print(f'PUBLISHED {row["theorem"]} {row["group"]}: graph side {row["graph_side"]}, '
                      f'published condition {row["published"]}, witness {row["witness"] or "-"}')
    if verbose >= 1 and save:
        print(f'\nReports saved to {path}.')
    return EXIT_MISMATCH if any(r.mismatches for r in reports) else EXIT_OK


def corpus(action: str = 'list', corpus: Optional[str] = None, as_json: bool = False, verbose: Optional[int] = None) \
        -> int:
    """
    Lists a corpus
    :param action: 'list'
    :param corpus: corpus file; the default corpus when not given
    :param as_json: print a JSON list
    """
    from harness import default_corpus, load_corpus_file

    entries = load_corpus_file(corpus) if corpus else default_corpus()
    rows = [{'group': e.label, 'order': e.order, 'tags': list(e.tags)} for e in entries]
    if as_json:
        _dump(rows)
    else:
        for row in rows:
            print(f'{row["group"]:<14} {row["order"]:>7}  {",".join(row["tags"])}')
    return EXIT_OK


def numbers(kind: str, q: int, as_json: bool = False, verbose: Optional[int] = None) -> int:
    """
    Prints a number-theoretic side condition
    :param kind: 'psl2' or 'sz'
    :param q: the field size
    :param as_json: print the JSON document
    :return: exit code; 0 whether or not the condition holds
    """
    from classifiers import psl2_condition, sz_condition

    condition = psl2_condition(q) if kind == 'psl2' else sz_condition(q)
    if as_json:
        _dump(condition.to_dict())
        return EXIT_OK
    for item in condition.to_dict()['numbers']:
        print(f'{item["n"]:>8} = {item["factors"]:<20} admissible: {item["admissible"]}')
    print(f'{condition.family}({q}): condition holds: {condition.holds}')
    return EXIT_OK


COMMANDS = {'analyze': analyze, 'verify': verify, 'corpus': corpus, 'numbers': numbers}


def run(command: str, **args) -> int:
    """
    Runs one sub-command
    :param command: 'analyze', 'verify', 'corpus' or 'numbers'
    :param args: the sub-command's options
    :return: exit code
    """
    return COMMANDS[command](**args)

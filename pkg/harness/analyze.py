import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from classifiers import compute_structure_flags
from group import GroupError, GroupSpec, build_group, parse_group_spec
from pattern import (
    CATALOG,
    MAX_PATTERN_SIZE,
    Pattern,
    PatternError,
    PropertyResult,
    find_induced_path,
    is_chain_graph,
    is_chordal,
    is_cograph,
    is_free,
    parse_patterns,
)
from power_graph import DEFAULT_TWIN_CAP, build_power_graph, build_prime_graph, twin_reduce, write_graph

logger = logging.getLogger(__name__)

# Pattern pairs the theorems ask about, reported as sets next to the single patterns
PATTERN_SETS = {
    'P5,P5bar': ('P5', 'P5bar'),
    'P2uP3,P2uP3bar': ('P2uP3', 'P2uP3bar'),
    'diamond,co-diamond': ('diamond', 'co-diamond'),
}


def _property(result: PropertyResult) -> Dict:
    return {'holds': result.holds, 'witness': result.witness.to_dict() if result.witness is not None else None}


def parse_path(text: str) -> List[str]:
    """Element texts separated by ';' or '~'"""
    return [part.strip() for part in text.replace('~', ';').split(';') if part.strip()]


def analyze_group(
        spec: Union[GroupSpec, str],
        proper: bool = False,
        patterns: Optional[Union[str, Sequence[Union[str, Pattern]]]] = None,
        twin_cap: int = DEFAULT_TWIN_CAP,
        export: Optional[Tuple[str, str]] = None,
        path: Optional[Union[str, Sequence[str]]] = None,
        cap: Optional[int] = None,
) -> Dict:
    """
    Builds a group and its power graph and collects everything the laboratory can say about them
    :param spec: group spec, e.g. 'PSL(2,7)'
    :param proper: analyze P*(G) instead of P(G)
    :param patterns: catalog patterns to test, defaults to the whole catalog
    :param twin_cap: members kept per twin class, at least the largest pattern size
    :param export: (format, path) to write the analyzed graph to
    :param path: element sequence to re-verify as an induced path
    :param cap: group-order cap, defaults to group_cap()
    :return: a JSON-serializable document
    """
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if twin_cap < MAX_PATTERN_SIZE:
        raise PatternError(f'Twin cap {twin_cap} cannot preserve {MAX_PATTERN_SIZE}-vertex patterns')
    selected = parse_patterns(patterns) if patterns is not None else list(CATALOG.values())

    group = build_group(spec, cap)
    flags = compute_structure_flags(group)
    prime_graph = build_prime_graph(group)
    graph = build_power_graph(group, proper=proper)
    reduced = twin_reduce(graph, twin_cap)

    report = is_free(reduced, selected)
    freeness = {name: {'free': w is None, 'witness': w.to_dict() if w is not None else None}
                for name, w in report.witnesses.items()}
    pattern_sets = {}
    for name, members in PATTERN_SETS.items():
        if all(m in report.witnesses for m in members):
            pattern_sets[name] = all(report.witnesses[m] is None for m in members)

    document = {
        'group': group.label,
        'order': group.order,
        'factorization': flags.factorization.to_list(),
        'flags': flags.to_dict(),
        'prime_graph': {
            'primes': prime_graph.primes,
            'edges': [[prime_graph.primes[u], prime_graph.primes[v]] for u, v in prime_graph.graph.edges()],
            'null': prime_graph.is_null,
        },
        'graph': {
            'proper': proper,
            'vertices': graph.n,
            'edges': graph.edge_count,
            'twin_classes': len(reduced.classes),
            'retained': len(reduced.kept),
        },
        'freeness': freeness,
        'pattern_sets': pattern_sets,
        'chordal': _property(is_chordal(reduced)),
        'cograph': _property(is_cograph(reduced)),
        'chain': _property(is_chain_graph(reduced)),
    }

    if path is not None:
        texts = parse_path(path) if isinstance(path, str) else list(path)
        vertices = []
        for text in texts:
            v = group.parse_element(text) - (1 if proper else 0)
            if v < 0:
                raise GroupError('The identity is not a vertex of the proper power graph')
            vertices.append(v)
        document['path'] = {
            'elements': [graph.labels[v] for v in vertices],
            'induced': find_induced_path(graph, vertices),
        }

    if export is not None:
        fmt, destination = export
        write_graph(graph, fmt, destination)
        document['export'] = {'format': fmt, 'path': destination}
        logger.info('Wrote %s to %s', fmt, destination)
    return document

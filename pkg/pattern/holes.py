import logging
from typing import List, Optional, Sequence

import networkx as nx

from power_graph import Graph, bits
from .catalog import PatternError
from .search import GraphLike, PropertyResult, Witness, as_reduced

logger = logging.getLogger(__name__)

PARITIES = ('any', 'even', 'odd')


def _check_bounds(parity: str, min_len: int, max_len: Optional[int]):
    if parity not in PARITIES:
        raise PatternError(f'Unknown hole parity {parity!r}; expected one of {", ".join(PARITIES)}')
    if min_len < 4 or (max_len is not None and max_len < min_len):
        raise PatternError(f'Hole length bounds must satisfy 4 <= min_len <= max_len, got {min_len}..{max_len}')


def _accepts(length: int, parity: str, min_len: int, max_len: int) -> bool:
    if not min_len <= length <= max_len:
        return False
    return parity == 'any' or (length % 2 == 0) == (parity == 'even')


def search_hole(graph: Graph, parity: str = 'any', max_len: Optional[int] = None, min_len: int = 4) \
        -> Optional[List[int]]:
    """
    Depth-first search over induced paths. A cycle is rooted at its smallest vertex s; a path may only
    grow through vertices above s that see none of its internal vertices, and it closes once the new
    end is adjacent to s.
    :param graph: host graph
    :param parity: 'any', 'even' or 'odd'
    :param max_len: longest cycle to look for, defaults to the vertex count
    :param min_len: shortest cycle to look for, at least 4
    :return: the cycle's vertices in order, or None
    """
    _check_bounds(parity, min_len, max_len)
    max_len = graph.n if max_len is None else max_len
    rows = graph.rows

    def extend(path: List[int], blocked: int, above: int) -> Optional[List[int]]:
        s, end = path[0], path[-1]
        t = len(path) - 1
        for w in bits(rows[end] & above & ~blocked):
            if rows[s] >> w & 1:
                if t >= 2 and _accepts(t + 2, parity, min_len, max_len):
                    return path + [w]
                continue
            if t + 3 <= max_len:
                # end becomes internal: its whole closed neighbourhood is off limits from here on
                found = extend(path + [w], blocked | rows[end] | 1 << end, above)
                if found is not None:
                    return found
        return None

    for s in range(graph.n):
        above = ((1 << graph.n) - 1) >> (s + 1) << (s + 1)
        for v in bits(rows[s] & above):
            found = extend([s, v], 1 << s, above)
            if found is not None:
                return found
    return None


def find_hole(graph: GraphLike, parity: str = 'any', max_len: Optional[int] = None, min_len: int = 4,
              shortcut: bool = True) -> Optional[Witness]:
    """
    Finds an induced cycle of length at least min_len on the twin quotient; closed twins on a cycle of
    length four or more would force a chord, so holes survive the quotient
    :param graph: a graph, or its twin reduction
    :param parity: 'any', 'even' or 'odd'
    :param max_len: longest cycle to look for, defaults to the quotient's vertex count
    :param min_len: shortest cycle to look for
    :param shortcut: skip the search when the quotient is chordal
    :return: the hole as a witness on original vertices, or None
    """
    reduced = as_reduced(graph)
    quotient = reduced.quotient
    _check_bounds(parity, min_len, max_len)
    if shortcut and nx.is_chordal(quotient.to_networkx()):
        return None
    cycle = search_hole(quotient, parity, max_len, min_len)
    if cycle is None:
        return None
    vertices = reduced.lift_quotient(cycle)
    name = {'any': 'hole', 'even': 'even-hole', 'odd': 'odd-hole'}[parity]
    return Witness(name, vertices, [reduced.original.labels[v] for v in vertices])


def is_chordal(graph: GraphLike) -> PropertyResult:
    """Maximum cardinality search on the twin quotient; a hole is returned when it fails"""
    reduced = as_reduced(graph)
    if nx.is_chordal(reduced.quotient.to_networkx()):
        return PropertyResult(True)
    witness = find_hole(reduced, 'any', shortcut=False)
    assert witness is not None, 'Non-chordal graph without a hole'
    return PropertyResult(False, witness)


def verify_hole(graph: Graph, cycle: Sequence[int]) -> bool:
    """True if the cycle is induced and has at least four vertices"""
    n = len(cycle)
    if n < 4 or len(set(cycle)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if graph.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True

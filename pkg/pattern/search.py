import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Union

from power_graph import DEFAULT_TWIN_CAP, Graph, TwinReducedGraph, bits, popcount, twin_reduce
from .catalog import MAX_PATTERN_SIZE, Pattern, get_pattern

logger = logging.getLogger(__name__)

GraphLike = Union[Graph, TwinReducedGraph]


@dataclass
class Witness:
    """vertices[i] is the original vertex playing pattern vertex i (or the i-th vertex of a hole)"""
    name: str
    vertices: List[int]
    labels: List[str]

    def to_dict(self) -> dict:
        return {'pattern': self.name, 'vertices': self.vertices, 'labels': self.labels}


@dataclass
class PropertyResult:
    holds: bool
    witness: Optional[Witness] = None


@dataclass
class FreenessReport:
    witnesses: Dict[str, Optional[Witness]] = field(default_factory=dict)

    @property
    def free(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    def first_witness(self) -> Optional[Witness]:
        return next((w for w in self.witnesses.values() if w is not None), None)


def as_reduced(graph: GraphLike, cap: int = DEFAULT_TWIN_CAP) -> TwinReducedGraph:
    if isinstance(graph, TwinReducedGraph):
        assert graph.cap >= MAX_PATTERN_SIZE, f'Twin cap {graph.cap} cannot preserve {MAX_PATTERN_SIZE}-vertex patterns'
        return graph
    return twin_reduce(graph, cap)


def placement_order(pattern: Pattern) -> List[int]:
    """
    Pattern vertices in the order the search places them: the highest-degree vertex first, then
    repeatedly the vertex with the most placed neighbours (ties: higher degree, then lower index)
    """
    adjacency = pattern.graph.rows
    degree = [pattern.degree(u) for u in range(pattern.k)]
    order = [min(range(pattern.k), key=lambda u: (-degree[u], u))]
    placed = 1 << order[0]
    while len(order) < pattern.k:
        rest = [u for u in range(pattern.k) if not placed >> u & 1]
        u = min(rest, key=lambda v: (-popcount(adjacency[v] & placed), -degree[v], v))
        order.append(u)
        placed |= 1 << u
    return order


def search_pattern(graph: Graph, pattern: Pattern) -> Optional[List[int]]:
    """
    Backtracking induced-subgraph search over bitset rows
    :param graph: host graph
    :param pattern: pattern graph
    :return: host vertex of each pattern vertex, or None if the host is pattern-free
    """
    k = pattern.k
    if k > graph.n:
        return None
    order = placement_order(pattern)
    p_rows = pattern.graph.rows
    degrees = graph.degrees.tolist()
    everything = (1 << graph.n) - 1

    # Degree and co-degree pruning
    allowed = []
    for u in range(k):
        d = pattern.degree(u)
        mask = 0
        for v in range(graph.n):
            if degrees[v] >= d and graph.n - 1 - degrees[v] >= k - 1 - d:
                mask |= 1 << v
        allowed.append(mask)

    image = [-1] * k

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        u = order[depth]
        candidates = allowed[u] & ~used
        for w in order[:depth]:
            host_row = graph.rows[image[w]]
            candidates &= host_row if p_rows[u] >> w & 1 else everything & ~host_row
            if not candidates:
                return False
        for v in bits(candidates):
            image[u] = v
            if extend(depth + 1, used | 1 << v):
                return True
        image[u] = -1
        return False

    return list(image) if extend(0, 0) else None


def find_induced_pattern(graph: GraphLike, pattern: Union[str, Pattern]) -> Optional[Witness]:
    """
    Searches the twin-reduced graph and lifts the hit to original vertices
    :param graph: a graph, or its twin reduction
    :param pattern: a catalog name or a pattern
    :return: a witness, or None if the graph is pattern-free
    """
    pattern = get_pattern(pattern)
    reduced = as_reduced(graph)
    found = search_pattern(reduced.graph, pattern)
    if found is None:
        return None
    vertices = reduced.lift(found)
    return Witness(pattern.name, vertices, [reduced.original.labels[v] for v in vertices])


def is_free(graph: GraphLike, patterns: Iterable[Union[str, Pattern]]) -> FreenessReport:
    reduced = as_reduced(graph)
    report = FreenessReport()
    for pattern in patterns:
        pattern = get_pattern(pattern)
        report.witnesses[pattern.name] = find_induced_pattern(reduced, pattern)
    return report


def is_chain_graph(graph: GraphLike) -> PropertyResult:
    """Chain graph: no induced C3, C5 or 2K2"""
    report = is_free(graph, ['C3', 'C5', '2K2'])
    return PropertyResult(report.free, report.first_witness())


def is_cograph(graph: GraphLike) -> PropertyResult:
    witness = find_induced_pattern(graph, 'P4')
    return PropertyResult(witness is None, witness)


def verify_witness(graph: Graph, pattern: Union[str, Pattern], vertices: Sequence[int]) -> bool:
    """
    :param graph: the original graph
    :param pattern: the pattern the witness claims
    :param vertices: vertices[i] plays pattern vertex i
    :return: True if the adjacency among the vertices matches the pattern exactly
    """
    pattern = get_pattern(pattern)
    if len(vertices) != pattern.k or len(set(vertices)) != pattern.k:
        return False
    p = pattern.graph
    return all(graph.has_edge(vertices[i], vertices[j]) == p.has_edge(i, j)
               for i in range(pattern.k) for j in range(i + 1, pattern.k))


def find_induced_path(graph: Graph, vertices: Sequence[int]) -> bool:
    """True if the sequence is an induced path: consecutive vertices adjacent, all others not"""
    n = len(vertices)
    if len(set(vertices)) != n:
        return False
    return all(graph.has_edge(vertices[i], vertices[j]) == (j == i + 1)
               for i in range(n) for j in range(i + 1, n))

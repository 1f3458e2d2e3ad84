import logging
from dataclasses import dataclass
from typing import Dict, List

from .graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_TWIN_CAP = 5


@dataclass
class TwinReducedGraph:
    """
    A graph cut down to at most cap members of each twin class.

    graph: induced on the retained vertices, in ascending original id; pattern searches run here
    quotient: induced on the first member of each class; holes and chordality run here
    classes: full member lists (original ids), ordered by their smallest member
    retained: the first min(size, cap) members of each class
    kept: original id of every vertex of graph
    """
    original: Graph
    graph: Graph
    quotient: Graph
    classes: List[List[int]]
    retained: List[List[int]]
    kept: List[int]
    cap: int

    @property
    def sizes(self) -> List[int]:
        return [len(c) for c in self.classes]

    def lift(self, vertices: List[int]) -> List[int]:
        """Original ids of vertices of the reduced graph"""
        return [self.kept[v] for v in vertices]

    def lift_quotient(self, vertices: List[int]) -> List[int]:
        """Original ids of vertices of the quotient"""
        return [self.classes[v][0] for v in vertices]


def twin_reduce(graph: Graph, cap: int = DEFAULT_TWIN_CAP) -> TwinReducedGraph:
    """
    Groups vertices with equal closed neighbourhoods; isolated vertices form a single class of their
    own. Keeping cap members per class preserves every induced subgraph on at most cap vertices.
    :param graph: simple graph
    :param cap: members retained per class, at least 1
    :return: the reduction
    """
    if cap < 1:
        raise ValueError(f'Twin cap must be at least 1, got {cap}')
    groups: Dict[int, List[int]] = {}
    for v, row in enumerate(graph.rows):
        key = row | (1 << v) if row else 0
        groups.setdefault(key, []).append(v)
    # Vertices are visited in ascending order, so classes come out ordered by their smallest member.
    classes = list(groups.values())
    retained = [members[:cap] for members in classes]
    kept = sorted(v for members in retained for v in members)

    reduced = TwinReducedGraph(
        original=graph,
        graph=graph.induced(kept),
        quotient=graph.induced([members[0] for members in classes]),
        classes=classes,
        retained=retained,
        kept=kept,
        cap=cap,
    )
    logger.info('Twin reduction: %d vertices -> %d classes, %d retained', graph.n, len(classes), len(kept))
    return reduced

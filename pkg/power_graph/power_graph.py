import logging
import time
from dataclasses import dataclass
from typing import List

from sympy import factorint

from group import Group, element_order_profile
from .graph import Graph

logger = logging.getLogger(__name__)


def build_power_graph(group: Group, proper: bool = False) -> Graph:
    """
    Builds P(G): u ~ v iff one of them is a power of the other. Each element contributes its
    cyclic closure once, so the work is the sum of the element orders.
    :param group: the group; vertex ids are element indices
    :param proper: drop the identity (vertex 0) and shift the remaining ids down by one
    :return: the power graph, labelled with element renderings
    """
    start = time.perf_counter()
    n = group.order
    rows = [0] * n
    for g in range(n):
        bit = 1 << g
        closure = 0
        for x in group.powers(g):
            closure |= 1 << x
            rows[x] |= bit
        rows[g] |= closure
    rows = [row & ~(1 << v) for v, row in enumerate(rows)]
    labels = group.labels

    if proper:
        rows = [row >> 1 for row in rows[1:]]
        labels = labels[1:]

    graph = Graph(len(rows), rows, labels)
    logger.info('%s of %s: %d vertices, %d edges in %d ms', 'P*' if proper else 'P', group.label, graph.n,
                graph.edge_count, (time.perf_counter() - start) * 1000)
    return graph


@dataclass
class PrimeGraph:
    primes: List[int]
    graph: Graph

    @property
    def is_null(self) -> bool:
        return self.graph.edge_count == 0


def build_prime_graph(group: Group) -> PrimeGraph:
    """
    :param group: the group
    :return: the graph on the primes dividing |G|, with p ~ q iff G has an element of order divisible by pq
    """
    primes = sorted(factorint(group.order))
    orders = list(element_order_profile(group))
    edges = [(i, j) for i, p in enumerate(primes) for j, q in enumerate(primes)
             if i < j and any(o % (p * q) == 0 for o in orders)]
    return PrimeGraph(primes, Graph.from_edges(len(primes), edges, [str(p) for p in primes]))

import json
import os
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

EXPORT_FORMATS = ('dot', 'json')


class ExportError(ValueError):
    pass


def popcount(x: int) -> int:
    return bin(x).count('1')


def bits(x: int) -> List[int]:
    """Positions of the set bits of x, ascending"""
    result = []
    while x:
        low = x & -x
        result.append(low.bit_length() - 1)
        x ^= low
    return result


class Graph:

    def __init__(self, n: int, rows: Sequence[int], labels: Optional[Sequence[str]] = None):
        """
        Undirected simple graph over vertices 0..n-1 with one adjacency bitset per vertex
        :param n: vertex count
        :param rows: rows[u] has bit v set iff u ~ v
        :param labels: rendering of each vertex, defaults to the vertex ids
        """
        assert len(rows) == n, f'Expected {n} adjacency rows, got {len(rows)}'
        self.n = n
        self.rows = list(rows)
        self.labels = list(labels) if labels is not None else [str(v) for v in range(n)]
        assert len(self.labels) == n, 'Every vertex needs a label'

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None):
        rows = [0] * n
        for u, v in edges:
            assert u != v, f'Loop at {u}'
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def __repr__(self):
        return f'Graph(n={self.n}, edges={self.edge_count})'

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    @property
    def degrees(self) -> np.ndarray:
        return np.array([popcount(row) for row in self.rows], dtype=np.int64)

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, sorted lexicographically"""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_simple(self) -> bool:
        return all(not self.has_edge(u, u) for u in range(self.n)) and \
            all(self.has_edge(v, u) for u, v in self.edges())

    def complement(self) -> 'Graph':
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~row & ~(1 << u) for u, row in enumerate(self.rows)], self.labels)

    def induced(self, vertices: Sequence[int]) -> 'Graph':
        """
        :param vertices: vertices of this graph, in the order they become 0..k-1
        :return: the induced subgraph, relabelled
        """
        position = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.rows[v]):
                i = position.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(vertices), rows, [self.labels[v] for v in vertices])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from((v, {'label': label}) for v, label in enumerate(self.labels))
        g.add_edges_from(self.edges())
        return g


def _quote(label: str) -> str:
    return '"' + label.replace('\\', '\\\\').replace('"', '\\"') + '"'


def export_graph(graph: Graph, fmt: str) -> bytes:
    """
    Serializes a graph; edges are always sorted lexicographically
    :param graph: graph to export
    :param fmt: 'dot' (undirected, quoted labels) or 'json' ({n, edges, labels})
    :return: the encoded document
    """
    if fmt == 'json':
        document = {'n': graph.n, 'edges': [list(e) for e in graph.edges()], 'labels': graph.labels}
        return json.dumps(document, separators=(',', ':')).encode('utf-8')
    if fmt == 'dot':
        lines = ['graph G {']
        lines += [f'  {v} [label={_quote(label)}];' for v, label in enumerate(graph.labels)]
        lines += [f'  {u} -- {v};' for u, v in graph.edges()]
        lines.append('}')
        return ('\n'.join(lines) + '\n').encode('utf-8')
    raise ExportError(f'Unknown export format {fmt!r}; expected one of {", ".join(EXPORT_FORMATS)}')


def write_graph(graph: Graph, fmt: str, path: str):
    data = export_graph(graph, fmt)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'wb') as f:
        f.write(data)

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Tuple, Union

from power_graph import Graph

MAX_PATTERN_SIZE = 5


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    name: str
    k: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        assert 1 <= self.k <= MAX_PATTERN_SIZE, f'{self.name}: patterns have 1..{MAX_PATTERN_SIZE} vertices'
        assert all(0 <= u < v < self.k for u, v in self.edges), f'{self.name}: edges must be sorted pairs'

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.k, self.edges)

    def degree(self, u: int) -> int:
        return sum(u in e for e in self.edges)

    def complement(self) -> 'Pattern':
        present = set(self.edges)
        edges = tuple(e for e in combinations(range(self.k), 2) if e not in present)
        return Pattern(COMPLEMENT_NAMES.get(self.name, f'co-{self.name}'), self.k, edges)


def _pattern(name: str, k: int, edges: str) -> Pattern:
    return Pattern(name, k, tuple(sorted((int(e[0]), int(e[1])) for e in edges.split())))


def _complement_of(name: str, base: Pattern) -> Pattern:
    present = set(base.edges)
    return Pattern(name, base.k, tuple(e for e in combinations(range(base.k), 2) if e not in present))


_P5 = _pattern('P5', 5, '01 12 23 34')
_P2UP3 = _pattern('P2uP3', 5, '01 23 34')

CATALOG: Dict[str, Pattern] = {p.name: p for p in [
    _pattern('P4', 4, '01 12 23'),
    _P5,
    _complement_of('P5bar', _P5),
    _pattern('C3', 3, '01 12 02'),
    _pattern('C4', 4, '01 12 23 03'),
    _pattern('C5', 5, '01 12 23 34 04'),
    _pattern('2K2', 4, '01 23'),
    _pattern('diamond', 4, '01 02 03 12 13'),
    _pattern('co-diamond', 4, '23'),
    _P2UP3,
    _complement_of('P2uP3bar', _P2UP3),
]}

COMPLEMENT_NAMES = {
    'P4': 'P4', 'P5': 'P5bar', 'P5bar': 'P5', 'C4': '2K2', '2K2': 'C4', 'C5': 'C5', 'C3': '3K1',
    'diamond': 'co-diamond', 'co-diamond': 'diamond', 'P2uP3': 'P2uP3bar', 'P2uP3bar': 'P2uP3',
}


def get_pattern(name: Union[str, Pattern]) -> Pattern:
    if isinstance(name, Pattern):
        return name
    try:
        return CATALOG[name]
    except KeyError:
        raise PatternError(f'Unknown pattern {name!r}; known: {", ".join(CATALOG)}') from None


def parse_patterns(names: Union[str, Iterable[str]]) -> List[Pattern]:
    """
    :param names: comma-separated names or an iterable of names
    :return: catalog patterns, in the given order
    """
    if isinstance(names, str):
        names = [n for n in names.replace(' ', '').split(',') if n]
    return [get_pattern(n) for n in names]

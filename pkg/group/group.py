import logging
import os
import time
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import multiplicity

from .rule import CompositionRule, Payload

logger = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 10080
LARGE_GROUP_CAP = 30000
DENSE_TABLE_LIMIT = 2048
CAP_ENV = 'PG_GROUP_CAP'

ElementOrderProfile = Dict[int, int]


class GroupError(ValueError):
    pass


class CapExceededError(GroupError):

    def __init__(self, label: str, cap: int, reached: int):
        super().__init__(f'{label} exceeds the group-order cap {cap} (reached {reached} elements)')
        self.label = label
        self.cap = cap
        self.reached = reached


class GroupSpecError(GroupError):

    def __init__(self, message: str, text: Optional[str] = None, position: Optional[int] = None):
        where = f' at position {position}' if position is not None else ''
        source = f' in {text!r}' if text is not None else ''
        super().__init__(f'{message}{where}{source}')
        self.text = text
        self.position = position


def group_cap(allow_large: bool = False) -> int:
    """
    The group-order cap: the default, overridden by PG_GROUP_CAP, raised by allow_large
    :param allow_large: raise the cap to LARGE_GROUP_CAP unless the environment sets it higher
    :return: the maximal number of elements a group may have
    """
    cap = DEFAULT_GROUP_CAP
    raw = os.environ.get(CAP_ENV)
    if raw is not None and raw.strip():
        try:
            cap = int(raw)
        except ValueError:
            raise GroupError(f'{CAP_ENV} must be a positive integer, got {raw!r}') from None
        if cap < 1:
            raise GroupError(f'{CAP_ENV} must be a positive integer, got {raw!r}')
    if allow_large:
        cap = max(cap, LARGE_GROUP_CAP)
    return cap


class Group:

    def __init__(self, label: str, rule: CompositionRule, elements: Sequence[Payload]):
        """
        An enumerated finite group; element 0 is the identity
        :param label: canonical spec string of the group
        :param rule: composition rule the payloads follow
        :param elements: canonical payloads, the identity first
        """
        assert elements and elements[0] == rule.identity(), 'Element 0 must be the identity'
        self.label = label
        self.rule = rule
        self._elements = list(elements)
        self._index = {payload: i for i, payload in enumerate(self._elements)}
        assert len(self._index) == len(self._elements), f'Duplicate elements in {label}'
        self.order = len(self._elements)

        # Filled lazily, entry by entry
        self._table = np.full((self.order, self.order), -1, dtype=np.int32) \
            if self.order <= DENSE_TABLE_LIMIT else None
        self._powers: List[Optional[Tuple[int, ...]]] = [None] * self.order
        self._orders: Optional[np.ndarray] = None
        self._labels: Optional[List[str]] = None

    def __len__(self):
        return self.order

    def __repr__(self):
        return f'Group({self.label}, order={self.order})'

    def _check(self, i: int):
        if not 0 <= i < self.order:
            raise GroupError(f'{i} is not an element index of {self.label}')

    def element(self, i: int) -> Payload:
        self._check(i)
        return self._elements[i]

    def index_of(self, payload: Payload) -> int:
        key = self.rule.canonical(payload)
        try:
            return self._index[key]
        except KeyError:
            raise GroupError(f'{key!r} is not an element of {self.label}') from None

    def render(self, i: int) -> str:
        return self.labels[i]

    @property
    def labels(self) -> List[str]:
        if self._labels is None:
            self._labels = [self.rule.render(x) for x in self._elements]
        return self._labels

    def parse_element(self, text: str) -> int:
        """
        Finds an element from its textual form: cycle notation for permutations, the rendered
        label otherwise
        :param text: element text
        :return: element index
        """
        payload = self.rule.parse(text)
        if payload is not None and self.rule.check(payload):
            return self.index_of(payload)
        stripped = text.strip()
        for i, label in enumerate(self.labels):
            if label == stripped:
                return i
        raise GroupError(f'Cannot read {text!r} as an element of {self.label}')

    def compose(self, a: int, b: int) -> int:
        if self._table is not None:
            c = self._table[a, b]
            if c >= 0:
                return int(c)
        try:
            c = self._index[self.rule.compose(self._elements[a], self._elements[b])]
        except KeyError:
            raise GroupError(f'{self.label} is not closed under composition') from None
        if self._table is not None:
            self._table[a, b] = c
        return c

    def powers(self, i: int) -> Tuple[int, ...]:
        """
        :param i: element index
        :return: indices of g^0, g^1, ..., g^(o(g)-1)
        """
        self._check(i)
        cached = self._powers[i]
        if cached is None:
            sequence = [0]
            x = i
            while x != 0:
                sequence.append(x)
                x = self.compose(x, i)
            cached = self._powers[i] = tuple(sequence)
        return cached

    def power(self, i: int, k: int) -> int:
        cycle = self.powers(i)
        return cycle[k % len(cycle)]

    def inverse(self, i: int) -> int:
        return self.power(i, -1)

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = np.array([len(self.powers(i)) for i in range(self.order)], dtype=np.int64)
        return self._orders


def close_generators(
        gens: Sequence[Payload],
        rule: CompositionRule,
        label: str = '',
        cap: Optional[int] = None
) -> Group:
    """
    Enumerates the group generated by gens by breadth-first closure; the queue is seeded with the
    generators in the given order and every dequeued element is right-multiplied by each generator
    :param gens: generator payloads
    :param rule: composition rule shared by the generators
    :param label: name of the resulting group
    :param cap: maximal order, group_cap() if not given
    :return: the group
    """
    if not gens:
        raise GroupError(f'No generators given for {label or "a group"}')
    if cap is None:
        cap = group_cap()
    gens = [rule.canonical(g) for g in gens]
    for g in gens:
        if not rule.check(g):
            raise GroupError(f'Generator {g!r} does not match the payload shape of {label or "the rule"}')

    start = time.perf_counter()
    identity = rule.identity()
    elements = [identity]
    index = {identity: 0}
    queue = deque()
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            queue.append(g)
    if len(elements) > cap:
        raise CapExceededError(label, cap, len(elements))

    while queue:
        x = queue.popleft()
        for g in gens:
            y = rule.compose(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
                if len(elements) > cap:
                    raise CapExceededError(label, cap, len(elements))
                if len(elements) % 1000 == 0:
                    logger.debug('%s: %d elements so far', label, len(elements))

    logger.info('Built %s: order %d in %d ms', label, len(elements), (time.perf_counter() - start) * 1000)
    return Group(label, rule, elements)


def element_order(group: Group, g: int) -> int:
    return len(group.powers(g))


def cyclic_closure(group: Group, g: int) -> FrozenSet[int]:
    return frozenset(group.powers(g))


def exponent(group: Group) -> int:
    return int(np.lcm.reduce(group.orders))


def element_order_profile(group: Group) -> ElementOrderProfile:
    values, counts = np.unique(group.orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def is_closed_subset(group: Group, subset: Iterable[int]) -> bool:
    """
    :param group: the group
    :param subset: element indices
    :return: True if the subset contains the identity and is closed under composition and inverse
    """
    members = set(subset)
    if 0 not in members:
        return False
    if any(group.inverse(a) not in members for a in members):
        return False
    return all(group.compose(a, b) in members for a in members for b in members)


def p_part(n: int, p: int) -> int:
    """The largest power of p dividing n"""
    return p ** int(multiplicity(p, n))


def p_element_set(group: Group, p: int) -> FrozenSet[int]:
    # Element orders divide |G|, so o(g) is a power of p iff it divides the p-part of |G|.
    part = p_part(group.order, p)
    return frozenset(np.flatnonzero(part % group.orders == 0).tolist())


def sylow_order(group: Group, p: int) -> int:
    return p_part(group.order, p)


def has_normal_sylow(group: Group, p: int) -> bool:
    """
    The p-elements form a union of Sylow p-subgroups, so they number exactly |P| iff the Sylow
    p-subgroup is unique
    """
    return len(p_element_set(group, p)) == sylow_order(group, p)


def generate_subgroup(group: Group, indices: Iterable[int]) -> List[int]:
    """
    :param group: the group
    :param indices: generating element indices
    :return: sorted element indices of the generated subgroup
    """
    gens = list(dict.fromkeys(indices))
    members = {0}
    queue = deque()
    for g in gens:
        group._check(g)
        if g not in members:
            members.add(g)
            queue.append(g)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = group.compose(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
    return sorted(members)


def random_triples(group: Group, count: int = 1000, seed: int = 0) -> bool:
    """
    Spot-checks associativity on random triples
    :param group: the group
    :param count: number of triples
    :param seed: generator seed
    :return: True if (ab)c = a(bc) on every sampled triple
    """
    rng = np.random.default_rng(seed)
    for a, b, c in rng.integers(0, group.order, size=(count, 3)).tolist():
        if group.compose(group.compose(a, b), c) != group.compose(a, group.compose(b, c)):
            return False
    return True

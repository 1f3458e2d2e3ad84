import json
import re
from abc import abstractmethod
from typing import Hashable, List, Optional, Tuple

from finite_field import IndexedField

Payload = Hashable

_CYCLE = re.compile(r'\(([^()]*)\)')
_TUPLE = re.compile(r'^\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)$')


class CompositionRule:
    """
    Multiplication of canonical element payloads. Payloads are hashable tuples and
    every payload handed out by a rule is already in canonical form.
    """

    def __init__(self):
        pass

    @abstractmethod
    def identity(self) -> Payload:
        return NotImplemented

    @abstractmethod
    def compose(self, a: Payload, b: Payload) -> Payload:
        return NotImplemented

    def canonical(self, payload: Payload) -> Payload:
        return payload

    def check(self, payload: Payload) -> bool:
        return True

    def render(self, payload: Payload) -> str:
        return '(' + ','.join(str(x) for x in payload) + ')'

    def parse(self, text: str) -> Optional[Payload]:
        match = _TUPLE.match(text.strip())
        if match is None:
            return None
        return tuple(int(x) for x in match.group(1).split(','))


class PermutationRule(CompositionRule):

    def __init__(self, degree: int):
        """
        Permutations of 0..degree-1 as image tuples, composed left to right
        :param degree: number of points
        """
        super().__init__()
        self.degree = degree

    def identity(self) -> Payload:
        return tuple(range(self.degree))

    def compose(self, a, b):
        return tuple(b[x] for x in a)

    def check(self, payload) -> bool:
        return len(payload) == self.degree and sorted(payload) == list(range(self.degree))

    def cycles(self, payload) -> List[Tuple[int, ...]]:
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start] or payload[start] == start:
                continue
            cycle, x = [], start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = payload[x]
            result.append(tuple(cycle))
        return result

    def render(self, payload) -> str:
        cycles = self.cycles(payload)
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(x + 1) for x in cycle) + ')' for cycle in cycles)

    def parse(self, text: str) -> Optional[Payload]:
        text = text.strip()
        if _CYCLE.sub('', text).strip():
            return None
        result = self.identity()
        for body in _CYCLE.findall(text):
            points = [int(x) - 1 for x in body.replace(',', ' ').split()]
            if any(not 0 <= x < self.degree for x in points) or len(set(points)) != len(points):
                return None
            image = list(range(self.degree))
            for x, y in zip(points, points[1:] + points[:1]):
                image[x] = y
            result = self.compose(result, tuple(image))
        return result


class MatrixRule(CompositionRule):

    def __init__(self, field: IndexedField, projective: bool = False):
        """
        2x2 matrices over a finite field, entries stored as field indices in row-major order
        :param field: table-backed field
        :param projective: identify M with -M, keeping the representative whose first nonzero
        entry has the smaller index
        """
        super().__init__()
        self.field = field
        self.projective = projective

    def identity(self) -> Payload:
        return 1, 0, 0, 1

    def compose(self, a, b):
        f = self.field
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        c = (f.add(f.mul(a0, b0), f.mul(a1, b2)),
             f.add(f.mul(a0, b1), f.mul(a1, b3)),
             f.add(f.mul(a2, b0), f.mul(a3, b2)),
             f.add(f.mul(a2, b1), f.mul(a3, b3)))
        return self.canonical(c) if self.projective else c

    def canonical(self, payload):
        if not self.projective:
            return tuple(payload)
        negated = tuple(self.field.neg(x) for x in payload)
        for x, y in zip(payload, negated):
            if x:
                return tuple(payload) if x <= y else negated
        return tuple(payload)

    def determinant(self, payload) -> int:
        f = self.field
        a, b, c, d = payload
        return f.sub(f.mul(a, d), f.mul(b, c))

    def check(self, payload) -> bool:
        return (len(payload) == 4 and all(0 <= x < self.field.q for x in payload)
                and self.determinant(payload) != 0)

    def render(self, payload) -> str:
        a, b, c, d = payload
        return f'[[{a},{b}],[{c},{d}]]'

    def parse(self, text: str) -> Optional[Payload]:
        try:
            rows = json.loads(text)
        except ValueError:
            return None
        if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
            return None
        payload = tuple(int(x) for row in rows for x in row)
        return self.canonical(payload) if self.check(payload) else None


class SemidirectRule(CompositionRule):

    def __init__(self, n: int, m: int, k: int):
        """
        C_n x| C_m with the generator of C_m acting as i -> k*i
        :param n: order of the normal cyclic factor
        :param m: order of the acting cyclic factor
        :param k: multiplier with k^m = 1 (mod n)
        """
        super().__init__()
        self.n, self.m, self.k = n, m, k
        self._twist = [pow(k, j, n) for j in range(m)]

    def identity(self) -> Payload:
        return 0, 0

    def compose(self, a, b):
        return (a[0] + self._twist[a[1]] * b[0]) % self.n, (a[1] + b[1]) % self.m

    def check(self, payload) -> bool:
        return len(payload) == 2 and 0 <= payload[0] < self.n and 0 <= payload[1] < self.m


class QuaternionRule(CompositionRule):

    def __init__(self, order: int):
        """
        Generalized quaternion group as pairs (i, j) standing for x^i y^j, with x of order order/2,
        y^2 = x^(order/4) and y x y^-1 = x^-1
        :param order: a power of two, at least 8
        """
        super().__init__()
        self.n = order // 2

    def identity(self) -> Payload:
        return 0, 0

    def compose(self, a, b):
        i1, j1 = a
        i2, j2 = b
        i = i1 + (-i2 if j1 else i2) + j1 * j2 * (self.n // 2)
        return i % self.n, j1 ^ j2

    def check(self, payload) -> bool:
        return len(payload) == 2 and 0 <= payload[0] < self.n and payload[1] in (0, 1)


class VectorRule(CompositionRule):

    def __init__(self, p: int, k: int):
        super().__init__()
        self.p, self.k = p, k

    def identity(self) -> Payload:
        return (0,) * self.k

    def compose(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def check(self, payload) -> bool:
        return len(payload) == self.k and all(0 <= x < self.p for x in payload)


class ProductRule(CompositionRule):

    def __init__(self, left, right):
        """
        Direct product of two built groups; payloads are pairs of component indices
        :param left: first factor (a Group)
        :param right: second factor (a Group)
        """
        super().__init__()
        self.left, self.right = left, right

    def identity(self) -> Payload:
        return 0, 0

    def compose(self, a, b):
        return self.left.compose(a[0], b[0]), self.right.compose(a[1], b[1])

    def check(self, payload) -> bool:
        return len(payload) == 2 and 0 <= payload[0] < self.left.order and 0 <= payload[1] < self.right.order

    def render(self, payload) -> str:
        return f'({self.left.render(payload[0])},{self.right.render(payload[1])})'

    def parse(self, text: str) -> Optional[Payload]:
        return None

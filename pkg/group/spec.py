from dataclasses import dataclass
from math import factorial, gcd
from typing import Optional, Tuple

from sympy import factorint, isprime

from .group import GroupSpecError

MAX_PERMUTATION_DEGREE = 7

# Longer prefixes first so that "SD(" and "SL(2," are not read as "S".
_PREFIXES = (
    ('PSL(2,', 'PSL2'),
    ('SL(2,', 'SL2'),
    ('SD(', 'SD'),
    ('Sz(', 'Sz'),
    ('C', 'C'),
    ('D', 'D'),
    ('S', 'S'),
    ('A', 'A'),
    ('Q', 'Q'),
    ('E', 'E'),
)


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: Tuple[int, ...] = ()
    factors: Tuple['GroupSpec', ...] = ()

    @property
    def label(self) -> str:
        f, p = self.family, self.params
        if f == 'x':
            return 'x'.join(factor.label for factor in self.factors)
        if f == 'E':
            return f'E{p[0]}^{p[1]}'
        if f == 'SD':
            return f'SD({p[0]},{p[1]},{p[2]})'
        if f == 'PSL2':
            return f'PSL(2,{p[0]})'
        if f == 'SL2':
            return f'SL(2,{p[0]})'
        if f == 'Sz':
            return f'Sz({p[0]})'
        return f'{f}{p[0]}'

    @property
    def rhs_only(self) -> bool:
        return self.family == 'Sz' or any(factor.rhs_only for factor in self.factors)

    def __str__(self):
        return self.label


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    if n < 2:
        return None
    factors = factorint(n)
    if len(factors) != 1:
        return None
    (p, a), = factors.items()
    return p, a


def expected_order(spec: GroupSpec) -> int:
    """Closed-form order of the group a spec describes"""
    f, p = spec.family, spec.params
    if f == 'x':
        order = 1
        for factor in spec.factors:
            order *= expected_order(factor)
        return order
    if f == 'C' or f == 'Q':
        return p[0]
    if f == 'D':
        return 2 * p[0]
    if f == 'S':
        return factorial(p[0])
    if f == 'A':
        return max(1, factorial(p[0]) // 2)
    if f == 'E':
        return p[0] ** p[1]
    if f == 'SD':
        return p[0] * p[1]
    q = p[0]
    if f == 'SL2':
        return q * (q * q - 1)
    if f == 'PSL2':
        return q * (q * q - 1) // gcd(2, q - 1)
    if f == 'Sz':
        return q * q * (q * q + 1) * (q - 1)
    raise GroupSpecError(f'Unknown family {f}')


class _Parser:

    def __init__(self, source: str):
        # Whitespace is dropped up front; offsets map back to columns of the source.
        self.source = source
        self.offsets = [i for i, c in enumerate(source) if not c.isspace()]
        self.text = ''.join(source[i] for i in self.offsets)
        self.pos = 0

    def column(self, pos: int) -> int:
        return self.offsets[pos] if pos < len(self.offsets) else len(self.source)

    def error(self, message: str, position: Optional[int] = None):
        return GroupSpecError(message, self.source, self.column(self.pos if position is None else position))

    def at(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def expect(self, token: str):
        if not self.at(token):
            raise self.error(f'Expected {token!r}')
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error('Expected an integer')
        return int(self.text[start:self.pos])

    def spec(self) -> GroupSpec:
        atom = self.atom()
        if self.at('x'):
            self.pos += 1
            rest = self.spec()
            factors = (atom,) + (rest.factors if rest.family == 'x' else (rest,))
            return GroupSpec('x', factors=factors)
        return atom

    def atom(self) -> GroupSpec:
        start = self.pos
        for prefix, family in _PREFIXES:
            if self.text.startswith(prefix, self.pos):
                self.pos += len(prefix)
                break
        else:
            raise self.error('Unknown group family')

        if family in ('C', 'D', 'S', 'A', 'Q'):
            params = (self.integer(),)
        elif family == 'E':
            p = self.integer()
            self.expect('^')
            params = (p, self.integer())
        elif family == 'SD':
            n = self.integer()
            self.expect(',')
            m = self.integer()
            self.expect(',')
            params = (n, m, self.integer())
            self.expect(')')
        else:
            params = (self.integer(),)
            self.expect(')')
        spec = GroupSpec(family, params)
        _validate(spec, self.source, self.column(start))
        return spec


def _validate(spec: GroupSpec, text: str, position: int):
    f, p = spec.family, spec.params

    def fail(message):
        raise GroupSpecError(f'{spec.label}: {message}', text, position)

    if f == 'C' and p[0] < 1:
        fail('cyclic order must be at least 1')
    elif f == 'D' and p[0] < 3:
        fail('dihedral parameter must be at least 3 (D_n has order 2n)')
    elif f in ('S', 'A') and not 1 <= p[0] <= MAX_PERMUTATION_DEGREE:
        fail(f'degree must lie in 1..{MAX_PERMUTATION_DEGREE}')
    elif f == 'Q' and (p[0] < 8 or p[0] & (p[0] - 1)):
        fail('generalized quaternion order must be a power of 2, at least 8')
    elif f == 'E' and (not isprime(p[0]) or p[1] < 1):
        fail('elementary abelian needs a prime and an exponent of at least 1')
    elif f == 'SD':
        n, m, k = p
        if n < 1 or m < 1:
            fail('cyclic factors must have order at least 1')
        if gcd(k, n) != 1:
            fail(f'gcd({k},{n}) must be 1')
        if pow(k, m, n) != 1 % n:
            fail(f'{k}^{m} is not 1 mod {n}')
    elif f in ('PSL2', 'SL2') and prime_power(p[0]) is None:
        fail(f'{p[0]} is not a prime power')
    elif f == 'Sz':
        q = p[0]
        pp = prime_power(q)
        if pp is None or pp[0] != 2 or pp[1] < 3 or pp[1] % 2 == 0:
            fail('Suzuki parameter must be an odd power of 2, at least 8')


def parse_group_spec(text: str) -> GroupSpec:
    """
    Parses the group grammar:
        spec := atom ( "x" spec )?
        atom := "C"int | "D"int | "S"int | "A"int | "Q"int | "E"int"^"int
              | "SD(" int "," int "," int ")" | "PSL(2," int ")" | "SL(2," int ")" | "Sz(" int ")"
    :param text: spec text; whitespace is ignored
    :return: the parse tree, products flattened right-associatively
    """
    parser = _Parser(text)
    spec = parser.spec()
    if parser.pos != len(parser.text):
        raise parser.error('Unexpected trailing input')
    return spec

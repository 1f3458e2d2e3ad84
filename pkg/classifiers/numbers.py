from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Optional, Tuple

from sympy import factorint


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: Tuple[Tuple[int, int], ...] = ()

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def multiplicity(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def part(self, p: int) -> int:
        return p ** self.multiplicity(p)

    def __str__(self):
        if not self.factors:
            return '1'
        return ' * '.join(str(p) if a == 1 else f'{p}^{a}' for p, a in self.factors)

    def to_list(self) -> List[List[int]]:
        return [[p, a] for p, a in self.factors]


def factorize(n: int) -> Factorization:
    """
    :param n: a positive integer
    :return: its prime factorization, primes ascending
    """
    if n < 1:
        raise ValueError(f'Only positive integers factorize, got {n}')
    return Factorization(n, tuple(sorted(factorint(n).items())))


def is_prime_power(n: int) -> Optional[Tuple[int, int]]:
    """
    :param n: an integer, at least 2
    :return: (p, a) with n = p^a, or None if n has two or more prime divisors
    """
    if n < 2:
        raise ValueError(f'Prime powers start at 2, got {n}')
    factors = factorize(n).factors
    return factors[0] if len(factors) == 1 else None


def is_admissible_cyclic_order(n: int) -> bool:
    """True iff n is 1, a prime power, or p^a * q for distinct primes p and q"""
    factors = factorize(n).factors
    if len(factors) <= 1:
        return True
    return len(factors) == 2 and min(a for _, a in factors) == 1


@dataclass
class SideCondition:
    """Number-theoretic condition on the parameter q of a family of simple groups"""
    family: str
    q: int
    numbers: List[int] = field(default_factory=list)

    @property
    def admissible(self) -> List[bool]:
        return [is_admissible_cyclic_order(m) for m in self.numbers]

    @property
    def holds(self) -> bool:
        return all(self.admissible)

    def to_dict(self) -> Dict:
        return {
            'family': self.family,
            'q': self.q,
            'numbers': [{'n': m, 'factors': str(factorize(m)), 'admissible': ok}
                        for m, ok in zip(self.numbers, self.admissible)],
            'holds': self.holds,
        }


def psl2_condition(q: int) -> SideCondition:
    """
    (q - 1)/2 and (q + 1)/2 for odd q, q - 1 and q + 1 for even q
    """
    if q < 2 or is_prime_power(q) is None:
        raise ValueError(f'PSL(2,q) needs a prime power q, got {q}')
    if q % 2:
        return SideCondition('PSL2', q, [(q - 1) // 2, (q + 1) // 2])
    return SideCondition('PSL2', q, [q - 1, q + 1])


def sz_condition(q: int) -> SideCondition:
    """
    q - 1 and q -+ r + 1 with r = sqrt(2q), for q an odd power of 2 with q >= 8
    """
    power = is_prime_power(q) if q >= 2 else None
    if power is None or power[0] != 2 or power[1] % 2 == 0 or q < 8:
        raise ValueError(f'Sz(q) needs q = 2^(2e+1) >= 8, got {q}')
    r = isqrt(2 * q)
    return SideCondition('Sz', q, [q - 1, q - r + 1, q + r + 1])

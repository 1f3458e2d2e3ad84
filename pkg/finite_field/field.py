import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint, isprime

logger = logging.getLogger(__name__)

MAX_FIELD_ORDER = 2 ** 16
MAX_TABLE_ORDER = 1024

# Fixed moduli, little-endian coefficients of monic irreducible polynomials.
MODULUS_TABLE: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
}


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.k

    def __str__(self):
        return f'GF({self.p})' if self.k == 1 else f'GF({self.p}^{self.k})'


@dataclass(frozen=True)
class FieldElement:
    coeffs: Tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _strip(poly: List[int]) -> List[int]:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """
    Remainder of a modulo the monic polynomial b over GF(p)
    :param a: dividend, little-endian
    :param b: monic divisor, little-endian
    :param p: characteristic
    :return: remainder, little-endian, stripped of leading zeros
    """
    rem = [c % p for c in a]
    deg_b = len(b) - 1
    for d in range(len(rem) - 1, deg_b - 1, -1):
        c = rem[d]
        if c:
            for i, bc in enumerate(b):
                rem[d - deg_b + i] = (rem[d - deg_b + i] - c * bc) % p
    return _strip(rem[:deg_b] if deg_b > 0 else [0])


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """
    Trial division by every monic polynomial of degree at most half the degree of poly
    :param p: prime characteristic
    :param poly: monic polynomial, little-endian coefficients
    :return: True if poly has no proper factor over GF(p)
    """
    degree = len(poly) - 1
    if degree < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, degree // 2 + 1):
        for lower in product(range(p), repeat=d):
            divisor = lower + (1,)
            if _poly_rem(poly, divisor, p) == [0]:
                return False
    return True


def _search_modulus(p: int, k: int) -> Optional[Tuple[int, ...]]:
    # Lower coefficients run through the same base-p little-endian order as field elements.
    for index in range(p ** k):
        lower = tuple((index // p ** i) % p for i in range(k))
        candidate = lower + (1,)
        if is_irreducible(p, candidate):
            return candidate
    return None


@lru_cache(maxsize=None)
def construct_field(p: int, k: int = 1) -> FieldSpec:
    """
    Builds GF(p^k) with the modulus from the fixed table, or the smallest irreducible one
    :param p: prime characteristic
    :param k: extension degree
    :return: the field specification
    """
    if not isprime(p):
        raise FieldError(f'Characteristic {p} is not prime')
    if k < 1:
        raise FieldError(f'Extension degree must be at least 1, got {k}')
    if p ** k > MAX_FIELD_ORDER:
        raise FieldError(f'GF({p}^{k}) exceeds the field-order cap {MAX_FIELD_ORDER}')
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    modulus = MODULUS_TABLE.get((p, k)) or _search_modulus(p, k)
    if modulus is None:
        raise FieldError(f'No irreducible polynomial of degree {k} found over GF({p})')
    logger.debug('GF(%d^%d) uses modulus %s', p, k, modulus)
    return FieldSpec(p, k, modulus)


def _check(spec: FieldSpec, *elements: FieldElement):
    for a in elements:
        if len(a.coeffs) != spec.k or any(not 0 <= c < spec.p for c in a.coeffs):
            raise FieldError(f'{a} is not an element of {spec}')


def element_from_index(spec: FieldSpec, index: int) -> FieldElement:
    if not 0 <= index < spec.order:
        raise FieldError(f'Index {index} is outside {spec}')
    return FieldElement(tuple((index // spec.p ** i) % spec.p for i in range(spec.k)))


def element_index(spec: FieldSpec, a: FieldElement) -> int:
    _check(spec, a)
    return sum(c * spec.p ** i for i, c in enumerate(a.coeffs))


def field_elements(spec: FieldSpec) -> List[FieldElement]:
    """All elements in the canonical base-p little-endian enumeration order"""
    return [element_from_index(spec, i) for i in range(spec.order)]


def zero(spec: FieldSpec) -> FieldElement:
    return FieldElement((0,) * spec.k)


def one(spec: FieldSpec) -> FieldElement:
    return FieldElement((1,) + (0,) * (spec.k - 1))


def ff_add(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(spec, a, b)
    return FieldElement(tuple((x + y) % spec.p for x, y in zip(a.coeffs, b.coeffs)))


def ff_neg(spec: FieldSpec, a: FieldElement) -> FieldElement:
    _check(spec, a)
    return FieldElement(tuple(-x % spec.p for x in a.coeffs))


def ff_sub(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    return ff_add(spec, a, ff_neg(spec, b))


def ff_mul(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(spec, a, b)
    prod = [0] * (2 * spec.k - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    rem = _poly_rem(prod, spec.modulus, spec.p)
    return FieldElement(tuple(rem) + (0,) * (spec.k - len(rem)))


def ff_pow(spec: FieldSpec, a: FieldElement, exponent: int) -> FieldElement:
    """
    Square-and-multiply exponentiation; negative exponents go through the inverse
    :param spec: field
    :param a: base
    :param exponent: any integer (negative only for nonzero a)
    :return: a ** exponent
    """
    if exponent < 0:
        a, exponent = ff_inv(spec, a), -exponent
    _check(spec, a)
    result, base = one(spec), a
    while exponent:
        if exponent & 1:
            result = ff_mul(spec, result, base)
        base = ff_mul(spec, base, base)
        exponent >>= 1
    return result


def ff_inv(spec: FieldSpec, a: FieldElement) -> FieldElement:
    _check(spec, a)
    if a.is_zero():
        raise FieldError(f'Zero has no inverse in {spec}')
    return ff_pow(spec, a, spec.order - 2)


def multiplicative_order(spec: FieldSpec, a: FieldElement) -> int:
    if a.is_zero():
        raise FieldError('Zero has no multiplicative order')
    n = spec.order - 1
    order = n
    for r in factorint(n):
        while order % r == 0 and ff_pow(spec, a, order // r) == one(spec):
            order //= r
    return order


@lru_cache(maxsize=None)
def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest element, in enumeration order, generating the multiplicative group"""
    for index in range(1, spec.order):
        a = element_from_index(spec, index)
        if multiplicative_order(spec, a) == spec.order - 1:
            return a
    raise FieldError(f'{spec} has no primitive element')  # unreachable for a field


class IndexedField:

    def __init__(self, spec: FieldSpec):
        """
        Field arithmetic on element indices, backed by numpy addition and exp/log tables
        :param spec: field with at most MAX_TABLE_ORDER elements
        """
        assert spec.order <= MAX_TABLE_ORDER, f'{spec} is too large for table arithmetic'
        self.spec = spec
        self.q = q = spec.order
        p, k = spec.p, spec.k

        digits = np.array([element_from_index(spec, i).coeffs for i in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        self._add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self._neg = ((-digits) % p) @ weights

        self._exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        self._log = np.full(q, -1, dtype=np.int64)
        w = primitive_element(spec)
        x = one(spec)
        for i in range(q - 1):
            self._exp[i] = element_index(spec, x)
            self._log[self._exp[i]] = i
            x = ff_mul(spec, x, w)

    def add(self, a: int, b: int) -> int:
        return int(self._add[a, b])

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return int(self._add[a, self._neg[b]])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError(f'Zero has no inverse in {self.spec}')
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    @property
    def primitive(self) -> int:
        return int(self._exp[1 % (self.q - 1)]) if self.q > 2 else 1


@lru_cache(maxsize=None)
def indexed_field(p: int, k: int = 1) -> IndexedField:
    return IndexedField(construct_field(p, k))

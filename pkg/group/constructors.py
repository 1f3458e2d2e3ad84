import logging
from functools import reduce
from math import gcd
from typing import Optional, Union

from finite_field import indexed_field
from .group import CapExceededError, Group, GroupError, GroupSpecError, close_generators, group_cap
from .rule import MatrixRule, PermutationRule, ProductRule, QuaternionRule, SemidirectRule, VectorRule
from .spec import GroupSpec, expected_order, parse_group_spec, prime_power

logger = logging.getLogger(__name__)


def _rotation(n: int):
    return tuple((i + 1) % n for i in range(n))


def cyclic(n: int, cap: Optional[int] = None) -> Group:
    """C_n as the rotations of n points"""
    return close_generators([_rotation(n)], PermutationRule(n), f'C{n}', cap)


def dihedral(n: int, cap: Optional[int] = None) -> Group:
    """D_n, the symmetries of an n-gon, of order 2n"""
    reflection = tuple((-i) % n for i in range(n))
    return close_generators([_rotation(n), reflection], PermutationRule(n), f'D{n}', cap)


def symmetric(n: int, cap: Optional[int] = None) -> Group:
    rule = PermutationRule(n)
    if n < 2:
        return close_generators([rule.identity()], rule, f'S{n}', cap)
    transposition = (1, 0) + tuple(range(2, n))
    return close_generators([transposition, _rotation(n)], rule, f'S{n}', cap)


def alternating(n: int, cap: Optional[int] = None) -> Group:
    """A_n generated by the 3-cycles (0 1 i)"""
    rule = PermutationRule(n)
    gens = []
    for i in range(2, n):
        image = list(range(n))
        image[0], image[1], image[i] = 1, i, 0
        gens.append(tuple(image))
    return close_generators(gens or [rule.identity()], rule, f'A{n}', cap)


def generalized_quaternion(order: int, cap: Optional[int] = None) -> Group:
    return close_generators([(1, 0), (0, 1)], QuaternionRule(order), f'Q{order}', cap)


def elementary_abelian(p: int, k: int, cap: Optional[int] = None) -> Group:
    gens = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    return close_generators(gens, VectorRule(p, k), f'E{p}^{k}', cap)


def semidirect_cyclic(n: int, m: int, k: int, cap: Optional[int] = None) -> Group:
    """
    C_n x| C_m, pairs (i, j) multiplied as (i1 + k^j1 * i2 mod n, j1 + j2 mod m)
    :param n: order of the normal cyclic factor
    :param m: order of the acting factor
    :param k: multiplier; needs gcd(k, n) = 1 and k^m = 1 (mod n)
    :param cap: group-order cap
    :return: the group, labelled SD(n,m,k)
    """
    label = f'SD({n},{m},{k})'
    if n < 1 or m < 1 or gcd(k, n) != 1 or pow(k, m, n) != 1 % n:
        raise GroupSpecError(f'{label}: {k} does not define an action of C{m} on C{n}')
    return close_generators([(1 % n, 0), (0, 1 % m)], SemidirectRule(n, m, k), label, cap)


def _special_linear(q: int, projective: bool, cap: Optional[int]) -> Group:
    pp = prime_power(q)
    if pp is None:
        raise GroupSpecError(f'{q} is not a prime power')
    label = f'PSL(2,{q})' if projective else f'SL(2,{q})'
    cap = group_cap() if cap is None else cap
    order = expected_order(GroupSpec('PSL2' if projective else 'SL2', (q,)))
    if order > cap:
        raise CapExceededError(label, cap, order)

    field = indexed_field(*pp)
    rule = MatrixRule(field, projective=projective)
    w = field.primitive
    gens = [(1, 1, 0, 1), (1, 0, 1, 1), (w, 0, 0, field.inv(w))]
    group = close_generators([rule.canonical(g) for g in gens], rule, label, cap)
    assert group.order == order, f'{label} closed to {group.order} elements instead of {order}'
    return group


def construct_psl2(q: int, cap: Optional[int] = None) -> Group:
    """
    PSL(2,q): SL(2,q) generated by the two unipotent matrices and diag(w, 1/w), taken modulo {I, -I}
    """
    return _special_linear(q, True, cap)


def construct_sl2(q: int, cap: Optional[int] = None) -> Group:
    return _special_linear(q, False, cap)


def direct_product(left: Group, right: Group, cap: Optional[int] = None) -> Group:
    """
    G x H on pairs of component indices, enumerated row-major so the identity comes first
    :param left: G
    :param right: H
    :param cap: group-order cap
    :return: the product, labelled GxH
    """
    cap = group_cap() if cap is None else cap
    label = f'{left.label}x{right.label}'
    order = left.order * right.order
    if order > cap:
        raise CapExceededError(label, cap, order)
    elements = [(i, j) for i in range(left.order) for j in range(right.order)]
    logger.info('Built %s: order %d', label, order)
    return Group(label, ProductRule(left, right), elements)


def build_group(spec: Union[GroupSpec, str], cap: Optional[int] = None) -> Group:
    """
    Builds the group a spec describes
    :param spec: parse tree or spec text
    :param cap: group-order cap, group_cap() if not given
    :return: the group, labelled with the canonical spec text
    """
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    cap = group_cap() if cap is None else cap
    if spec.rhs_only:
        raise GroupSpecError(f'{spec.label} is rhs-only: no constructor exists for it')
    order = expected_order(spec)
    if order > cap:
        raise CapExceededError(spec.label, cap, order)

    f, p = spec.family, spec.params
    if f == 'x':
        factors = [build_group(factor, cap) for factor in spec.factors]
        return reduce(lambda right, left: direct_product(left, right, cap), reversed(factors[:-1]), factors[-1])
    if f == 'C':
        return cyclic(p[0], cap)
    if f == 'D':
        return dihedral(p[0], cap)
    if f == 'S':
        return symmetric(p[0], cap)
    if f == 'A':
        return alternating(p[0], cap)
    if f == 'Q':
        return generalized_quaternion(p[0], cap)
    if f == 'E':
        return elementary_abelian(p[0], p[1], cap)
    if f == 'SD':
        return semidirect_cyclic(*p, cap=cap)
    if f == 'PSL2':
        return construct_psl2(p[0], cap)
    if f == 'SL2':
        return construct_sl2(p[0], cap)
    raise GroupError(f'No constructor for {spec.label}')

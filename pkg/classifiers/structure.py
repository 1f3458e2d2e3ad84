import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List

from sympy import isprime, primefactors

from group import ElementOrderProfile, Group, element_order_profile, exponent, has_normal_sylow, p_part
from .numbers import Factorization, factorize, is_prime_power

logger = logging.getLogger(__name__)


@dataclass
class StructureFlags:
    order: int
    factorization: Factorization
    profile: ElementOrderProfile
    exponent: int
    is_trivial: bool
    is_p_group: bool
    is_cyclic: bool
    is_nilpotent: bool
    is_eppo: bool
    is_epo: bool
    is_exponent2_2group: bool
    # every element of prime order lies in a single maximal cyclic subgroup
    nested_cyclic: bool
    normal_sylow: Dict[int, bool] = field(default_factory=dict)
    sylow_cyclic: Dict[int, bool] = field(default_factory=dict)
    sylow_exponent: Dict[int, int] = field(default_factory=dict)

    @property
    def primes(self) -> List[int]:
        return self.factorization.primes

    def sylow_order(self, p: int) -> int:
        return self.factorization.part(p)

    def to_dict(self) -> Dict:
        document = asdict(self)
        document['factorization'] = self.factorization.to_list()
        for key in ('profile', 'normal_sylow', 'sylow_cyclic', 'sylow_exponent'):
            document[key] = {str(k): v for k, v in document[key].items()}
        return document


def _nested_cyclic(group: Group) -> bool:
    orders = group.orders
    through: Dict[int, List[int]] = {}
    for x in range(1, group.order):
        o = int(orders[x])
        cycle = group.powers(x)
        for p in primefactors(o):
            z = cycle[o // p]
            # the order-p subgroup is named by its smallest non-identity element
            through.setdefault(min(group.powers(z)[1:]), []).append(x)
    for members in through.values():
        top = max(members, key=lambda x: int(orders[x]))
        span = set(group.powers(top))
        if any(x not in span for x in members):
            return False
    return True


def compute_structure_flags(group: Group) -> StructureFlags:
    """
    Structural flags of a group, all read off element orders and p-element sets
    :param group: the group
    :return: the flags
    """
    n = group.order
    factorization = factorize(n)
    profile = element_order_profile(group)
    nontrivial = [o for o in profile if o > 1]

    normal_sylow, sylow_cyclic, sylow_exponent = {}, {}, {}
    for p in factorization.primes:
        part = p_part(n, p)
        normal_sylow[p] = has_normal_sylow(group, p)
        # Sylow p-subgroups are conjugate, so one of them is cyclic iff some element has order |P|
        sylow_exponent[p] = max(o for o in profile if part % o == 0)
        sylow_cyclic[p] = sylow_exponent[p] == part

    is_eppo = all(is_prime_power(o) is not None for o in nontrivial)
    flags = StructureFlags(
        order=n,
        factorization=factorization,
        profile=profile,
        exponent=exponent(group),
        is_trivial=n == 1,
        is_p_group=len(factorization.primes) <= 1,
        is_cyclic=n in profile,
        is_nilpotent=all(normal_sylow.values()),
        is_eppo=is_eppo,
        is_epo=all(isprime(o) for o in nontrivial),
        is_exponent2_2group=n > 1 and factorization.primes == [2] and exponent(group) == 2,
        nested_cyclic=_nested_cyclic(group),
        normal_sylow=normal_sylow,
        sylow_cyclic=sylow_cyclic,
        sylow_exponent=sylow_exponent,
    )
    logger.debug('%s: nilpotent=%s eppo=%s cyclic=%s', group.label, flags.is_nilpotent, flags.is_eppo,
                 flags.is_cyclic)
    return flags

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Union

from group import Group
from .numbers import is_admissible_cyclic_order, psl2_condition, sz_condition
from .structure import StructureFlags, compute_structure_flags

logger = logging.getLogger(__name__)

Subject = Union[Group, StructureFlags, int]


class TheoremError(ValueError):
    pass


# ---------------------------------------------------------
# Group-side conditions
# ---------------------------------------------------------
def chain_semidirect_case(f: StructureFlags) -> bool:
    """EPO group C3 x| P of order 3 * 2^k, k >= 2, with P non-cyclic of exponent 2"""
    return (f.is_epo and f.primes == [2, 3] and f.sylow_order(3) == 3 and f.sylow_order(2) >= 4
            and f.normal_sylow[3] and f.sylow_exponent[2] == 2 and not f.sylow_cyclic[2])


def _chain(f: StructureFlags) -> bool:
    return (f.is_trivial or f.order == 3 or f.is_exponent2_2group or chain_semidirect_case(f)
            or (f.order == 6 and not f.is_cyclic))


def _p_group_or_admissible_cyclic(f: StructureFlags) -> bool:
    return f.is_p_group or (f.is_cyclic and is_admissible_cyclic_order(f.order))


def _cyclic_prime_power(f: StructureFlags) -> bool:
    return f.is_cyclic and len(f.primes) == 1


def _cyclic_times_semidirect(a: StructureFlags, b: StructureFlags) -> bool:
    # a = C_{q^m}; b = C_{p^r} x| Q with no element of order divisible by pq, and r = 1 when m > 1
    if not _cyclic_prime_power(a) or len(b.primes) != 2 or a.primes[0] not in b.primes:
        return False
    q = a.primes[0]
    p = next(r for r in b.primes if r != q)
    return (b.normal_sylow[p] and b.sylow_cyclic[p] and b.is_eppo
            and (a.order == q or b.sylow_order(p) == p))


def _product(f: StructureFlags, h: StructureFlags,
             cyclic_times_other: Callable[[StructureFlags, StructureFlags], bool] = _cyclic_times_semidirect) -> bool:
    if f.is_trivial or h.is_trivial:
        raise TheoremError('The direct-product condition is stated for non-trivial factors')
    primes = set(f.primes) | set(h.primes)
    if len(primes) == 1:
        return True
    if len(primes) > 2:
        return False
    if _cyclic_prime_power(f) and _cyclic_prime_power(h) and (f.order == f.primes[0] or h.order == h.primes[0]):
        return True
    return cyclic_times_other(f, h) or cyclic_times_other(h, f)


def _p2p3_nilpotent(f: StructureFlags) -> bool:
    if _p_group_or_admissible_cyclic(f):
        return True
    if len(f.primes) != 2 or f.primes[0] != 2:
        return False
    q = f.primes[1]
    return not f.sylow_cyclic[2] and f.sylow_exponent[2] == 2 and f.sylow_order(q) == q


def _p2p3_non_nilpotent(f: StructureFlags) -> bool:
    if f.is_eppo:
        return True
    if 2 not in f.primes or f.sylow_exponent[2] != 2:
        return False
    odd = [p for p in f.primes if p != 2]
    if not all(f.normal_sylow[p] and f.sylow_cyclic[p] for p in odd):
        return False
    if len(f.primes) == 2:
        return True
    if len(f.primes) == 3:
        involutions_only = all(o == 2 for o in f.profile if o % 2 == 0)
        return involutions_only and any(f.sylow_order(p) == p for p in odd)
    return False


def _diamond(f: StructureFlags) -> bool:
    return (f.is_p_group or f.is_eppo) and f.nested_cyclic


def _diamond_codiamond(f: StructureFlags) -> bool:
    return (f.is_cyclic and f.is_p_group) or f.is_exponent2_2group or f.is_trivial


def _cograph_nilpotent(f: StructureFlags) -> bool:
    return f.is_p_group or (f.is_cyclic and len(f.primes) == 2 and f.order == f.primes[0] * f.primes[1])


def _chordal_nilpotent(f: StructureFlags) -> bool:
    if f.is_p_group:
        return True
    if len(f.primes) != 2:
        return False
    p, q = f.primes
    return (f.sylow_cyclic[p] and f.sylow_exponent[q] == q) or (f.sylow_cyclic[q] and f.sylow_exponent[p] == p)


# ---------------------------------------------------------
# Conditions as published, where they differ from the ones above
# ---------------------------------------------------------
def _p_group_or_eppo(f: StructureFlags) -> bool:
    return f.is_p_group or f.is_eppo


def _p2p3_nilpotent_as_published(f: StructureFlags) -> bool:
    # E2^k x C_{q^b} for every b >= 1
    if _p_group_or_admissible_cyclic(f):
        return True
    if len(f.primes) != 2 or f.primes[0] != 2:
        return False
    q = f.primes[1]
    return not f.sylow_cyclic[2] and f.sylow_exponent[2] == 2 and f.sylow_cyclic[q]


def _cyclic_times_other_as_published(a: StructureFlags, b: StructureFlags) -> bool:
    # a = C_{q^m}; b = C_{p^r} x| Q when m = 1, the direct product C_p x Q when m > 1
    if not _cyclic_prime_power(a) or len(b.primes) > 2 or a.primes[0] not in b.primes:
        return False
    q = a.primes[0]
    p = next((r for r in b.primes if r != q), None)
    if p is None or not (b.normal_sylow[p] and b.sylow_cyclic[p]):
        return False
    return a.order == q or (b.sylow_order(p) == p and b.is_nilpotent)


def _product_as_published(f: StructureFlags, h: StructureFlags) -> bool:
    return _product(f, h, _cyclic_times_other_as_published)


# ---------------------------------------------------------
# Registry
# ---------------------------------------------------------
@dataclass(frozen=True)
class RhsRule:
    """
    The structural side of one theorem
    :param kind: 'group', 'pair' or 'parameter' (an integer n or q)
    :param formula: the condition in words, as printed by the CLI and the docs
    :param published: the condition as originally stated, when it differs from predicate
    """
    theorem_id: str
    kind: str
    formula: str
    predicate: Callable[..., bool]
    published: Optional[Callable[..., bool]] = None


RULES: Dict[str, RhsRule] = {r.theorem_id: r for r in [
    RhsRule('T-CHAIN', 'group',
            'trivial or |G| = 3 or 2-group of exponent 2 or EPO C3 x| P (P non-cyclic, exponent 2) '
            'or non-cyclic of order 6', _chain),
    RhsRule('T-P5-NILP', 'group', 'p-group or cyclic of admissible order', _p_group_or_admissible_cyclic),
    RhsRule('T-P5P5B-NILP', 'group', 'p-group or cyclic of admissible order', _p_group_or_admissible_cyclic),
    RhsRule('T-P5P5B-PRODUCT', 'pair',
            'same prime; or C_{p^k} and C_q; or C_{q^m} and an EPPO C_{p^r} x| Q with r = 1 when m > 1',
            _product, _product_as_published),
    RhsRule('T-SN', 'parameter', 'n <= 5', lambda n: n <= 5),
    RhsRule('T-AN', 'parameter', 'n <= 6', lambda n: n <= 6),
    RhsRule('T-PSL2', 'parameter', '(q -+ 1)/2 admissible for odd q, q -+ 1 admissible for even q',
            lambda q: psl2_condition(q).holds),
    RhsRule('T-SZ', 'parameter', 'q - 1 and q -+ sqrt(2q) + 1 admissible', lambda q: sz_condition(q).holds),
    RhsRule('T-P2P3-NILP', 'group',
            'p-group or cyclic of admissible order or E2^k x C_q', _p2p3_nilpotent, _p2p3_nilpotent_as_published),
    RhsRule('T-P2P3-NONNILP', 'group',
            'EPPO; or |pi| = 3 with C_{q^a r} x| P, P of exponent 2; or |pi| = 2 with a normal cyclic odd '
            'Sylow and Sylow-2 of exponent 2', _p2p3_non_nilpotent),
    RhsRule('T-DIAMOND', 'group', '(p-group or EPPO) and nested cyclic subgroups', _diamond, _p_group_or_eppo),
    RhsRule('T-EVENHOLE-DIAMOND', 'group', '(p-group or EPPO) and nested cyclic subgroups', _diamond,
            _p_group_or_eppo),
    RhsRule('T-DIAMOND-CODIAMOND', 'group', 'cyclic p-group or 2-group of exponent 2', _diamond_codiamond),
    RhsRule('S-COGRAPH-NULLPRIME', 'group', 'true for every EPPO group', lambda f: True),
    RhsRule('S-CHORDAL-NILP', 'group', 'p-group or two primes, one Sylow cyclic and the other of prime exponent',
            _chordal_nilpotent),
    RhsRule('S-COGRAPH-NILP', 'group', 'p-group or cyclic of order pq', _cograph_nilpotent),
]}

THEOREM_IDS = tuple(RULES)


def get_rule(theorem_id: str) -> RhsRule:
    try:
        return RULES[theorem_id]
    except KeyError:
        raise TheoremError(f'Unknown theorem {theorem_id!r}; known: {", ".join(THEOREM_IDS)}') from None


def _as_flags(subject: Subject) -> StructureFlags:
    if isinstance(subject, StructureFlags):
        return subject
    if isinstance(subject, Group):
        return compute_structure_flags(subject)
    raise TheoremError(f'Expected a group or its structure flags, got {subject!r}')


def rhs_predicate(theorem_id: str, *subjects: Subject) -> bool:
    """
    Evaluates the structural side of a theorem
    :param theorem_id: one of THEOREM_IDS
    :param subjects: one group (or its flags); two for T-P5P5B-PRODUCT; the integer n or q for the
        parametric theorems
    :return: the condition's truth value
    """
    rule = get_rule(theorem_id)
    return _evaluate(rule, rule.predicate, subjects)


def published_predicate(theorem_id: str, *subjects: Subject) -> bool:
    """
    Evaluates the structural side as originally stated; the same as rhs_predicate for the theorems
    whose statement needed no correction
    """
    rule = get_rule(theorem_id)
    return _evaluate(rule, rule.published or rule.predicate, subjects)


def _evaluate(rule: RhsRule, predicate: Callable[..., bool], subjects) -> bool:
    theorem_id = rule.theorem_id
    arity = 2 if rule.kind == 'pair' else 1
    if len(subjects) != arity:
        raise TheoremError(f'{theorem_id} takes {arity} argument(s), got {len(subjects)}')
    if rule.kind == 'parameter':
        value, = subjects
        if isinstance(value, bool) or not isinstance(value, int):
            raise TheoremError(f'{theorem_id} takes an integer parameter, got {value!r}')
        try:
            return bool(predicate(value))
        except ValueError as e:
            raise TheoremError(f'{theorem_id}: {e}') from None
    return bool(predicate(*(_as_flags(s) for s in subjects)))

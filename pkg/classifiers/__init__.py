from .numbers import (
    Factorization,
    SideCondition,
    factorize,
    is_admissible_cyclic_order,
    is_prime_power,
    psl2_condition,
    sz_condition,
)
from .structure import StructureFlags, compute_structure_flags
from .predicates import (
    RULES,
    THEOREM_IDS,
    RhsRule,
    TheoremError,
    chain_semidirect_case,
    get_rule,
    published_predicate,
    rhs_predicate,
)

__all__ = ['Factorization', 'SideCondition', 'factorize', 'is_admissible_cyclic_order', 'is_prime_power',
           'psl2_condition', 'sz_condition', 'StructureFlags', 'compute_structure_flags', 'RULES', 'THEOREM_IDS',
           'RhsRule', 'TheoremError', 'chain_semidirect_case', 'get_rule', 'published_predicate', 'rhs_predicate']

from .group import (
    CapExceededError,
    DEFAULT_GROUP_CAP,
    DENSE_TABLE_LIMIT,
    ElementOrderProfile,
    Group,
    GroupError,
    GroupSpecError,
    LARGE_GROUP_CAP,
    close_generators,
    cyclic_closure,
    element_order,
    element_order_profile,
    exponent,
    generate_subgroup,
    group_cap,
    has_normal_sylow,
    is_closed_subset,
    p_element_set,
    p_part,
    random_triples,
    sylow_order,
)
from .rule import (
    CompositionRule,
    MatrixRule,
    PermutationRule,
    ProductRule,
    QuaternionRule,
    SemidirectRule,
    VectorRule,
)
from .spec import GroupSpec, expected_order, parse_group_spec, prime_power
from .constructors import (
    alternating,
    build_group,
    construct_psl2,
    construct_sl2,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    generalized_quaternion,
    semidirect_cyclic,
    symmetric,
)

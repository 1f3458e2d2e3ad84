from .field import (
    FieldError,
    FieldSpec,
    FieldElement,
    IndexedField,
    MODULUS_TABLE,
    construct_field,
    element_from_index,
    element_index,
    ff_add,
    ff_inv,
    ff_mul,
    ff_neg,
    ff_pow,
    ff_sub,
    field_elements,
    indexed_field,
    is_irreducible,
    multiplicative_order,
    one,
    primitive_element,
    zero,
)

__all__ = ['FieldError', 'FieldSpec', 'FieldElement', 'IndexedField', 'MODULUS_TABLE', 'construct_field',
           'element_from_index', 'element_index', 'ff_add', 'ff_inv', 'ff_mul', 'ff_neg', 'ff_pow', 'ff_sub',
           'field_elements', 'indexed_field', 'is_irreducible', 'multiplicative_order', 'one',
           'primitive_element', 'zero']

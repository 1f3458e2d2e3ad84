from .catalog import CATALOG, MAX_PATTERN_SIZE, Pattern, PatternError, get_pattern, parse_patterns
from .search import (
    FreenessReport,
    PropertyResult,
    Witness,
    find_induced_path,
    find_induced_pattern,
    is_chain_graph,
    is_cograph,
    is_free,
    placement_order,
    search_pattern,
    verify_witness,
)
from .holes import PARITIES, find_hole, is_chordal, search_hole, verify_hole

__all__ = ['CATALOG', 'MAX_PATTERN_SIZE', 'Pattern', 'PatternError', 'get_pattern', 'parse_patterns',
           'FreenessReport', 'PropertyResult', 'Witness', 'find_induced_path', 'find_induced_pattern',
           'is_chain_graph', 'is_cograph', 'is_free', 'placement_order', 'search_pattern', 'verify_witness',
           'PARITIES', 'find_hole', 'is_chordal', 'search_hole', 'verify_hole']

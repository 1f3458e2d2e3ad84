from .corpus import (
    DEFAULT_CORPUS,
    PRODUCT_CORPUS,
    PRODUCT_ORDER_LIMIT,
    CorpusEntry,
    default_corpus,
    load_corpus_file,
    make_entry,
    parse_corpus,
    product_pairs,
)
from .cases import CASES, DEFAULT_MIN_HOLE_LENGTH, Subject, TheoremCase, get_case
from .verify import VerificationEntry, VerificationReport, run_all, run_theorem_case
from .analyze import analyze_group, parse_path

__all__ = ['DEFAULT_CORPUS', 'PRODUCT_CORPUS', 'PRODUCT_ORDER_LIMIT', 'CorpusEntry', 'default_corpus',
           'load_corpus_file', 'make_entry', 'parse_corpus', 'product_pairs', 'CASES', 'DEFAULT_MIN_HOLE_LENGTH',
           'Subject', 'TheoremCase', 'get_case', 'VerificationEntry', 'VerificationReport', 'run_all',
           'run_theorem_case', 'analyze_group', 'parse_path']

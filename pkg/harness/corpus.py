import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from group import GroupSpec, GroupSpecError, expected_order, parse_group_spec

logger = logging.getLogger(__name__)

PRODUCT_TAG = 'product'
RHS_ONLY_TAG = 'rhs-only'
PRODUCT_ORDER_LIMIT = 2048

DEFAULT_CORPUS = (
    [f'C{n}' for n in range(1, 17)] + ['C18', 'C20', 'C24', 'C30', 'C36', 'C48', 'C100']
    + [f'D{n}' for n in range(3, 9)]
    + ['Q8', 'Q16', 'E2^2', 'E2^3', 'E2^4', 'E3^2']
    + [f'S{n}' for n in range(2, 7)]
    + [f'A{n}' for n in range(4, 8)]
    + ['SD(3,2,2)', 'SD(7,3,2)', 'SD(5,4,2)', 'SD(5,4,4)', 'SD(9,2,8)', 'SD(15,2,14)']
    + ['C3xC3', 'C2xC6', 'C4xC9', 'E2^3xC9']
    + [f'PSL(2,{q})' for q in (4, 5, 7, 8, 9, 11, 13)]
    + [f'Sz({q})' for q in (8, 32, 128, 512)]
)

# Factors for the direct-product theorem
PRODUCT_CORPUS = ('C2', 'C3', 'C4', 'C8', 'C9', 'C5', 'C7', 'E2^2', 'S3', 'SD(7,3,2)', 'Q8', 'D4', 'C6')


@dataclass(frozen=True)
class CorpusEntry:
    spec: GroupSpec
    tags: Tuple[str, ...] = ()

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def rhs_only(self) -> bool:
        return RHS_ONLY_TAG in self.tags

    @property
    def parameter(self) -> Optional[int]:
        """n for S_n and A_n, q for PSL(2,q) and Sz(q)"""
        if self.family in ('S', 'A', 'PSL2', 'Sz'):
            return self.spec.params[0]
        return None

    @property
    def order(self) -> int:
        return expected_order(self.spec)


def make_entry(text: str, product: bool = False) -> CorpusEntry:
    spec = parse_group_spec(text)
    tags = [spec.family]
    if product or spec.label in PRODUCT_CORPUS:
        tags.append(PRODUCT_TAG)
    if spec.rhs_only:
        tags.append(RHS_ONLY_TAG)
    return CorpusEntry(spec, tuple(tags))


def default_corpus() -> List[CorpusEntry]:
    return [make_entry(text) for text in DEFAULT_CORPUS]


def parse_corpus(lines: Iterable[str], source: str = '<corpus>') -> List[CorpusEntry]:
    """
    :param lines: one spec per line; '#' starts a comment, blank lines are skipped
    :param source: name used in error messages
    :return: the entries, in order
    """
    entries = []
    for number, line in enumerate(lines, start=1):
        text = line.split('#', 1)[0].strip()
        if not text:
            continue
        try:
            entries.append(make_entry(text))
        except GroupSpecError as e:
            raise GroupSpecError(f'{source}:{number}: {e}', e.text, e.position) from None
    return entries


def load_corpus_file(path: str) -> List[CorpusEntry]:
    with open(path) as f:
        entries = parse_corpus(f, path)
    logger.info('Loaded %d corpus entries from %s', len(entries), path)
    return entries


def product_pairs(corpus: Iterable[CorpusEntry], limit: int = PRODUCT_ORDER_LIMIT) \
        -> List[Tuple[CorpusEntry, CorpusEntry]]:
    """Ordered pairs of non-trivial product factors, diagonal included, with |G|*|H| <= limit"""
    factors = [e for e in corpus if PRODUCT_TAG in e.tags and not e.rhs_only and e.order > 1]
    return [(g, h) for g in factors for h in factors if g.order * h.order <= limit]

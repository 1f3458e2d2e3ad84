import logging
from abc import abstractmethod
from typing import Callable, Dict, List, Optional, Sequence

from classifiers import StructureFlags, compute_structure_flags, get_rule, published_predicate, rhs_predicate
from group import Group, GroupError, build_group, direct_product
from pattern import PropertyResult, find_hole, find_induced_pattern, is_chain_graph, is_chordal, is_cograph, is_free
from power_graph import DEFAULT_TWIN_CAP, Graph, TwinReducedGraph, build_power_graph, twin_reduce
from .corpus import CorpusEntry

logger = logging.getLogger(__name__)

DEFAULT_MIN_HOLE_LENGTH = 4


class Subject:

    def __init__(self, entries: Sequence[CorpusEntry], cap: Optional[int] = None, twin_cap: int = DEFAULT_TWIN_CAP):
        """
        One corpus entry, or an ordered pair of entries standing for their direct product; the group,
        its flags and its graphs are built on first use
        :param entries: one entry, or two for the direct-product theorem
        :param cap: group-order cap, defaults to group_cap()
        :param twin_cap: members kept per twin class
        """
        assert 1 <= len(entries) <= 2, 'A subject is a group or a pair of groups'
        self.entries = tuple(entries)
        self.cap = cap
        self.twin_cap = twin_cap
        self._factors: Optional[List[Group]] = None
        self._group: Optional[Group] = None
        self._flags: Optional[StructureFlags] = None
        self._factor_flags: Optional[List[StructureFlags]] = None
        self._graphs: Dict[bool, Graph] = {}
        self._reduced: Dict[bool, TwinReducedGraph] = {}

    @property
    def label(self) -> str:
        return 'x'.join(e.label for e in self.entries)

    @property
    def entry(self) -> CorpusEntry:
        return self.entries[0]

    @property
    def rhs_only(self) -> bool:
        return any(e.rhs_only for e in self.entries)

    @property
    def factors(self) -> List[Group]:
        if self._factors is None:
            self._factors = [self._build(e) for e in self.entries]
        return self._factors

    @property
    def group(self) -> Group:
        if self._group is None:
            factors = self.factors
            self._group = factors[0] if len(factors) == 1 else direct_product(factors[0], factors[1], self.cap)
        return self._group

    @property
    def flags(self) -> StructureFlags:
        if self._flags is None:
            self._flags = compute_structure_flags(self.group)
        return self._flags

    @property
    def factor_flags(self) -> List[StructureFlags]:
        if self._factor_flags is None:
            self._factor_flags = [compute_structure_flags(g) for g in self.factors]
        return self._factor_flags

    def graph(self, proper: bool = False) -> Graph:
        if proper not in self._graphs:
            self._graphs[proper] = build_power_graph(self.group, proper=proper)
        return self._graphs[proper]

    def reduced(self, proper: bool = False) -> TwinReducedGraph:
        if proper not in self._reduced:
            self._reduced[proper] = twin_reduce(self.graph(proper), self.twin_cap)
        return self._reduced[proper]

    def _build(self, entry: CorpusEntry) -> Group:
        try:
            return build_group(entry.spec, self.cap)
        except GroupError as e:
            raise GroupError(f'Corpus entry {entry.label!r} does not build: {e}') from e


class TheoremCase:

    def __init__(self, theorem_id: str, proper: bool = False):
        """
        Graph side of one theorem, paired with the structural side registered under the same id
        :param theorem_id: one of classifiers.THEOREM_IDS
        :param proper: check P*(G) instead of P(G)
        """
        self.theorem_id = theorem_id
        self.rule = get_rule(theorem_id)
        self.proper = proper

    @property
    def arity(self) -> int:
        return 2 if self.rule.kind == 'pair' else 1

    @abstractmethod
    def applies(self, subject: Subject) -> bool:
        return NotImplemented

    @abstractmethod
    def graph_side(self, subject: Subject, min_hole_length: int = DEFAULT_MIN_HOLE_LENGTH) -> PropertyResult:
        return NotImplemented

    def rhs(self, subject: Subject) -> bool:
        return self._structural(rhs_predicate, subject)

    def published_rhs(self, subject: Subject) -> bool:
        """The structural side as originally stated"""
        return self._structural(published_predicate, subject)

    def _structural(self, predicate: Callable[..., bool], subject: Subject) -> bool:
        if self.rule.kind == 'parameter':
            return predicate(self.theorem_id, subject.entry.parameter)
        if self.rule.kind == 'pair':
            return predicate(self.theorem_id, *subject.factor_flags)
        return predicate(self.theorem_id, subject.flags)


Applicability = Callable[[Subject], bool]


def every_group(subject: Subject) -> bool:
    return not subject.rhs_only


def nilpotent(subject: Subject) -> bool:
    return not subject.rhs_only and subject.flags.is_nilpotent


def non_nilpotent(subject: Subject) -> bool:
    return not subject.rhs_only and not subject.flags.is_nilpotent


def eppo(subject: Subject) -> bool:
    return not subject.rhs_only and subject.flags.is_eppo


def family(name: str) -> Applicability:
    def applies(subject: Subject) -> bool:
        return len(subject.entries) == 1 and subject.entry.family == name
    return applies


class FreenessCase(TheoremCase):

    def __init__(self, theorem_id: str, patterns: Sequence[str], applicability: Applicability = every_group,
                 proper: bool = False):
        super(FreenessCase, self).__init__(theorem_id, proper)
        self.patterns = list(patterns)
        self._applies = applicability

    def applies(self, subject: Subject) -> bool:
        return self._applies(subject)

    def graph_side(self, subject: Subject, min_hole_length: int = DEFAULT_MIN_HOLE_LENGTH) -> PropertyResult:
        report = is_free(subject.reduced(self.proper), self.patterns)
        return PropertyResult(report.free, report.first_witness())


class PropertyCase(TheoremCase):

    def __init__(self, theorem_id: str, check: Callable[..., PropertyResult],
                 applicability: Applicability = every_group, proper: bool = False):
        super(PropertyCase, self).__init__(theorem_id, proper)
        self.check = check
        self._applies = applicability

    def applies(self, subject: Subject) -> bool:
        return self._applies(subject)

    def graph_side(self, subject: Subject, min_hole_length: int = DEFAULT_MIN_HOLE_LENGTH) -> PropertyResult:
        return self.check(subject.reduced(self.proper))


class EvenHoleDiamondCase(TheoremCase):

    def applies(self, subject: Subject) -> bool:
        return every_group(subject)

    def graph_side(self, subject: Subject, min_hole_length: int = DEFAULT_MIN_HOLE_LENGTH) -> PropertyResult:
        reduced = subject.reduced(self.proper)
        witness = find_induced_pattern(reduced, 'diamond')
        if witness is None:
            witness = find_hole(reduced, 'even', min_len=min_hole_length)
        return PropertyResult(witness is None, witness)


class ProductCase(FreenessCase):

    def applies(self, subject: Subject) -> bool:
        return len(subject.entries) == 2 and not subject.rhs_only


P5_PAIR = ('P5', 'P5bar')
P2P3_PAIR = ('P2uP3', 'P2uP3bar')

CASES: Dict[str, TheoremCase] = {c.theorem_id: c for c in [
    PropertyCase('T-CHAIN', is_chain_graph, proper=True),
    FreenessCase('T-P5-NILP', ['P5'], nilpotent),
    FreenessCase('T-P5P5B-NILP', P5_PAIR, nilpotent),
    ProductCase('T-P5P5B-PRODUCT', P5_PAIR),
    FreenessCase('T-SN', P5_PAIR, family('S')),
    FreenessCase('T-AN', P5_PAIR, family('A')),
    FreenessCase('T-PSL2', P5_PAIR, family('PSL2')),
    FreenessCase('T-SZ', P5_PAIR, family('Sz')),
    FreenessCase('T-P2P3-NILP', P2P3_PAIR, nilpotent),
    FreenessCase('T-P2P3-NONNILP', P2P3_PAIR, non_nilpotent),
    FreenessCase('T-DIAMOND', ['diamond']),
    EvenHoleDiamondCase('T-EVENHOLE-DIAMOND'),
    FreenessCase('T-DIAMOND-CODIAMOND', ['diamond', 'co-diamond']),
    PropertyCase('S-COGRAPH-NULLPRIME', is_cograph, eppo),
    PropertyCase('S-CHORDAL-NILP', is_chordal, nilpotent),
    PropertyCase('S-COGRAPH-NILP', is_cograph, nilpotent),
]}


def get_case(theorem_id: str) -> TheoremCase:
    # unknown ids raise TheoremError
    get_rule(theorem_id)
    return CASES[theorem_id]

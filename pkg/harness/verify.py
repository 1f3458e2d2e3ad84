import logging
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence

from progressbar import progressbar

from classifiers import THEOREM_IDS, chain_semidirect_case
from pattern import Witness
from power_graph import DEFAULT_TWIN_CAP
from .cases import DEFAULT_MIN_HOLE_LENGTH, Subject, get_case
from .corpus import PRODUCT_ORDER_LIMIT, CorpusEntry, product_pairs

logger = logging.getLogger(__name__)


@dataclass
class VerificationEntry:
    """
    graph_side is None for rhs-only entries, which then agree by convention; published is the
    structural side as originally stated, which differs from rhs for a few theorems
    """
    group: str
    graph_side: Optional[bool]
    rhs: bool
    witness: Optional[Witness] = None
    published: Optional[bool] = None

    @property
    def agree(self) -> bool:
        return self.graph_side is None or self.graph_side == self.rhs

    @property
    def published_agree(self) -> bool:
        return self.graph_side is None or self.published is None or self.graph_side == self.published

    def to_dict(self) -> Dict:
        return {
            'group': self.group,
            'graph_side': self.graph_side,
            'rhs': self.rhs,
            'agree': self.agree,
            'published': self.published,
            'published_agree': self.published_agree,
            'witness': self.witness.labels if self.witness is not None else None,
        }


@dataclass
class VerificationReport:
    theorem: str
    entries: List[VerificationEntry] = field(default_factory=list)
    ms: int = 0

    @property
    def applicable(self) -> int:
        return len(self.entries)

    @property
    def positives(self) -> int:
        return sum(e.rhs for e in self.entries)

    @property
    def mismatches(self) -> int:
        return sum(not e.agree for e in self.entries)

    @property
    def published_mismatches(self) -> int:
        return sum(not e.published_agree for e in self.entries)

    def entry(self, group: str) -> VerificationEntry:
        return next(e for e in self.entries if e.group == group)

    def to_dict(self) -> Dict:
        return {
            'theorem': self.theorem,
            'entries': [e.to_dict() for e in self.entries],
            'mismatches': self.mismatches,
            'published_mismatches': self.published_mismatches,
            'ms': self.ms,
        }


def run_theorem_case(
        theorem_id: str,
        corpus: Sequence[CorpusEntry],
        cap: Optional[int] = None,
        twin_cap: int = DEFAULT_TWIN_CAP,
        min_hole_length: int = DEFAULT_MIN_HOLE_LENGTH,
        product_order_limit: int = PRODUCT_ORDER_LIMIT,
        verbose: Optional[int] = None,
) -> VerificationReport:
    """
    Evaluates both sides of one theorem over the corpus
    :param theorem_id: one of THEOREM_IDS
    :param corpus: corpus entries; the direct-product theorem runs over the product pairs drawn from it
    :param cap: group-order cap, defaults to group_cap()
    :param twin_cap: members kept per twin class
    :param min_hole_length: shortest even hole counted by T-EVENHOLE-DIAMOND
    :param product_order_limit: largest |G|*|H| among the product pairs
    :param verbose: 1 or more shows a progress bar over the corpus
    :return: one entry per applicable corpus member, in corpus order
    """
    if verbose is None:
        verbose = 0
    case = get_case(theorem_id)
    start = time.perf_counter()

    if case.arity == 2:
        subjects = [Subject(pair, cap, twin_cap) for pair in product_pairs(corpus, product_order_limit)]
    else:
        subjects = [Subject([entry], cap, twin_cap) for entry in corpus]
    if verbose >= 1:
        subjects = progressbar(subjects)

    report = VerificationReport(theorem_id)
    semidirect = 0
    for subject in subjects:
        if not case.applies(subject):
            continue
        rhs = case.rhs(subject)
        published = case.published_rhs(subject)
        if subject.rhs_only:
            report.entries.append(VerificationEntry(subject.label, None, rhs, published=published))
            continue
        if theorem_id == 'T-CHAIN' and chain_semidirect_case(subject.flags):
            semidirect += 1
        result = case.graph_side(subject, min_hole_length)
        entry = VerificationEntry(subject.label, result.holds, rhs, result.witness, published)
        if not entry.agree:
            logger.warning('%s mismatch on %s: graph side %s, structural side %s, witness %s', theorem_id,
                           subject.label, result.holds, rhs, entry.to_dict()['witness'])
        elif not entry.published_agree:
            logger.info('%s on %s: graph side %s disagrees with the condition as published', theorem_id,
                        subject.label, result.holds)
        report.entries.append(entry)

    if theorem_id == 'T-CHAIN':
        logger.info('T-CHAIN: %d corpus group(s) fall under the C3 x| P sub-case', semidirect)
    report.ms = int((time.perf_counter() - start) * 1000)
    logger.info('%s: %d entries, %d positive, %d mismatches in %d ms', theorem_id, report.applicable,
                report.positives, report.mismatches, report.ms)
    return report


def _run_case(arguments) -> VerificationReport:
    theorem_id, corpus, options = arguments
    return run_theorem_case(theorem_id, corpus, **options)


def run_all(
        corpus: Sequence[CorpusEntry],
        jobs: int = 1,
        theorem_ids: Sequence[str] = THEOREM_IDS,
        **options,
) -> List[VerificationReport]:
    """
    Runs every theorem case over the corpus
    :param corpus: corpus entries
    :param jobs: worker processes; 1 runs the cases one after another
    :param theorem_ids: the cases to run
    :param options: forwarded to run_theorem_case
    :return: the reports, ordered as theorem_ids
    """
    for theorem_id in theorem_ids:
        get_case(theorem_id)
    concurrent = jobs > 1 and len(theorem_ids) > 1
    if concurrent:
        # no progress bars from the workers
        options = dict(options, verbose=0)
    work = [(theorem_id, list(corpus), options) for theorem_id in theorem_ids]
    if concurrent:
        with Pool(min(jobs, len(work))) as pool:
            return pool.map(_run_case, work)
    return [_run_case(w) for w in work]

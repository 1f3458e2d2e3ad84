from typing import Dict, List, Sequence, Union

import numpy as np

Row = Dict[str, Union[str, int, bool, None]]


def report_rows(reports: Sequence) -> List[Row]:
    """
    Flattens verification reports into one row per entry
    :param reports: VerificationReport objects
    :return: rows with the theorem id, the group, both sides, agreement with each
        statement of the structural side and the witness labels
    """
    rows = []
    for report in reports:
        for entry in report.entries:
            rows.append({
                'theorem': report.theorem,
                'group': entry.group,
                'graph_side': entry.graph_side,
                'rhs': entry.rhs,
                'agree': entry.agree,
                'published': entry.published,
                'published_agree': entry.published_agree,
                'witness': ' ~ '.join(entry.witness.labels) if entry.witness is not None else '',
            })
    return rows


def summary_table(reports: Sequence) -> Dict[str, np.ndarray]:
    """
    Counts per theorem, in report order
    :param reports: VerificationReport objects
    :return: 'theorem' ids and integer arrays 'applicable', 'positives', 'mismatches',
        'published_mismatches', 'ms'
    """
    return {
        'theorem': np.array([r.theorem for r in reports], dtype=object),
        'applicable': np.array([r.applicable for r in reports], dtype=np.int64),
        'positives': np.array([r.positives for r in reports], dtype=np.int64),
        'mismatches': np.array([r.mismatches for r in reports], dtype=np.int64),
        'published_mismatches': np.array([r.published_mismatches for r in reports], dtype=np.int64),
        'ms': np.array([r.ms for r in reports], dtype=np.int64),
    }


def format_summary(reports: Sequence) -> str:
    table = summary_table(reports)
    width = max([len('theorem')] + [len(t) for t in table['theorem']])
    lines = [f'{"theorem":<{width}}  applicable  positives  mismatches  published       ms']
    for i, theorem in enumerate(table['theorem']):
        lines.append(f'{theorem:<{width}}  {table["applicable"][i]:>10}  {table["positives"][i]:>9}  '
                     f'{table["mismatches"][i]:>10}  {table["published_mismatches"][i]:>9}  {table["ms"][i]:>7}')
    lines.append(f'{"total":<{width}}  {table["applicable"].sum():>10}  {table["positives"].sum():>9}  '
                 f'{table["mismatches"].sum():>10}  {table["published_mismatches"].sum():>9}  {table["ms"].sum():>7}')
    return '\n'.join(lines)

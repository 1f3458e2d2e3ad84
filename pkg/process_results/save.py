import os
import csv
import json
import logging
from typing import Dict, List, Sequence, Union

from .summary import report_rows

logger = logging.getLogger(__name__)


def save(path: str, name: str, results: List[Dict[str, Union[str, int, float, bool, None]]]):
    """
    Appends rows to a csv-file, writing the header when the file is new
    :param path: directory for saving
    :param name: file name
    :param results: rows to save; the keys of the first row are the columns
    """
    if not results:
        return
    file_name = f'{path}/{name}.csv'
    file_exists = os.path.exists(file_name)
    if not file_exists:
        os.makedirs(path, exist_ok=True)
    field_names = results[0].keys()
    with open(file_name, 'a', newline='') as csvfile:
        writer = csv.DictWriter(csvfile, fieldnames=field_names)
        if not file_exists:
            writer.writeheader()
        writer.writerows(results)


def save_json(path: str, name: str, document: Union[Dict, List]):
    os.makedirs(path, exist_ok=True)
    with open(f'{path}/{name}.json', 'w') as f:
        json.dump(document, f, indent=2)
        f.write('\n')


def save_report(path: str, name: str, reports: Sequence) -> str:
    """
    Saves verification reports: one csv row per entry, and the reports as a JSON list
    :param path: directory for saving
    :param name: file name, without extension
    :param reports: VerificationReport objects
    :return: the directory
    """
    save(path, name, report_rows(reports))
    save_json(path, name, [r.to_dict() for r in reports])
    logger.info('Saved %d report(s) to %s', len(reports), path)
    return path

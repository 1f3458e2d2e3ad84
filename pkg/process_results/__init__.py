from .save import save, save_json, save_report
from .summary import format_summary, report_rows, summary_table

__all__ = ['save', 'save_json', 'save_report', 'format_summary', 'report_rows', 'summary_table']

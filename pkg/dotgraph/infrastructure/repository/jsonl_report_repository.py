# dotgraph/infrastructure/repository/jsonl_report_repository.py
import json
import logging
import os
from typing import Iterable, List

from dotgraph.domain.model.prediction import VerificationReport
from dotgraph.domain.port.repository.report_repository import ReportRepository


def encode_report(report: VerificationReport) -> str:
    """One report as a single JSON line, without the trailing newline."""
    return json.dumps(report.to_dict(), ensure_ascii=False)


class JsonlReportRepository(ReportRepository):
    """
    File-based implementation of the ReportRepository interface.
    Stores one JSON object per line so that long sweeps can be tailed and diffed.
    """

    def __init__(self, file_path: str):
        """
        Initialize the repository.

        Args:
            file_path: Path of the JSON-lines file; parent directories are created
        """
        self.file_path = file_path
        self.logger = logging.getLogger(__name__)

        directory = os.path.dirname(os.path.abspath(file_path))
        os.makedirs(directory, exist_ok=True)

    def save(self, report: VerificationReport) -> VerificationReport:
        with open(self.file_path, 'a', encoding='utf-8') as f:
            f.write(encode_report(report) + "\n")
        return report

    def save_all(self, reports: Iterable[VerificationReport]) -> int:
        count = 0
        with open(self.file_path, 'a', encoding='utf-8') as f:
            for report in reports:
                f.write(encode_report(report) + "\n")
                count += 1
        self.logger.info(f"Wrote {count} reports to {self.file_path}")
        return count

    def find_all(self) -> List[VerificationReport]:
        """
        Read every report back.

        Returns:
            Reports in file order; unreadable lines are skipped
        """
        reports = []
        try:
            with open(self.file_path, 'r', encoding='utf-8') as f:
                for number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        reports.append(VerificationReport.from_dict(json.loads(line)))
                    except (json.JSONDecodeError, KeyError, ValueError) as e:
                        self.logger.warning(f"Skipping malformed report on line {number} of {self.file_path}: {e}")
        except FileNotFoundError:
            return []
        return reports

    def clear(self) -> None:
        try:
            os.remove(self.file_path)
        except FileNotFoundError:
            pass

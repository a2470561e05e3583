# dotgraph/domain/port/repository/report_repository.py
from abc import ABC, abstractmethod
from typing import Iterable, List

from dotgraph.domain.model.prediction import VerificationReport


class ReportRepository(ABC):
    """
    Port (interface) for persisting verification reports.

    Reports are stored in the order they are saved; implementations must
    preserve that order when reading them back.
    """

    @abstractmethod
    def save(self, report: VerificationReport) -> VerificationReport:
        """
        Append one report.

        Args:
            report: The report to store

        Returns:
            The stored report
        """
        pass

    @abstractmethod
    def save_all(self, reports: Iterable[VerificationReport]) -> int:
        """
        Append several reports in order.

        Args:
            reports: Reports to store

        Returns:
            Number of reports written
        """
        pass

    @abstractmethod
    def find_all(self) -> List[VerificationReport]:
        """
        Read back every stored report.

        Returns:
            Reports in the order they were saved
        """
        pass

    @abstractmethod
    def clear(self) -> None:
        """Remove every stored report."""
        pass

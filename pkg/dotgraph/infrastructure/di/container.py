from typing import Any, Dict, Optional

from dotgraph.domain.port.repository.report_repository import ReportRepository
from dotgraph.domain.port.service.graph_exporter import GraphExporter
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder

from dotgraph.infrastructure.repository.jsonl_report_repository import JsonlReportRepository
from dotgraph.infrastructure.service.dot_exporter import DotExporter

from dotgraph.application.service.graph_service import GraphService
from dotgraph.application.service.reference_audit_service import ReferenceAuditService
from dotgraph.application.service.verification_service import VerificationService

from dotgraph.infrastructure.config import Config


class Container:
    """
    Dependency Injection Container for the application.
    This class is responsible for creating and providing all application components
    and managing their dependencies.
    """

    def __init__(self, config: Config, report_path: Optional[str] = None):
        """
        Initialize the container with configuration.

        Args:
            config: Application configuration
            report_path: JSON-lines file that verification reports are appended to;
                reports are not stored when None
        """
        self.config = config
        self.report_path = report_path
        self._instances: Dict[str, Any] = {}

    def get_graph_builder(self) -> DotGraphBuilder:
        """Get the graph builder instance."""
        if "graph_builder" not in self._instances:
            self._instances["graph_builder"] = DotGraphBuilder(
                vertex_cap=self.config.VERTEX_CAP,
                block_size=self.config.BLOCK_SIZE
            )
        return self._instances["graph_builder"]

    def get_graph_exporter(self) -> GraphExporter:
        """Get the DOT exporter instance."""
        if "graph_exporter" not in self._instances:
            self._instances["graph_exporter"] = DotExporter()
        return self._instances["graph_exporter"]

    def get_report_repository(self) -> Optional[ReportRepository]:
        """Get the report repository instance, or None when reports are not stored."""
        if self.report_path is None:
            return None
        if "report_repository" not in self._instances:
            self._instances["report_repository"] = JsonlReportRepository(
                file_path=self.config.output_path(self.report_path)
            )
        return self._instances["report_repository"]

    def get_graph_service(self) -> GraphService:
        """Get the graph service instance."""
        if "graph_service" not in self._instances:
            self._instances["graph_service"] = GraphService(
                builder=self.get_graph_builder(),
                exporter=self.get_graph_exporter()
            )
        return self._instances["graph_service"]

    def get_verification_service(self) -> VerificationService:
        """Get the verification service instance."""
        if "verification_service" not in self._instances:
            self._instances["verification_service"] = VerificationService(
                graph_service=self.get_graph_service(),
                report_repository=self.get_report_repository()
            )
        return self._instances["verification_service"]

    def get_reference_audit_service(self) -> ReferenceAuditService:
        """Get the reference audit service instance."""
        if "reference_audit_service" not in self._instances:
            self._instances["reference_audit_service"] = ReferenceAuditService(
                graph_service=self.get_graph_service()
            )
        return self._instances["reference_audit_service"]

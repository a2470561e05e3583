# dotgraph/application/service/reference_audit_service.py
import logging
from typing import List, Optional, Sequence

from dotgraph.application.dto.graph_dto import AuditEntryDTO
from dotgraph.application.service.graph_service import GraphService
from dotgraph.domain.model.errors import InapplicablePredictionError
from dotgraph.domain.model.graph import Signature
from dotgraph.domain.model.prediction import GraphKind, Prediction
from dotgraph.domain.model.ring import RingSpec
from dotgraph.domain.service import graph_analysis
from dotgraph.domain.service import structure_predictions as predictions
from dotgraph.domain.service.reference_catalog import REFERENCE_ENTRIES, ReferenceEntry


class ReferenceAuditService:
    """
    Application service that recomputes hand-reported decompositions.

    Each entry is compared with the closed-form prediction, which is
    authoritative, and with the reported signature; reported signatures
    that brute force contradicts are flagged, not corrected.
    """

    def __init__(self, graph_service: GraphService, entries: Optional[Sequence[ReferenceEntry]] = None):
        """
        Initialize the service with dependencies.

        Args:
            graph_service: Service used to build and expand graphs
            entries: Reference entries to audit (the built-in catalogue by default)
        """
        self.graph_service = graph_service
        self.entries = list(entries) if entries is not None else list(REFERENCE_ENTRIES)
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _unit_prediction(ring: RingSpec) -> Prediction:
        if ring.is_field:
            return predictions.predict_field_graphs(ring.characteristic, ring.degree)[GraphKind.UD]
        return predictions.predict_ud_zn(ring.characteristic)

    def _prediction(self, ring: RingSpec, kind: GraphKind) -> Prediction:
        if kind is GraphKind.UD:
            return self._unit_prediction(ring)
        if kind.is_quotient:
            return predictions.predict_equivalence(kind, ring)
        raise InapplicablePredictionError(f"reference entries cover UD and EUD graphs, got {kind.value}")

    def audit_entry(self, entry: ReferenceEntry) -> AuditEntryDTO:
        """
        Recompute one reference decomposition.

        Args:
            entry: The reference entry

        Returns:
            DTO with predicted, observed and reported signatures
        """
        ring = self.graph_service.resolve_ring(entry.ring)
        graph = self.graph_service.build(ring, entry.graph_kind)
        observed = graph_analysis.signature(graph)
        predicted = self._prediction(ring, entry.graph_kind).expected
        assert isinstance(predicted, Signature)

        result = AuditEntryDTO(
            key=entry.key,
            ring=ring.label,
            graph=entry.graph_kind.value,
            description=entry.description,
            predicted=predicted,
            observed=observed,
            reported=entry.reported,
            matches_prediction=observed == predicted,
            matches_reported=observed == entry.reported,
        )
        if not result.matches_reported:
            result.notes.append(f"reported {entry.reported} disagrees with brute force {observed}")

        if entry.graph_kind.is_quotient:
            expanded = self.graph_service.expand(graph, ring)
            result.observed_expansion = graph_analysis.signature(expanded)
            expansion_prediction = self._unit_prediction(ring) if entry.graph_kind is GraphKind.EUD else None
            result.predicted_expansion = expansion_prediction.expected if expansion_prediction else None
            result.reported_expansion = entry.reported_expansion
            if not result.expansion_matches_reported:
                result.notes.append(
                    f"reported expansion {entry.reported_expansion} disagrees with brute force {result.observed_expansion}"
                )

        if result.reported_inconsistent:
            self.logger.warning(f"{entry.key}: {'; '.join(result.notes)}")
        if not result.consistent:
            self.logger.error(f"{entry.key}: brute force {observed} contradicts prediction {predicted}")
        else:
            self.logger.info(f"{entry.key}: {observed} matches prediction")
        return result

    def audit_all(self) -> List[AuditEntryDTO]:
        return [self.audit_entry(entry) for entry in self.entries]

# dotgraph/application/service/verification_service.py
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from dotgraph.application.service.graph_service import GraphService
from dotgraph.domain.model.errors import InapplicablePredictionError, InvalidParameterError
from dotgraph.domain.model.graph import ComponentShape
from dotgraph.domain.model.prediction import (
    Expected,
    GraphKind,
    Prediction,
    TheoremId,
    VerificationReport,
)
from dotgraph.domain.model.ring import RingKind, RingSpec
from dotgraph.domain.port.repository.report_repository import ReportRepository
from dotgraph.domain.service import graph_analysis
from dotgraph.domain.service import structure_predictions as predictions
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.domain.service.number_theory import prime_power, sqrt_of_minus_one
from dotgraph.domain.service.ring_factory import make_field, make_modular_ring

Observation = Tuple[Expected, Tuple[str, ...]]


class VerificationService:
    """
    Application service that checks closed-form predictions against
    brute-force graphs.

    Signature predictions are checked by building the target graph and
    comparing signatures; property predictions each have a dedicated
    observer. Every report is logged and, when a repository is attached,
    stored.
    """

    def __init__(self, graph_service: GraphService, report_repository: Optional[ReportRepository] = None):
        """
        Initialize the service with dependencies.

        Args:
            graph_service: Service used to build target graphs
            report_repository: Optional store for every produced report
        """
        self.graph_service = graph_service
        self.report_repository = report_repository
        self.logger = logging.getLogger(__name__)
        self._observers: Dict[TheoremId, Callable[[Prediction, RingSpec], Observation]] = {
            TheoremId.ODD_ARITY_UD_EDGELESS: self._observe_edgeless,
            TheoremId.HALF_VECTOR_CENTER: self._observe_center,
            TheoremId.TD_CONNECTIVITY: self._observe_connectivity,
            TheoremId.SQRT_MINUS_ONE_COUNT: self._observe_sqrt_count,
            TheoremId.QUOTIENT_ROUND_TRIP: self._observe_round_trip,
            TheoremId.ZD_EQUALS_GAMMA: self._observe_zd_gamma,
        }

    @property
    def builder(self) -> DotGraphBuilder:
        return self.graph_service.builder

    # Verification

    def verify(self, prediction: Prediction, ring: RingSpec) -> VerificationReport:
        """
        Check one prediction against the brute-force graph.

        Args:
            prediction: The prediction to check
            ring: The base ring the prediction describes

        Returns:
            Report with predicted and observed values

        Raises:
            InapplicablePredictionError: If the prediction describes another ring
            VertexCapExceededError: If the target graph exceeds the vertex cap
        """
        if prediction.ring_label != ring.label:
            raise InapplicablePredictionError(
                f"{prediction.theorem.value} describes {prediction.ring_label}, not {ring.label}"
            )

        observer = self._observers.get(prediction.theorem)
        if observer is not None:
            observed, notes = observer(prediction, ring)
        else:
            graph = self.graph_service.build(ring, prediction.graph_kind, prediction.arity)
            observed, notes = graph_analysis.signature(graph), ()

        report = VerificationReport.compare(
            theorem=prediction.theorem,
            params=prediction.param_dict,
            predicted=prediction.expected,
            observed=observed,
            notes=notes,
        )
        if prediction.theorem is TheoremId.SQRT_MINUS_ONE_COUNT:
            report = self._cross_check_sqrt(report, ring)
        self._record(report)
        return report

    def verify_all(self, ring: RingSpec, kind: GraphKind, k: int = 2) -> List[VerificationReport]:
        """
        Check every prediction that applies to one parameter set.

        Raises:
            InapplicablePredictionError: If no prediction applies
        """
        applicable = predictions.predictions_for(ring, kind, k)
        if not applicable:
            raise InapplicablePredictionError(f"no prediction applies to {kind.value} over {ring.label}^{k}")
        return [self.verify(prediction, ring) for prediction in applicable]

    def _record(self, report: VerificationReport) -> None:
        if report.match:
            self.logger.info(report.summary())
        else:
            self.logger.warning(report.summary())
        self._store(report)

    def _store(self, report: VerificationReport) -> None:
        if self.report_repository is not None:
            self.report_repository.save(report)

    # Property checks

    def check_totally_disconnected(self, n: int, k: int) -> VerificationReport:
        return self.verify(predictions.predict_ud_edgeless(n, k), make_modular_ring(n))

    def check_center_vertex(self, n: int) -> VerificationReport:
        return self.verify(predictions.predict_center_vertex(n), make_modular_ring(n))

    def check_td_connectivity(self, n: int) -> VerificationReport:
        return self.verify(predictions.predict_td_connectivity(n), make_modular_ring(n))

    def check_sqrt_count(self, n: int) -> VerificationReport:
        return self.verify(predictions.predict_sqrt_count(n), make_modular_ring(n))

    def check_round_trip(self, ring: RingSpec, kind: GraphKind = GraphKind.EUD) -> VerificationReport:
        return self.verify(predictions.predict_round_trip(ring, kind), ring)

    def check_zd_gamma(self, ring: RingSpec) -> VerificationReport:
        return self.verify(predictions.predict_zd_equals_gamma(ring), ring)

    def _observe_edgeless(self, prediction: Prediction, ring: RingSpec) -> Observation:
        graph = self.builder.build_ud(ring, prediction.arity)
        return graph_analysis.is_totally_disconnected(graph), (f"{graph.vertex_count} vertices",)

    def _observe_center(self, prediction: Prediction, ring: RingSpec) -> Observation:
        n = ring.characteristic
        center = (n // 2, n // 2)
        unit_vectors = list(product(ring.units(), repeat=2))
        vertices = sorted(unit_vectors + [center])
        graph = self.builder.build_induced(ring, vertices, f"center({ring.label}^2)")
        degree = graph.degree(center)
        return degree == len(unit_vectors), (f"{ring.format_vector(center)} has {degree} of {len(unit_vectors)} unit neighbors",)

    def _observe_connectivity(self, prediction: Prediction, ring: RingSpec) -> Observation:
        graph = self.builder.build_td(ring, prediction.arity)
        components = len(graph_analysis.components(graph))
        return graph_analysis.is_connected(graph), (f"{components} components",)

    def _observe_sqrt_count(self, prediction: Prediction, ring: RingSpec) -> Observation:
        graph = self.builder.build_ud(ring, 2)
        m = len(ring.units())
        cliques = graph_analysis.signature(graph).count(ComponentShape.complete(m))
        return cliques, (f"{cliques} components K_{m}",)

    def _cross_check_sqrt(self, report: VerificationReport, ring: RingSpec) -> VerificationReport:
        roots = sqrt_of_minus_one(ring.characteristic)
        note = f"exhaustive search finds {len(roots)} square roots of -1: {roots}"
        if len(roots) == report.predicted == report.observed:
            return replace(report, notes=report.notes + (note,))
        return replace(
            report,
            match=False,
            mismatch_detail={"predicted": report.predicted, "observed": report.observed, "square_roots": len(roots)},
            notes=report.notes + (note,),
        )

    def _observe_round_trip(self, prediction: Prediction, ring: RingSpec) -> Observation:
        quotient = self.graph_service.build(ring, prediction.graph_kind)
        expanded = self.builder.expand_equivalence(quotient, ring)
        direct_kind = GraphKind.UD if prediction.graph_kind is GraphKind.EUD else GraphKind.ZD_MIXED
        direct = self.graph_service.build(ring, direct_kind)
        notes = (f"{quotient.vertex_count} classes expand to {expanded.vertex_count} vertices, {expanded.edge_count} edges",)
        return expanded.same_structure(direct), notes

    def _observe_zd_gamma(self, prediction: Prediction, ring: RingSpec) -> Observation:
        zd = self.builder.build_zd(ring, prediction.arity)
        gamma = self.builder.build_gamma(ring, prediction.arity)
        return zd.same_structure(gamma), (f"{zd.edge_count} edges in ZD, {gamma.edge_count} in Gamma",)

    # Sweeps

    def sweep(
        self,
        kind: GraphKind,
        lo: int,
        hi: int,
        family: RingKind = RingKind.MODULAR,
        k: int = 2,
        workers: int = 1,
    ) -> Iterator[VerificationReport]:
        """
        Verify the primary prediction for every parameter in lo..hi.

        For Z_n the parameter is n; for fields it is the order q, and values
        that are not prime powers are skipped. Reports come out in parameter
        order whatever the number of workers.

        Args:
            kind: Graph family
            lo: First parameter
            hi: Last parameter, inclusive
            family: Ring family swept over
            k: Arity
            workers: Worker processes; 1 runs in-process

        Yields:
            One report per parameter that has an applicable prediction
        """
        if lo > hi:
            raise InvalidParameterError(f"empty range {lo}..{hi}")
        rings = list(self._sweep_rings(family, lo, hi))
        self.logger.info(f"Sweeping {kind.value} over {len(rings)} rings with {workers} worker(s)")

        if workers <= 1:
            outcomes: Iterable[Optional[VerificationReport]] = (
                self._verify_primary(ring, kind, k) for ring in rings
            )
        else:
            jobs = [
                (str(ring.request), kind, k, self.builder.vertex_cap, self.builder.block_size)
                for ring in rings
            ]
            executor = ProcessPoolExecutor(max_workers=workers)
            outcomes = self._collect(executor, jobs)

        for report in outcomes:
            if report is not None:
                yield report

    def _collect(self, executor: ProcessPoolExecutor, jobs: list) -> Iterator[Optional[VerificationReport]]:
        with executor:
            for report in executor.map(_sweep_job, jobs):
                if report is not None:
                    self._store(report)
                yield report

    def _verify_primary(self, ring: RingSpec, kind: GraphKind, k: int) -> Optional[VerificationReport]:
        prediction = predictions.primary_prediction(ring, kind, k)
        if prediction is None:
            self.logger.debug(f"No prediction for {kind.value} over {ring.label}^{k}, skipped")
            return None
        return self.verify(prediction, ring)

    @staticmethod
    def _sweep_rings(family: RingKind, lo: int, hi: int) -> Iterator[RingSpec]:
        for value in range(max(lo, 2), hi + 1):
            if family is RingKind.MODULAR:
                yield make_modular_ring(value)
                continue
            split = prime_power(value)
            if split is not None:
                yield make_field(*split)


def _sweep_job(job: tuple) -> Optional[VerificationReport]:
    """Worker-process entry point: rebuild the services and verify one ring."""
    ring_text, kind, k, vertex_cap, block_size = job
    service = VerificationService(
        GraphService(DotGraphBuilder(vertex_cap=vertex_cap, block_size=block_size))
    )
    ring = service.graph_service.resolve_ring(ring_text)
    prediction = predictions.primary_prediction(ring, kind, k)
    if prediction is None:
        return None
    return service.verify(prediction, ring)

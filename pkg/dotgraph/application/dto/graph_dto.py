# dotgraph/application/dto/graph_dto.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dotgraph.domain.model.graph import Signature


@dataclass
class BuildResultDTO:
    """
    Data Transfer Object for a constructed graph and its decomposition.
    """
    name: str
    ring: str
    graph: str
    arity: int
    vertex_count: int
    edge_count: int
    signature: Signature
    connected: bool
    totally_disconnected: bool
    dot: Optional[str] = None

    @property
    def component_count(self) -> int:
        return self.signature.component_count

    def summary_lines(self) -> List[str]:
        """Human-readable lines: signature first, then connectivity."""
        lines = [str(self.signature), "connected" if self.connected else "disconnected"]
        if self.totally_disconnected and self.vertex_count > 1:
            lines.append("totally disconnected")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        result = {
            "name": self.name,
            "ring": self.ring,
            "graph": self.graph,
            "arity": self.arity,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "component_count": self.component_count,
            "signature": self.signature.to_list(),
            "signature_text": str(self.signature),
            "connected": self.connected,
            "totally_disconnected": self.totally_disconnected,
        }
        if self.dot is not None:
            result["dot"] = self.dot
        return result


@dataclass
class AuditEntryDTO:
    """
    Data Transfer Object for one audited reference decomposition.

    `matches_prediction` compares brute force with the closed-form
    prediction; `matches_reported` compares it with the reported text.
    """
    key: str
    ring: str
    graph: str
    description: str
    predicted: Signature
    observed: Signature
    reported: Signature
    matches_prediction: bool
    matches_reported: bool
    predicted_expansion: Optional[Signature] = None
    observed_expansion: Optional[Signature] = None
    reported_expansion: Optional[Signature] = None
    notes: List[str] = field(default_factory=list)

    @property
    def expansion_matches_prediction(self) -> bool:
        if self.observed_expansion is None or self.predicted_expansion is None:
            return True
        return self.observed_expansion == self.predicted_expansion

    @property
    def expansion_matches_reported(self) -> bool:
        if self.reported_expansion is None:
            return True
        return self.observed_expansion == self.reported_expansion

    @property
    def consistent(self) -> bool:
        """Observation agrees with the prediction, at vertex level too when expanded."""
        return self.matches_prediction and self.expansion_matches_prediction

    @property
    def reported_inconsistent(self) -> bool:
        return not (self.matches_reported and self.expansion_matches_reported)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        result: Dict[str, Any] = {
            "key": self.key,
            "ring": self.ring,
            "graph": self.graph,
            "description": self.description,
            "predicted": self.predicted.to_list(),
            "observed": self.observed.to_list(),
            "reported": self.reported.to_list(),
            "matches_prediction": self.matches_prediction,
            "matches_reported": self.matches_reported,
        }
        if self.observed_expansion is not None:
            result["expansion"] = {
                "predicted": self.predicted_expansion.to_list() if self.predicted_expansion else None,
                "observed": self.observed_expansion.to_list(),
                "reported": self.reported_expansion.to_list() if self.reported_expansion else None,
                "matches_prediction": self.expansion_matches_prediction,
                "matches_reported": self.expansion_matches_reported,
            }
        if self.notes:
            result["notes"] = list(self.notes)
        return result

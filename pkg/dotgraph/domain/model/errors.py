# dotgraph/domain/model/errors.py
from typing import Optional


class DotGraphError(Exception):
    """Base class for every error raised by the dotgraph domain."""


class InvalidParameterError(DotGraphError, ValueError):
    """A ring, graph or sweep parameter violates its precondition."""


class InapplicablePredictionError(InvalidParameterError):
    """A prediction was asked to verify a ring or graph it does not describe."""


class VertexCapExceededError(DotGraphError):
    """
    Raised before construction when a graph would exceed the vertex cap.
    """

    def __init__(self, vertex_count: int, cap: int, graph_name: Optional[str] = None):
        self.vertex_count = vertex_count
        self.cap = cap
        self.graph_name = graph_name
        target = f"{graph_name} " if graph_name else ""
        super().__init__(
            f"graph {target}would have {vertex_count} vertices, above the cap of {cap}"
        )

    def __reduce__(self):
        # Sweep workers send this back to the parent process.
        return type(self), (self.vertex_count, self.cap, self.graph_name)


class MembershipMissingError(DotGraphError):
    """A quotient vertex carries no class membership to expand."""


class QuotientSoundnessError(DotGraphError):
    """Two scalar classes are only partially orthogonal."""

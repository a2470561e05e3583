# dotgraph/domain/model/equivalence.py
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from dotgraph.domain.model.ring import RingSpec, Vector


@dataclass(frozen=True)
class EquivClass:
    """
    Orbit {(u, ..., u) x : u a unit} of a vector under diagonal unit scaling.

    The representative is the member whose first unit coordinate is 1:
    (1, a) for orbits of vectors with a unit first coordinate and (a, 1) for
    orbits whose first unit coordinate is the second one.
    """

    representative: Vector
    members: Tuple[Vector, ...]
    self_orthogonal: bool = False

    @property
    def size(self) -> int:
        return len(self.members)

    def label(self, ring: RingSpec) -> str:
        return f"[{ring.format_vector(self.representative)}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "representative": list(self.representative),
            "members": [list(m) for m in self.members],
            "self_orthogonal": self.self_orthogonal,
        }

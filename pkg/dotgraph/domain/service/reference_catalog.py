# dotgraph/domain/service/reference_catalog.py
"""
Reference decompositions as they were originally reported by hand.

The reported signatures are kept verbatim, including ones that do not
survive a brute-force check; the audit decides which of them hold.
"""
from dataclasses import dataclass
from typing import List, Optional

from dotgraph.domain.model.graph import ComponentShape, Signature
from dotgraph.domain.model.prediction import GraphKind

K = ComponentShape.complete
KB = ComponentShape.complete_bipartite


@dataclass(frozen=True)
class ReferenceEntry:
    """
    One hand-computed decomposition.

    Attributes:
        key: Stable identifier
        ring: Ring text accepted by make_ring
        graph_kind: Graph family
        reported: Decomposition as reported
        reported_expansion: For quotient graphs, the reported decomposition of the expanded graph
        description: Short human-readable statement
    """

    key: str
    ring: str
    graph_kind: GraphKind
    reported: Signature
    reported_expansion: Optional[Signature] = None
    description: str = ""


REFERENCE_ENTRIES: List[ReferenceEntry] = [
    ReferenceEntry(
        key="gf4_ud",
        ring="gf:2:2",
        graph_kind=GraphKind.UD,
        reported=Signature.of((K(3), 1), (KB(3, 3), 1)),
        description="UD(GF(4) x GF(4)) is one K_3 and one K_{3,3}",
    ),
    ReferenceEntry(
        key="z5_ud",
        ring="zn:5",
        graph_kind=GraphKind.UD,
        reported=Signature.of((K(4), 2), (KB(4, 4), 1)),
        description="UD(Z_5 x Z_5) is two K_4 and one K_{4,4}",
    ),
    ReferenceEntry(
        key="z8_ud",
        ring="zn:8",
        graph_kind=GraphKind.UD,
        reported=Signature.of((KB(4, 4), 2)),
        description="UD(Z_8 x Z_8) is two K_{4,4}",
    ),
    ReferenceEntry(
        key="z10_ud",
        ring="zn:10",
        graph_kind=GraphKind.UD,
        reported=Signature.of((K(4), 2), (KB(4, 4), 1)),
        description="UD(Z_10 x Z_10) is two K_4 and one K_{4,4}",
    ),
    ReferenceEntry(
        key="z20_eud",
        ring="zn:20",
        graph_kind=GraphKind.EUD,
        reported=Signature.of((KB(1, 1), 4)),
        reported_expansion=Signature.of((KB(8, 8), 4)),
        description="EUD(Z_20 x Z_20) is four K_{1,1}; UD is four K_{8,8}",
    ),
    ReferenceEntry(
        key="z34_eud",
        ring="zn:34",
        graph_kind=GraphKind.EUD,
        reported=Signature.of((KB(1, 1), 7), (K(1), 2)),
        reported_expansion=Signature.of((KB(16, 16), 7), (K(8), 2)),
        description="EUD(Z_34 x Z_34) is seven K_{1,1} and two K_1; UD reported as seven K_{16,16} and two K_8",
    ),
]


def find_entry(key: str) -> Optional[ReferenceEntry]:
    for entry in REFERENCE_ENTRIES:
        if entry.key == key:
            return entry
    return None

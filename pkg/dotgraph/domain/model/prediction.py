# dotgraph/domain/model/prediction.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.graph import Signature


class GraphKind(str, Enum):
    """Graph families; values are the command-line spellings."""

    TD = "td"
    ZD = "zd"
    UD = "ud"
    ZD_MIXED = "zdr1r2"
    EUD = "eud"
    EZD_MIXED = "ezdr1r2"
    GAMMA = "gamma"

    @property
    def is_quotient(self) -> bool:
        return self in (GraphKind.EUD, GraphKind.EZD_MIXED)

    @property
    def needs_modular_ring(self) -> bool:
        return self in (GraphKind.ZD_MIXED, GraphKind.EZD_MIXED)


class TheoremId(str, Enum):
    """Structural statements checked against brute-force graphs."""

    EVEN_FIELD_ZD = "even_field_zd"
    EVEN_FIELD_UD = "even_field_ud"
    EVEN_FIELD_TD = "even_field_td"
    ODD_FIELD_ZD = "odd_field_zd"
    ODD_FIELD_UD = "odd_field_ud"
    ODD_FIELD_TD = "odd_field_td"
    PRIME_MODULUS = "prime_modulus"
    MODULAR_UD = "modular_ud"
    ODD_ARITY_UD_EDGELESS = "odd_arity_ud_edgeless"
    HALF_VECTOR_CENTER = "half_vector_center"
    MIXED_ZD = "mixed_zd"
    EVEN_FIELD_EUD = "even_field_eud"
    ODD_FIELD_EUD = "odd_field_eud"
    MODULAR_EUD = "modular_eud"
    MIXED_EZD = "mixed_ezd"
    ZD_EQUALS_GAMMA = "zd_equals_gamma"
    TD_CONNECTIVITY = "td_connectivity"
    SQRT_MINUS_ONE_COUNT = "sqrt_minus_one_count"
    QUOTIENT_ROUND_TRIP = "quotient_round_trip"


Expected = Union[Signature, bool, int]


@dataclass(frozen=True)
class Prediction:
    """
    Expected structure of one graph, derived from a closed-form statement.

    `expected` is a Signature for decompositions; property checks (edgeless,
    connected, ...) carry a bool or an int together with `property_name`.
    For signatures the expected vertex total must equal `vertex_count`.
    """

    theorem: TheoremId
    graph_kind: GraphKind
    ring_label: str
    expected: Expected
    vertex_count: int
    arity: int = 2
    params: Tuple[Tuple[str, int], ...] = ()
    property_name: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.expected, Signature) and self.expected.vertex_count != self.vertex_count:
            raise InvalidParameterError(
                f"{self.theorem.value}: predicted shapes cover {self.expected.vertex_count} "
                f"vertices but {self.ring_label} gives {self.vertex_count}"
            )

    @property
    def is_property(self) -> bool:
        return self.property_name is not None

    @property
    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "graph": self.graph_kind.value,
            "ring": self.ring_label,
            "arity": self.arity,
            "params": self.param_dict,
            "expected": _serialize(self.expected),
            "vertex_count": self.vertex_count,
        }


def _serialize(value: Any) -> Any:
    if isinstance(value, Signature):
        return value.to_list()
    return value


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of checking one prediction against a brute-force graph.
    """

    theorem: TheoremId
    params: Dict[str, Any]
    predicted: Expected
    observed: Expected
    match: bool
    mismatch_detail: Optional[Dict[str, Any]] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def compare(
        cls,
        theorem: TheoremId,
        params: Dict[str, Any],
        predicted: Expected,
        observed: Expected,
        notes: Tuple[str, ...] = (),
    ) -> 'VerificationReport':
        """
        Compare normalised prediction and observation.

        Signatures are already in normal form (K_{1,1} as K_2, K_1 as a
        single vertex), so equality is structural.
        """
        match = predicted == observed
        detail = None
        if not match:
            if isinstance(predicted, Signature) and isinstance(observed, Signature):
                detail = {
                    shape: {"predicted": exp, "observed": obs}
                    for shape, (exp, obs) in predicted.diff(observed).items()
                }
            else:
                detail = {"predicted": _serialize(predicted), "observed": _serialize(observed)}
        return cls(
            theorem=theorem,
            params=params,
            predicted=predicted,
            observed=observed,
            match=match,
            mismatch_detail=detail,
            notes=tuple(notes),
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "theorem": self.theorem.value,
            "params": self.params,
            "predicted": _serialize(self.predicted),
            "observed": _serialize(self.observed),
            "match": self.match,
        }
        if self.mismatch_detail is not None:
            data["mismatch_detail"] = self.mismatch_detail
        if self.notes:
            data["notes"] = list(self.notes)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        def _restore(value: Any) -> Any:
            if isinstance(value, list):
                return Signature.from_list(value)
            return value

        return cls(
            theorem=TheoremId(data["theorem"]),
            params=data.get("params", {}),
            predicted=_restore(data.get("predicted")),
            observed=_restore(data.get("observed")),
            match=bool(data.get("match")),
            mismatch_detail=data.get("mismatch_detail"),
            notes=tuple(data.get("notes", [])),
        )

    def summary(self) -> str:
        status = "match" if self.match else "MISMATCH"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.theorem.value}({params}): {status}; predicted {_text(self.predicted)}, observed {_text(self.observed)}"


def _text(value: Any) -> str:
    return str(value)

# dotgraph/domain/service/structure_predictions.py
"""
Closed-form decompositions of dot product graphs.

Every function returns a Prediction whose expected Signature (or property
value) is computed from counts of cliques K_m and bicliques K_{m,m}, never
from a constructed graph. Quotient predictions use the same counts with
K_m replaced by K_1 and K_{m,m} by K_{1,1}, which normalises to K_2.
"""
from typing import Dict, List, Optional

from dotgraph.domain.model.errors import InapplicablePredictionError, InvalidParameterError
from dotgraph.domain.model.graph import ComponentShape, Signature
from dotgraph.domain.model.prediction import GraphKind, Prediction, TheoremId
from dotgraph.domain.model.ring import RingKind, RingSpec
from dotgraph.domain.service.number_theory import (
    expected_sqrt_of_minus_one_count,
    factorize,
    is_prime,
    totient,
)

_FIELD_IDS = {
    True: {
        GraphKind.ZD: TheoremId.EVEN_FIELD_ZD,
        GraphKind.UD: TheoremId.EVEN_FIELD_UD,
        GraphKind.TD: TheoremId.EVEN_FIELD_TD,
        GraphKind.EUD: TheoremId.EVEN_FIELD_EUD,
    },
    False: {
        GraphKind.ZD: TheoremId.ODD_FIELD_ZD,
        GraphKind.UD: TheoremId.ODD_FIELD_UD,
        GraphKind.TD: TheoremId.ODD_FIELD_TD,
        GraphKind.EUD: TheoremId.ODD_FIELD_EUD,
    },
}


def _decomposition(m: int, cliques: int, bicliques: int, quotient: bool = False) -> Signature:
    """cliques x K_m plus bicliques x K_{m,m}, or their quotient images."""
    size = 1 if quotient else m
    return Signature.of(
        (ComponentShape.complete(size), cliques),
        (ComponentShape.complete_bipartite(size, size), bicliques),
    )


def _field_counts(p: int, d: int) -> Dict[GraphKind, tuple]:
    """(cliques, bicliques) of ZD, UD and TD over GF(p^d)^2."""
    m = p ** d - 1
    if p == 2:
        half = 2 ** (d - 1)
        return {
            GraphKind.ZD: (0, 1),
            GraphKind.UD: (1, half - 1),
            GraphKind.TD: (1, half),
        }
    if m % 4:
        return {
            GraphKind.ZD: (0, 1),
            GraphKind.UD: (0, m // 2),
            GraphKind.TD: (0, (m + 2) // 2),
        }
    return {
        GraphKind.ZD: (0, 1),
        GraphKind.UD: (2, (m - 2) // 2),
        GraphKind.TD: (2, m // 2),
    }


def _field_vertex_counts(m: int) -> Dict[GraphKind, int]:
    return {GraphKind.ZD: 2 * m, GraphKind.UD: m * m, GraphKind.TD: m * m + 2 * m}


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidParameterError(f"p must be prime, got {p}")


def predict_field_graphs(p: int, d: int = 1, ring_label: Optional[str] = None) -> Dict[GraphKind, Prediction]:
    """
    Predicted ZD, UD and TD decompositions over GF(p^d) x GF(p^d).

    Args:
        p: Prime characteristic
        d: Extension degree >= 1
        ring_label: Label of the ring the predictions refer to (GF(p^d) by default)

    Returns:
        Mapping graph kind -> prediction
    """
    _require_prime(p)
    if d < 1:
        raise InvalidParameterError(f"field degree must be >= 1, got {d}")
    m = p ** d - 1
    label = ring_label or f"GF({p ** d})"
    ids = _FIELD_IDS[p == 2]
    vertex_counts = _field_vertex_counts(m)
    return {
        kind: Prediction(
            theorem=ids[kind],
            graph_kind=kind,
            ring_label=label,
            expected=_decomposition(m, cliques, bicliques),
            vertex_count=vertex_counts[kind],
            params=(("p", p), ("d", d), ("m", m)),
        )
        for kind, (cliques, bicliques) in _field_counts(p, d).items()
    }


def predict_prime_modulus(p: int) -> Dict[GraphKind, Prediction]:
    """ZD, UD and TD over Z_p x Z_p, the degree-one case of the field formulas."""
    _require_prime(p)
    m = p - 1
    vertex_counts = _field_vertex_counts(m)
    return {
        kind: Prediction(
            theorem=TheoremId.PRIME_MODULUS,
            graph_kind=kind,
            ring_label=f"Z_{p}",
            expected=_decomposition(m, cliques, bicliques),
            vertex_count=vertex_counts[kind],
            params=(("n", p), ("m", m)),
        )
        for kind, (cliques, bicliques) in _field_counts(p, 1).items()
    }


def _modular_ud_counts(n: int) -> tuple:
    """(cliques, bicliques) of UD(Z_n x Z_n) by the case analysis on n."""
    m = totient(n)
    f = factorize(n)
    if n % 4 == 0 or any(p % 4 != 1 for p in f.odd_primes):
        return 0, m // 2
    if n % 2 == 0:
        return 2 ** (f.r - 1), m // 2 - 2 ** (f.r - 2)
    return 2 ** f.r, m // 2 - 2 ** (f.r - 1)


def _require_modulus_at_least_three(n: int) -> None:
    if n < 3:
        raise InapplicablePredictionError(f"the Z_n unit graph formula needs n >= 3, got {n}")


def predict_ud_zn(n: int) -> Prediction:
    """
    Predicted decomposition of UD(Z_n x Z_n), n >= 3.

    With m = phi(n) and r distinct primes: m/2 copies of K_{m,m} when 4 | n
    or an odd prime factor is 3 mod 4; otherwise 2^(r-1) (n even) or 2^r
    (n odd) copies of K_m and the remaining units paired into K_{m,m}.
    """
    _require_modulus_at_least_three(n)
    m = totient(n)
    cliques, bicliques = _modular_ud_counts(n)
    return Prediction(
        theorem=TheoremId.MODULAR_UD,
        graph_kind=GraphKind.UD,
        ring_label=f"Z_{n}",
        expected=_decomposition(m, cliques, bicliques),
        vertex_count=m * m,
        params=(("n", n), ("m", m), ("r", factorize(n).r)),
    )


def predict_zd_mixed(n: int) -> Prediction:
    """
    Predicted decomposition of the mixed unit/zero-divisor subgraph of ZD(Z_n x Z_n).

    Prime n gives a single K_{n-1,n-1}; composite n gives (n - m) copies of K_{m,m}.
    """
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    m = totient(n)
    return Prediction(
        theorem=TheoremId.MIXED_ZD,
        graph_kind=GraphKind.ZD_MIXED,
        ring_label=f"Z_{n}",
        expected=_decomposition(m, 0, n - m),
        vertex_count=2 * m * (n - m),
        params=(("n", n), ("m", m)),
    )


def predict_eud_field(p: int, d: int = 1, ring_label: Optional[str] = None) -> Prediction:
    ud = predict_field_graphs(p, d, ring_label)[GraphKind.UD]
    cliques, bicliques = _field_counts(p, d)[GraphKind.UD]
    m = p ** d - 1
    return Prediction(
        theorem=_FIELD_IDS[p == 2][GraphKind.EUD],
        graph_kind=GraphKind.EUD,
        ring_label=ud.ring_label,
        expected=_decomposition(m, cliques, bicliques, quotient=True),
        vertex_count=m,
        params=ud.params,
    )


def predict_eud_zn(n: int) -> Prediction:
    _require_modulus_at_least_three(n)
    m = totient(n)
    cliques, bicliques = _modular_ud_counts(n)
    return Prediction(
        theorem=TheoremId.MODULAR_EUD,
        graph_kind=GraphKind.EUD,
        ring_label=f"Z_{n}",
        expected=_decomposition(m, cliques, bicliques, quotient=True),
        vertex_count=m,
        params=(("n", n), ("m", m), ("r", factorize(n).r)),
    )


def predict_ezd_mixed(n: int) -> Prediction:
    """One K_{1,1} for prime n, (n - m) copies for composite n."""
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    m = totient(n)
    return Prediction(
        theorem=TheoremId.MIXED_EZD,
        graph_kind=GraphKind.EZD_MIXED,
        ring_label=f"Z_{n}",
        expected=_decomposition(m, 0, n - m, quotient=True),
        vertex_count=2 * (n - m),
        params=(("n", n), ("m", m)),
    )


def predict_equivalence(kind: GraphKind, ring: RingSpec) -> Prediction:
    """
    Quotient prediction for EUD over a field or Z_n, or EZD over Z_n.

    Raises:
        InapplicablePredictionError: For other graph kinds or ring families
    """
    if kind is GraphKind.EUD and ring.is_field:
        return predict_eud_field(ring.characteristic, ring.degree)
    if kind is GraphKind.EUD:
        return predict_eud_zn(ring.characteristic)
    if kind is GraphKind.EZD_MIXED and not ring.is_field:
        return predict_ezd_mixed(ring.characteristic)
    raise InapplicablePredictionError(f"no quotient prediction for {kind.value} over {ring.label}")


# Property predictions


def predict_ud_edgeless(n: int, k: int) -> Prediction:
    """UD(Z_n^k) has no edges for even n >= 4 and odd k."""
    if n < 4 or n % 2 or k < 1 or k % 2 == 0:
        raise InapplicablePredictionError(f"edgeless unit graph needs even n >= 4 and odd k, got n={n}, k={k}")
    m = totient(n)
    return Prediction(
        theorem=TheoremId.ODD_ARITY_UD_EDGELESS,
        graph_kind=GraphKind.UD,
        ring_label=f"Z_{n}",
        expected=True,
        vertex_count=m ** k,
        arity=k,
        params=(("n", n), ("k", k)),
        property_name="totally_disconnected",
    )


def predict_center_vertex(n: int) -> Prediction:
    """(n/2, n/2) is orthogonal to every unit vector of Z_n x Z_n for even n >= 4."""
    if n < 4 or n % 2:
        raise InapplicablePredictionError(f"center vertex check needs even n >= 4, got {n}")
    m = totient(n)
    return Prediction(
        theorem=TheoremId.HALF_VECTOR_CENTER,
        graph_kind=GraphKind.ZD,
        ring_label=f"Z_{n}",
        expected=True,
        vertex_count=m * m + 1,
        params=(("n", n), ("m", m)),
        property_name="center_adjacent_to_all_units",
    )


def predict_td_connectivity(n: int) -> Prediction:
    """TD(Z_n x Z_n) is connected exactly when n is composite."""
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    return Prediction(
        theorem=TheoremId.TD_CONNECTIVITY,
        graph_kind=GraphKind.TD,
        ring_label=f"Z_{n}",
        expected=not is_prime(n),
        vertex_count=n * n - 1,
        params=(("n", n),),
        property_name="connected",
    )


def predict_sqrt_count(n: int) -> Prediction:
    """The number of K_phi(n) components of UD(Z_n x Z_n) equals the count of square roots of -1."""
    _require_modulus_at_least_three(n)
    m = totient(n)
    return Prediction(
        theorem=TheoremId.SQRT_MINUS_ONE_COUNT,
        graph_kind=GraphKind.UD,
        ring_label=f"Z_{n}",
        expected=expected_sqrt_of_minus_one_count(n),
        vertex_count=m * m,
        params=(("n", n), ("m", m), ("r", factorize(n).r)),
        property_name="complete_components",
    )


def predict_round_trip(ring: RingSpec, kind: GraphKind = GraphKind.EUD) -> Prediction:
    """Expanding the quotient graph reproduces the vertex-level graph."""
    if kind not in (GraphKind.EUD, GraphKind.EZD_MIXED):
        raise InapplicablePredictionError(f"round trip needs a quotient graph, got {kind.value}")
    if kind is GraphKind.EZD_MIXED and ring.is_field:
        raise InapplicablePredictionError(f"{kind.value} needs Z_n, got {ring.label}")
    units = len(ring.units())
    if kind is GraphKind.EUD:
        vertex_count = units * units
    else:
        vertex_count = 2 * units * (ring.order - units)
    return Prediction(
        theorem=TheoremId.QUOTIENT_ROUND_TRIP,
        graph_kind=kind,
        ring_label=ring.label,
        expected=True,
        vertex_count=vertex_count,
        params=_ring_params(ring),
        property_name="round_trip",
    )


def predict_zd_equals_gamma(ring: RingSpec, k: int = 2) -> Prediction:
    """Over a field, ZD(A^k) and the zero-divisor graph of A^k coincide for k = 2."""
    if k != 2 or not (ring.is_field or is_prime(ring.characteristic)):
        raise InapplicablePredictionError(f"ZD = Gamma is claimed for A x A over a field, got {ring.label}^{k}")
    m = ring.order - 1
    return Prediction(
        theorem=TheoremId.ZD_EQUALS_GAMMA,
        graph_kind=GraphKind.GAMMA,
        ring_label=ring.label,
        expected=True,
        vertex_count=2 * m,
        params=_ring_params(ring),
        property_name="zd_equals_gamma",
    )


def _ring_params(ring: RingSpec) -> tuple:
    if ring.is_field:
        return (("p", ring.characteristic), ("d", ring.degree))
    return (("n", ring.characteristic),)


# Dispatch


def predictions_for(ring: RingSpec, kind: GraphKind, k: int = 2) -> List[Prediction]:
    """
    All predictions that apply to one ring, graph kind and arity.

    Args:
        ring: Base ring A
        kind: Graph family
        k: Arity of R = A^k

    Returns:
        Applicable predictions, possibly empty
    """
    if kind.is_quotient and k != 2:
        raise InvalidParameterError(f"{kind.value} is defined for k = 2 only, got k = {k}")
    if kind.needs_modular_ring and ring.kind is not RingKind.MODULAR:
        raise InvalidParameterError(f"{kind.value} needs a ring Z_n, got {ring.label}")

    if ring.is_field:
        return _field_predictions(ring, kind, k)
    return _modular_predictions(ring.characteristic, ring, kind, k)


def _field_predictions(ring: RingSpec, kind: GraphKind, k: int) -> List[Prediction]:
    if k != 2:
        return []
    p, d = ring.characteristic, ring.degree
    if kind in (GraphKind.TD, GraphKind.ZD, GraphKind.UD):
        found = [predict_field_graphs(p, d)[kind]]
        if kind is GraphKind.ZD:
            found.append(predict_zd_equals_gamma(ring))
        return found
    if kind is GraphKind.EUD:
        return [predict_eud_field(p, d), predict_round_trip(ring)]
    if kind is GraphKind.GAMMA:
        return [predict_zd_equals_gamma(ring)]
    return []


def _modular_predictions(n: int, ring: RingSpec, kind: GraphKind, k: int) -> List[Prediction]:
    found: List[Prediction] = []
    if k != 2:
        if kind is GraphKind.UD and n >= 4 and n % 2 == 0 and k % 2 == 1:
            found.append(predict_ud_edgeless(n, k))
        return found

    prime = is_prime(n)
    if kind in (GraphKind.TD, GraphKind.ZD, GraphKind.UD) and prime:
        found.append(predict_prime_modulus(n)[kind])
    if kind is GraphKind.UD and n >= 3:
        found.extend([predict_ud_zn(n), predict_sqrt_count(n)])
    if kind is GraphKind.TD:
        found.append(predict_td_connectivity(n))
    if kind is GraphKind.ZD:
        if prime:
            found.append(predict_zd_equals_gamma(ring))
        if n >= 4 and n % 2 == 0:
            found.append(predict_center_vertex(n))
    if kind is GraphKind.GAMMA and prime:
        found.append(predict_zd_equals_gamma(ring))
    if kind is GraphKind.EUD:
        if n >= 3:
            found.append(predict_eud_zn(n))
        elif prime:
            found.append(predict_eud_field(n, 1, ring.label))
        found.append(predict_round_trip(ring))
    if kind is GraphKind.ZD_MIXED:
        found.append(predict_zd_mixed(n))
    if kind is GraphKind.EZD_MIXED:
        found.extend([predict_ezd_mixed(n), predict_round_trip(ring, GraphKind.EZD_MIXED)])
    return found


def primary_prediction(ring: RingSpec, kind: GraphKind, k: int = 2) -> Optional[Prediction]:
    """
    The one prediction a sweep reports for a parameter value.

    Signature predictions win over property checks; for Z_n the modulus
    formulas win over the prime-modulus ones, so a sweep over n reports a
    single statement throughout.

    Returns:
        The prediction, or None when nothing applies to this ring
    """
    candidates = predictions_for(ring, kind, k)
    preferred = (
        TheoremId.MODULAR_UD,
        TheoremId.MODULAR_EUD,
        TheoremId.MIXED_ZD,
        TheoremId.MIXED_EZD,
        TheoremId.TD_CONNECTIVITY,
        TheoremId.HALF_VECTOR_CENTER,
    )
    for theorem in preferred:
        for prediction in candidates:
            if prediction.theorem is theorem:
                return prediction
    return candidates[0] if candidates else None

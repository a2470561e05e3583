# dotgraph/domain/service/ring_factory.py
import logging
from functools import lru_cache
from typing import Tuple, Union

from dotgraph.domain.model import polynomial
from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.ring import RingKind, RingRequest, RingSpec
from dotgraph.domain.service.number_theory import is_prime

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, d: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree d over Z_p.

    Candidates are compared low-degree coefficient first; degree 1 yields X.

    Args:
        p: Prime
        d: Degree >= 1

    Returns:
        Ascending coefficient tuple of length d + 1
    """
    for candidate in polynomial.monic(d, p):
        if polynomial.is_irreducible(candidate, p):
            return candidate
    raise InvalidParameterError(f"no irreducible polynomial of degree {d} over Z_{p}")


def make_modular_ring(n: int) -> RingSpec:
    if n < 2:
        raise InvalidParameterError(f"Z_n needs n >= 2, got {n}")
    return RingSpec(kind=RingKind.MODULAR, characteristic=n)


def make_field(p: int, d: int = 1) -> RingSpec:
    """
    Build GF(p^d) as Z_p[X] modulo the smallest monic irreducible of degree d.

    Raises:
        InvalidParameterError: If p is not prime or d < 1
    """
    if not is_prime(p):
        raise InvalidParameterError(f"field characteristic must be prime, got {p}")
    if d < 1:
        raise InvalidParameterError(f"field degree must be >= 1, got {d}")
    modulus = smallest_irreducible(p, d)
    logger.debug(f"GF({p}^{d}) modulus {polynomial.format_poly(modulus, 'X')}")
    return RingSpec(kind=RingKind.FIELD, characteristic=p, degree=d, modulus=modulus)


def make_ring(request: Union[RingRequest, str]) -> RingSpec:
    """
    Validate a ring request and build the ring.

    Args:
        request: A RingRequest or its text form ("zn:10", "gf:2:2")

    Returns:
        The validated RingSpec
    """
    if isinstance(request, str):
        request = RingRequest.parse(request)
    if request.kind is RingKind.MODULAR:
        return make_modular_ring(request.characteristic)
    return make_field(request.characteristic, request.degree)

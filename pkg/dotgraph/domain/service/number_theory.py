# dotgraph/domain/service/number_theory.py
from math import gcd
from typing import List

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.ring import Factorization


def _require_at_least_two(n: int) -> None:
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")


def factorize(n: int) -> Factorization:
    """
    Factor n by trial division.

    Args:
        n: Integer >= 2

    Returns:
        Factorization with primes ascending
    """
    _require_at_least_two(n)
    pairs = []
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            k = 0
            while remaining % p == 0:
                remaining //= p
                k += 1
            pairs.append((p, k))
        p += 1 if p == 2 else 2
    if remaining > 1:
        pairs.append((remaining, 1))
    return Factorization(pairs=tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return f.pairs == ((n, 1),)


def totient(n: int) -> int:
    """Euler's totient via the product formula over the factorization of n."""
    result = 1
    for p, k in factorize(n).pairs:
        result *= (p - 1) * p ** (k - 1)
    return result


def totient_by_counting(n: int) -> int:
    """Reference totient: count residues in [1, n) coprime to n."""
    _require_at_least_two(n)
    return sum(1 for a in range(1, n) if gcd(a, n) == 1)


def sqrt_of_minus_one(n: int) -> List[int]:
    """
    All units a of Z_n with a^2 = n - 1, ascending, by exhaustive search.
    """
    _require_at_least_two(n)
    return [a for a in range(1, n) if gcd(a, n) == 1 and (a * a) % n == n - 1]


def expected_sqrt_of_minus_one_count(n: int) -> int:
    """
    Closed-form count of solutions of x^2 = -1 in U(Z_n).

    Zero when 4 | n or some odd prime factor is 3 mod 4; otherwise 2^(r-1)
    for even n and 2^r for odd n, r the number of distinct primes. n = 2 has
    no odd prime factor and counts as even, giving 1.
    """
    if n % 4 == 0:
        return 0
    f = factorize(n)
    if any(p % 4 != 1 for p in f.odd_primes):
        return 0
    if n % 2 == 0:
        return 2 ** (f.r - 1)
    return 2 ** f.r


def prime_power(q: int):
    """
    Split q = p^d.

    Returns:
        (p, d) when q is a prime power, None otherwise
    """
    if q < 2:
        return None
    f = factorize(q)
    if f.r != 1:
        return None
    return f.pairs[0]

"""
Polynomials over Z_p.

A polynomial a_0 + a_1 X + ... + a_d X^d is a tuple (a_0, a_1, ..., a_d) of
integers in [0, p). Trimmed polynomials have a nonzero leading coefficient;
the zero polynomial is the empty tuple.
"""
from itertools import product
from typing import Iterator, Sequence, Tuple

Poly = Tuple[int, ...]


def trim(a: Sequence[int]) -> Poly:
    """Drop zero leading coefficients."""
    end = len(a)
    while end and a[end - 1] == 0:
        end -= 1
    return tuple(a[:end])


def degree(a: Poly) -> int:
    """Degree of a trimmed polynomial, -1 for zero."""
    return len(trim(a)) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    size = max(len(a), len(b))
    return trim([
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
        for i in range(size)
    ])


def mul(a: Poly, b: Poly, p: int) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def mod(a: Poly, m: Poly, p: int) -> Poly:
    """
    Remainder of a modulo m over Z_p.

    Args:
        a: Dividend
        m: Nonzero divisor
        p: Prime modulus of the coefficients

    Returns:
        The trimmed remainder, of degree below deg(m)
    """
    m = trim(m)
    if not m:
        raise ZeroDivisionError("polynomial modulus is zero")
    rem = list(trim(a))
    lead_inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(rem) - 1 >= dm and rem:
        factor = (rem[-1] * lead_inv) % p
        shift = len(rem) - 1 - dm
        for i, c in enumerate(m):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        rem = list(trim(rem))
    return tuple(rem)


def evaluate(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def has_root(a: Poly, p: int) -> bool:
    return any(evaluate(a, x, p) == 0 for x in range(p))


def monic(d: int, p: int) -> Iterator[Poly]:
    """
    Monic polynomials of degree d, lexicographically by (a_0, ..., a_{d-1}).
    """
    for low in product(range(p), repeat=d):
        yield tuple(low) + (1,)


def is_irreducible(a: Poly, p: int) -> bool:
    """
    Irreducibility over Z_p.

    Degrees up to 3 are irreducible iff they have no root. Higher degrees are
    tested by trial division against every monic polynomial of degree at most
    deg(a) / 2.
    """
    a = trim(a)
    d = len(a) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if d <= 3:
        return not has_root(a, p)
    for k in range(1, d // 2 + 1):
        for divisor in monic(k, p):
            if not mod(a, divisor, p):
                return False
    return True


def format_poly(a: Poly, symbol: str = "v") -> str:
    """Render highest degree first, e.g. 2v^2 + v + 1."""
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for power in range(len(a) - 1, -1, -1):
        c = a[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
            continue
        base = symbol if power == 1 else f"{symbol}^{power}"
        terms.append(base if c == 1 else f"{c}{base}")
    return " + ".join(terms)

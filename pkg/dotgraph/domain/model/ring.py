# dotgraph/domain/model/ring.py
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from dotgraph.domain.model import polynomial
from dotgraph.domain.model.errors import InvalidParameterError

Element = int
Vector = Tuple[int, ...]


class RingKind(str, Enum):
    """The two families of base rings: Z_n and GF(p^d)."""

    MODULAR = "zn"
    FIELD = "gf"


@dataclass(frozen=True)
class RingRequest:
    """
    Unvalidated description of a ring, as written on the command line.

    `zn:<n>` asks for Z_n, `gf:<p>:<d>` (or `gf:<p>`) for GF(p^d).
    """

    kind: RingKind
    characteristic: int
    degree: int = 1

    @classmethod
    def parse(cls, text: str) -> 'RingRequest':
        """
        Parse a ring request.

        Args:
            text: Ring text such as "zn:10" or "gf:2:2"

        Returns:
            The parsed request

        Raises:
            InvalidParameterError: If the text is malformed
        """
        parts = text.strip().lower().split(":")
        try:
            kind = RingKind(parts[0])
            numbers = [int(part) for part in parts[1:]]
        except ValueError:
            raise InvalidParameterError(f"malformed ring '{text}', expected zn:<n> or gf:<p>:<d>")

        if kind is RingKind.MODULAR and len(numbers) == 1:
            return cls(kind=kind, characteristic=numbers[0])
        if kind is RingKind.FIELD and len(numbers) in (1, 2):
            degree = numbers[1] if len(numbers) == 2 else 1
            return cls(kind=kind, characteristic=numbers[0], degree=degree)
        raise InvalidParameterError(f"malformed ring '{text}', expected zn:<n> or gf:<p>:<d>")

    def __str__(self) -> str:
        if self.kind is RingKind.MODULAR:
            return f"zn:{self.characteristic}"
        return f"gf:{self.characteristic}:{self.degree}"


@dataclass(frozen=True)
class Factorization:
    """
    Prime factorization n = p_1^k_1 ... p_r^k_r, primes ascending.
    """

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def r(self) -> int:
        """Number of distinct primes."""
        return len(self.pairs)

    @property
    def odd_primes(self) -> List[int]:
        return [p for p, _ in self.pairs if p != 2]

    @property
    def value(self) -> int:
        result = 1
        for p, k in self.pairs:
            result *= p ** k
        return result

    def __str__(self) -> str:
        return " · ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in self.pairs)


@dataclass(frozen=True)
class RingSpec:
    """
    A finite commutative ring: Z_n, or GF(p^d) realised as Z_p[X]/(modulus).

    Elements are integer codes. For Z_n the code is the residue in [0, n).
    For GF(p^d) the ascending-degree coefficient vector (c_0, ..., c_{d-1})
    is packed as c_0 p^(d-1) + ... + c_{d-1}, so code order is the
    lexicographic coefficient order and GF(p) codes are plain residues.

    Instances are immutable; the numeric tables of a field are derived
    lazily and cached on first use.
    """

    kind: RingKind
    characteristic: int
    degree: int = 1
    modulus: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.characteristic < 2:
            raise InvalidParameterError(f"ring characteristic must be >= 2, got {self.characteristic}")
        if self.kind is RingKind.FIELD:
            if self.degree < 1:
                raise InvalidParameterError(f"field degree must be >= 1, got {self.degree}")
            if len(self.modulus) != self.degree + 1 or self.modulus[-1] != 1:
                raise InvalidParameterError(
                    f"field modulus must be monic of degree {self.degree}, got {self.modulus}"
                )

    # Identity

    @property
    def is_field(self) -> bool:
        return self.kind is RingKind.FIELD

    @property
    def order(self) -> int:
        """Number of elements."""
        if self.is_field:
            return self.characteristic ** self.degree
        return self.characteristic

    @property
    def label(self) -> str:
        if self.is_field:
            return f"GF({self.order})"
        return f"Z_{self.characteristic}"

    @property
    def request(self) -> RingRequest:
        return RingRequest(kind=self.kind, characteristic=self.characteristic, degree=self.degree)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "label": self.label, "order": self.order}
        if self.is_field:
            data.update({"p": self.characteristic, "d": self.degree, "modulus": list(self.modulus)})
        else:
            data["n"] = self.characteristic
        return data

    # Canonical forms

    @cached_property
    def _weights(self) -> Tuple[int, ...]:
        p, d = self.characteristic, self.degree
        return tuple(p ** (d - 1 - i) for i in range(d))

    @property
    def zero(self) -> Element:
        return 0

    @property
    def one(self) -> Element:
        if self.is_field:
            return self._weights[0]
        return 1 % self.characteristic

    def elements(self) -> range:
        return range(self.order)

    def coefficients(self, x: Element) -> Tuple[int, ...]:
        """Ascending-degree coefficient vector of a field element (the residue for Z_n)."""
        if not self.is_field:
            return (x,)
        p = self.characteristic
        return tuple((x // w) % p for w in self._weights)

    def from_coefficients(self, coeffs: Sequence[int]) -> Element:
        """
        Encode an ascending-degree coefficient vector, reducing it first.

        Args:
            coeffs: Coefficients (c_0, c_1, ...) of any length

        Returns:
            The canonical element code
        """
        if not self.is_field:
            return coeffs[0] % self.characteristic if len(coeffs) else 0
        p = self.characteristic
        reduced = polynomial.mod(tuple(c % p for c in coeffs), self.modulus, p)
        padded = tuple(reduced) + (0,) * (self.degree - len(reduced))
        return sum(c * w for c, w in zip(padded, self._weights))

    def is_canonical(self, x: Any) -> bool:
        return isinstance(x, (int, np.integer)) and 0 <= int(x) < self.order

    # Arithmetic

    def add(self, x: Element, y: Element) -> Element:
        if not self.is_field:
            return (x + y) % self.characteristic
        p = self.characteristic
        return sum((((x // w) % p + (y // w) % p) % p) * w for w in self._weights)

    def neg(self, x: Element) -> Element:
        if not self.is_field:
            return (-x) % self.characteristic
        p = self.characteristic
        return sum(((-((x // w) % p)) % p) * w for w in self._weights)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, x: Element, y: Element) -> Element:
        if not self.is_field:
            return (x * y) % self.characteristic
        if x == 0 or y == 0:
            return 0
        exp, log = self._log_tables
        return int(exp[(log[x] + log[y]) % (self.order - 1)])

    def mul_poly(self, x: Element, y: Element) -> Element:
        """Field multiplication straight from the polynomial definition."""
        if not self.is_field:
            return self.mul(x, y)
        product = polynomial.mul(self.coefficients(x), self.coefficients(y), self.characteristic)
        return self.from_coefficients(product)

    def inverse(self, x: Element) -> Optional[Element]:
        """
        Multiplicative inverse.

        Args:
            x: Canonical element

        Returns:
            y with x * y = 1, or None when x is zero or a zero-divisor
        """
        if not self.is_field:
            if gcd(x, self.characteristic) != 1:
                return None
            return pow(x, -1, self.characteristic)
        if x == 0:
            return None
        exp, log = self._log_tables
        return int(exp[(-int(log[x])) % (self.order - 1)])

    def is_unit(self, x: Element) -> bool:
        if self.is_field:
            return x != 0
        return gcd(x, self.characteristic) == 1

    def units(self) -> List[Element]:
        """Units in canonical order."""
        return [x for x in self.elements() if self.is_unit(x)]

    def zero_divisors(self) -> List[Element]:
        """Zero-divisors including 0, in canonical order."""
        return [x for x in self.elements() if not self.is_unit(x)]

    @cached_property
    def unit_mask(self) -> np.ndarray:
        """Boolean array indexed by element code, True on units."""
        codes = np.arange(self.order, dtype=np.int64)
        if self.is_field:
            return codes != 0
        return np.gcd(codes, self.characteristic) == 1

    def dot(self, x: Sequence[Element], y: Sequence[Element]) -> Element:
        """Sum of coordinate products of two equally long vectors."""
        acc = 0
        for a, b in zip(x, y):
            acc = self.add(acc, self.mul(a, b))
        return acc

    def scale(self, c: Element, x: Sequence[Element]) -> Vector:
        return tuple(self.mul(c, a) for a in x)

    # Vectorised arithmetic over arrays of codes (numpy broadcasting rules)

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if not self.is_field:
            return (a * b) % self.characteristic
        exp, log = self._log_tables
        product = exp[(log[a] + log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, product)

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if not self.is_field:
            return (a + b) % self.characteristic
        p = self.characteristic
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._weights:
            out += (((a // w) % p + (b // w) % p) % p) * w
        return out

    def dot_matrix(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        All dot products between the rows of two code matrices.

        Args:
            left: (b, k) array of vectors
            right: (N, k) array of vectors

        Returns:
            (b, N) array with entry [i, j] = left[i] . right[j]
        """
        if not self.is_field:
            return (left @ right.T) % self.characteristic
        acc = self.mul_array(left[:, None, 0], right[None, :, 0])
        for i in range(1, left.shape[1]):
            acc = self.add_array(acc, self.mul_array(left[:, None, i], right[None, :, i]))
        return acc

    @cached_property
    def _log_tables(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Exponent and logarithm tables with respect to the smallest primitive element.

        Raises:
            InvalidParameterError: If no element generates the multiplicative group,
                i.e. the modulus is not irreducible
        """
        q = self.order
        one = self.one
        for g in range(1, q):
            powers = [one]
            current = g
            while current != one and len(powers) < q:
                powers.append(current)
                current = self.mul_poly(current, g)
            if current == one and len(powers) == q - 1:
                exp = np.array(powers, dtype=np.int64)
                log = np.zeros(q, dtype=np.int64)
                log[exp] = np.arange(q - 1, dtype=np.int64)
                return exp, log
        raise InvalidParameterError(f"{self.label} modulus {self.modulus} yields no primitive element")

    @property
    def primitive_element(self) -> Element:
        if not self.is_field:
            raise InvalidParameterError("primitive elements are only tracked for fields")
        exp, _ = self._log_tables
        return int(exp[1]) if self.order > 2 else self.one

    # Display

    def format_element(self, x: Element) -> str:
        if not self.is_field or self.degree == 1:
            return str(x)
        return polynomial.format_poly(self.coefficients(x))

    def format_vector(self, x: Sequence[Element]) -> str:
        return "(" + ", ".join(self.format_element(a) for a in x) + ")"

"""
Commutative rings with unity used by the transforms.

Ring implementations are stateless; elements are immutable values, so
rings and elements can be shared freely across threads. Division is not
part of the contract.
"""

from abc import ABC, abstractmethod
from typing import Any

from ..config import Config
from ..errors import ArgumentError
from ..models.weight_polynomial import WeightPolynomial


class RingOps(ABC):
    """Abstract commutative ring with unity and integer embedding z -> z * 1_R."""

    name = "ring"

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def sub(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def from_integer(self, z: int) -> Any: ...

    def zero(self) -> Any:
        return self.from_integer(0)

    def one(self) -> Any:
        return self.from_integer(1)

    def equals(self, a: Any, b: Any) -> bool:
        return a == b

    def format(self, a: Any) -> str:
        """Render an element for reports."""
        return str(a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class BigIntRing(RingOps):
    """Arbitrary-precision integers; never overflows."""

    name = "bigint"

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def from_integer(self, z: int) -> int:
        return int(z)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3 * 10^24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q

    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class ModPrimeRing(RingOps):
    """Residues modulo a fixed machine-word prime, always reduced into [0, p)."""

    name = "modp"

    def __init__(self, p: int = Config.DEFAULT_PRIME):
        """
        Initialize the ring Z/pZ.

        Args:
            p: Prime modulus below 2^64

        Raises:
            ArgumentError: If p is not a prime that fits a machine word
        """
        if not (2 <= p < 2 ** 64) or not is_prime(p):
            raise ArgumentError(f"Modulus {p} is not a machine-word prime")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def from_integer(self, z: int) -> int:
        return int(z) % self.p

    def __repr__(self) -> str:
        return f"ModPrimeRing(p={self.p})"


class PolynomialRing(RingOps):
    """Univariate polynomials in z with integer coefficients."""

    name = "poly"

    def add(self, a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
        return a + b

    def sub(self, a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
        return a - b

    def mul(self, a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
        return poly_mul(a, b)

    def from_integer(self, z: int) -> WeightPolynomial:
        return WeightPolynomial.constant(int(z))

    def format(self, a: WeightPolynomial) -> str:
        return a.to_text()


BIGINT = BigIntRing()
POLYNOMIALS = PolynomialRing()


def from_integer(ring: RingOps, z: int) -> Any:
    """
    Embed an integer into a ring as z * 1_R.

    Examples:
        >>> from_integer(BIGINT, 0)
        0

        >>> from_integer(ModPrimeRing(7), -1)
        6
    """
    return ring.from_integer(z)


def poly_mul(a: WeightPolynomial, b: WeightPolynomial) -> WeightPolynomial:
    """Exact coefficient convolution of two weight polynomials."""
    return a * b


def ring_by_name(name: str, prime: int = Config.DEFAULT_PRIME) -> RingOps:
    """
    Get a ring from its command-line selector.

    Raises:
        ArgumentError: If the selector is unknown or the prime is invalid
    """
    if name == "bigint":
        return BIGINT
    if name == "poly":
        return POLYNOMIALS
    if name == "modp":
        return ModPrimeRing(prime)
    raise ArgumentError(f"Unknown ring '{name}'; choose from {', '.join(Config.get_ring_names())}")

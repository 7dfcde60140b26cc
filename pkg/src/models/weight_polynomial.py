"""
Weight generating polynomial data model.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    """Strip trailing zero coefficients."""
    coeffs = list(coeffs)
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class WeightPolynomial:
    """Univariate polynomial in z with arbitrary-precision integer coefficients.

    ``coeffs[w]`` is the coefficient of z^w. The highest stored coefficient is
    nonzero; the zero polynomial has no coefficients.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _normalize(self.coeffs))

    @staticmethod
    def constant(c: int) -> 'WeightPolynomial':
        """Create the constant polynomial c."""
        return WeightPolynomial((c,))

    @staticmethod
    def monomial(w: int, c: int = 1) -> 'WeightPolynomial':
        """Create c * z^w."""
        if w < 0:
            raise ValueError(f"Negative exponent {w}")
        return WeightPolynomial((0,) * w + (c,))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w: int) -> int:
        """Coefficient of z^w (zero outside the stored range)."""
        if 0 <= w < len(self.coeffs):
            return self.coeffs[w]
        return 0

    def total(self) -> int:
        """Sum of all coefficients, i.e. the value at z = 1."""
        return sum(self.coeffs)

    def evaluate(self, z: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: 'WeightPolynomial') -> 'WeightPolynomial':
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return WeightPolynomial(res)

    def __neg__(self) -> 'WeightPolynomial':
        return WeightPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'WeightPolynomial') -> 'WeightPolynomial':
        return self + (-other)

    def __mul__(self, other: 'WeightPolynomial') -> 'WeightPolynomial':
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return WeightPolynomial()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return WeightPolynomial(res)

    def shift(self, w: int) -> 'WeightPolynomial':
        """Multiply by z^w."""
        if not self.coeffs:
            return self
        return WeightPolynomial((0,) * w + self.coeffs)

    def to_text(self) -> str:
        """Render as ascending ``w:c`` pairs; the zero polynomial is ``0``.

        Examples:
            >>> WeightPolynomial((1, 0, 2)).to_text()
            '0:1 2:2'

            >>> WeightPolynomial().to_text()
            '0'
        """
        terms = [f"{w}:{c}" for w, c in enumerate(self.coeffs) if c]
        return " ".join(terms) if terms else "0"

    @staticmethod
    def from_text(text: str) -> 'WeightPolynomial':
        """Parse the text form produced by to_text.

        Raises:
            ValueError: If a term is not of the form w:c
        """
        text = text.strip()
        if text in ("", "0"):
            return WeightPolynomial()

        coeffs = {}
        for term in text.split():
            weight, sep, value = term.partition(":")
            if not sep:
                raise ValueError(f"Malformed polynomial term '{term}'")
            w = int(weight)
            if w < 0:
                raise ValueError(f"Negative exponent in term '{term}'")
            coeffs[w] = coeffs.get(w, 0) + int(value)

        dense = [0] * (max(coeffs) + 1)
        for w, c in coeffs.items():
            dense[w] = c
        return WeightPolynomial(dense)

    def __str__(self) -> str:
        return self.to_text()


ZERO_POLYNOMIAL = WeightPolynomial()
ONE_POLYNOMIAL = WeightPolynomial((1,))

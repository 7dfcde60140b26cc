"""
Transform input and output tables.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import ArgumentError
from .set_family import SetFamily
from .weight_polynomial import WeightPolynomial


@dataclass
class IndexedFunction:
    """Function on a set family, aligned with the family order.

    Values are circuit handles or ring elements; ``None`` stands for zero
    when building circuits. The function is zero outside its domain.
    """
    domain: SetFamily
    values: List[Any]

    def __post_init__(self):
        if len(self.values) != len(self.domain):
            raise ValueError(
                f"Function has {len(self.values)} values for a domain of {len(self.domain)} sets"
            )

    def value_at(self, mask: int, default: Any = None) -> Any:
        pos = self.domain.position(mask)
        return default if pos is None else self.values[pos]

    def items(self) -> Iterator[Tuple[int, Any]]:
        return zip(self.domain.masks, self.values)

    def as_dict(self) -> Dict[int, Any]:
        return dict(self.items())


@dataclass(frozen=True)
class PascalPair:
    """Mutually inverse binomial matrices A (a_ij = C(j,i)) and B (b_ij = (-1)^(i+j) C(j,i))."""
    n: int
    A: Tuple[Tuple[int, ...], ...]
    B: Tuple[Tuple[int, ...], ...]


@dataclass
class IntersectionTable:
    """Values f_iota_j(Y) for the requested rows j and every Y in G.

    ``rows[j]`` is aligned with the order of ``G``. Entries are ring elements,
    or output labels when the table describes a circuit.
    """
    G: SetFamily
    n: int
    rows: Dict[int, List[Any]] = field(default_factory=dict)

    def value(self, j: int, mask: int) -> Any:
        pos = self.G.position(mask)
        if pos is None:
            raise KeyError(f"Set {mask:#x} is not a target")
        return self.rows[j][pos]

    def column(self, mask: int) -> List[Any]:
        """Values over all stored j for one target set, ascending j."""
        pos = self.G.position(mask)
        if pos is None:
            raise KeyError(f"Set {mask:#x} is not a target")
        return [self.rows[j][pos] for j in sorted(self.rows)]

    def entries(self) -> Iterator[Tuple[int, int, Any]]:
        """Yield (j, mask, value) in (j, ascending mask) order."""
        for j in sorted(self.rows):
            for mask, value in zip(self.G.masks, self.rows[j]):
                yield j, mask, value

    def row(self, j: int) -> Dict[int, Any]:
        return dict(zip(self.G.masks, self.rows[j]))


@dataclass
class SupportDPTable:
    """Sparse table of walk polynomials f_{s,a}(S) for one source s.

    ``levels[k]`` maps a support mask of size k to {endpoint: polynomial};
    absent entries are zero. Level 0 is always empty.
    """
    source: int
    kmax: int
    levels: List[Dict[int, Dict[int, WeightPolynomial]]] = field(default_factory=list)

    def get(self, mask: int, endpoint: int) -> WeightPolynomial:
        k = bin(mask).count("1")
        if k >= len(self.levels):
            return WeightPolynomial()
        return self.levels[k].get(mask, {}).get(endpoint, WeightPolynomial())

    def level(self, k: int) -> Dict[int, Dict[int, WeightPolynomial]]:
        if k >= len(self.levels):
            return {}
        return self.levels[k]

    def supports_ending_at(self, k: int, endpoint: int) -> Dict[int, WeightPolynomial]:
        """Supports of size k with a nonzero walk polynomial ending at endpoint."""
        out = {}
        for mask, ends in self.level(k).items():
            poly = ends.get(endpoint)
            if poly is not None:
                out[mask] = poly
        return out

    def state_count(self) -> int:
        return sum(len(ends) for lvl in self.levels for ends in lvl.values())


@dataclass
class PathCount:
    """Weight generating polynomial g_{s,t}(l) of simple s->t walks of length l."""
    source: int
    target: int
    length: int
    polynomial: WeightPolynomial

    def total(self) -> int:
        """Number of paths regardless of weight."""
        return self.polynomial.total()

    def count_of_weight(self, w: int) -> int:
        return self.polynomial.coefficient(w)

    def to_text(self) -> str:
        return self.polynomial.to_text()


def label_text(label: Any) -> str:
    """Render an output label for dumps: tuples become colon-joined fields."""
    if isinstance(label, tuple):
        return ":".join(str(part) for part in label)
    return str(label)


def parse_label(text: str) -> Any:
    """Inverse of label_text for integer tuple labels; other labels stay strings."""
    parts = text.split(":")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        return text
    return values if len(values) > 1 else values[0]


def sorted_rows(rows: Optional[Sequence[int]], n: int) -> List[int]:
    """Requested j rows, validated and ascending (all of 0..n when None)."""
    if rows is None:
        return list(range(n + 1))
    out = sorted(set(rows))
    for j in out:
        if not 0 <= j <= n:
            raise ArgumentError(f"Row j={j} outside 0..{n}")
    return out

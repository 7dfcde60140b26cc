"""
Set family data model.

Subsets of the ground set U = {0, ..., n-1} are encoded as integer
bitmasks (bit i set means element i is a member).
"""

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..config import Config
from ..errors import ArgumentError, CapacityError


def mask_of(elements: Iterable[int]) -> int:
    """Encode a collection of element indices as a bitmask.

    Examples:
        >>> mask_of([0, 2])
        5
    """
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> List[int]:
    """Decode a bitmask into ascending element indices.

    Examples:
        >>> elements_of(5)
        [0, 2]
    """
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def format_set(mask: int) -> str:
    """Render a mask as space-joined indices inside brackets, e.g. '[0 2]'."""
    return "[" + " ".join(str(e) for e in elements_of(mask)) + "]"


def check_ground_set(n: int):
    """Validate a ground set size against the word-size cap.

    Raises:
        CapacityError: If n exceeds Config.MAX_GROUND_SET
        ArgumentError: If n is negative
    """
    if n < 0:
        raise ArgumentError(f"Ground set size must be nonnegative, got {n}")
    if n > Config.MAX_GROUND_SET:
        raise CapacityError(
            f"Ground set size {n} exceeds the supported maximum of {Config.MAX_GROUND_SET}"
        )


class SetFamily:
    """Immutable family of distinct subsets, in ascending mask order.

    Keeps a membership index mask -> position consistent with the ordering.
    """

    __slots__ = ('_masks', '_index', '_n', '_declared')

    def __init__(self, masks: Iterable[int] = (), n: Optional[int] = None):
        """
        Initialize a family.

        Args:
            masks: Member sets as bitmasks; duplicates are dropped
            n: Ground set size (inferred from the largest element if None)

        Raises:
            CapacityError: If the ground set exceeds 32 elements
            ArgumentError: If a mask is negative or does not fit in n bits
        """
        ordered = sorted(set(masks))
        if ordered and ordered[0] < 0:
            raise ArgumentError(f"Negative mask {ordered[0]}")

        needed = ordered[-1].bit_length() if ordered else 0
        declared = n is not None
        if n is None:
            n = needed
        check_ground_set(needed)
        check_ground_set(n)
        if needed > n:
            raise ArgumentError(
                f"Set {format_set(ordered[-1])} does not fit in a ground set of size {n}"
            )

        self._masks: Tuple[int, ...] = tuple(ordered)
        self._index: Dict[int, int] = {m: i for i, m in enumerate(self._masks)}
        self._n = n
        self._declared = declared

    @staticmethod
    def from_sets(sets: Iterable[Iterable[int]], n: Optional[int] = None) -> 'SetFamily':
        """Create a family from collections of element indices."""
        return SetFamily((mask_of(s) for s in sets), n)

    @property
    def n(self) -> int:
        """Ground set size."""
        return self._n

    @property
    def declared(self) -> bool:
        """True if n was given explicitly rather than inferred from the members."""
        return self._declared

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def index(self) -> Dict[int, int]:
        """Read-only view of the mask -> position index."""
        return self._index

    def position(self, mask: int) -> Optional[int]:
        """Position of a member in the ascending order, or None."""
        return self._index.get(mask)

    @property
    def max_rank(self) -> int:
        """Largest member cardinality, or -1 for the empty family."""
        return max((popcount(m) for m in self._masks), default=-1)

    def with_ground_set(self, n: int) -> 'SetFamily':
        """Same members over a ground set of size n."""
        return SetFamily(self._masks, n)

    def to_sets(self) -> List[List[int]]:
        return [elements_of(m) for m in self._masks]

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self._masks)

    def __contains__(self, mask: object) -> bool:
        return mask in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        shown = ", ".join(format_set(m) for m in self._masks[:8])
        more = ", ..." if len(self._masks) > 8 else ""
        return f"SetFamily(n={self._n}, {{{shown}{more}}})"

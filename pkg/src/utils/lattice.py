"""
Closure operators and enumerations on the subset lattice.
"""

import logging
from itertools import combinations
from typing import Optional

from ..errors import ArgumentError
from ..models.set_family import SetFamily, check_ground_set

logger = logging.getLogger(__name__)


def down_closure(fam: SetFamily) -> SetFamily:
    """
    All members of a family and all of their subsets.

    Works by popcount layers: each frontier set has one bit stripped at a
    time, and the set of seen masks deduplicates, for O(n * |down(F)|) work.

    Args:
        fam: Family to close

    Returns:
        The down-closure, ascending, over the same ground set

    Examples:
        >>> down_closure(SetFamily.from_sets([[0, 1]])).to_sets()
        [[], [0], [1], [0, 1]]
    """
    seen = set(fam.masks)
    frontier = list(seen)
    while frontier:
        layer = []
        for mask in frontier:
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                sub = mask ^ low
                if sub not in seen:
                    seen.add(sub)
                    layer.append(sub)
        frontier = layer

    closed = SetFamily(seen, fam.n)
    logger.debug("down-closure: %d sets -> %d sets (n=%d)", len(fam), len(closed), fam.n)
    return closed


def up_closure(fam: SetFamily, n: Optional[int] = None) -> SetFamily:
    """
    All members of a family and all of their supersets within 2^U.

    Args:
        fam: Family to close
        n: Ground set size (defaults to the family's)

    Returns:
        The up-closure, ascending

    Raises:
        ArgumentError: If a member does not fit in n elements
    """
    if n is None:
        n = fam.n
    check_ground_set(n)
    full = (1 << n) - 1
    for mask in fam:
        if mask & ~full:
            raise ArgumentError(f"Set {mask:#x} does not fit in a ground set of size {n}")

    seen = set(fam.masks)
    frontier = list(seen)
    while frontier:
        layer = []
        for mask in frontier:
            missing = full & ~mask
            while missing:
                low = missing & -missing
                missing ^= low
                sup = mask | low
                if sup not in seen:
                    seen.add(sup)
                    layer.append(sup)
        frontier = layer

    return SetFamily(seen, n)


def all_k_subsets(n: int, k: int) -> SetFamily:
    """
    Every k-subset of {0, ..., n-1}.

    Raises:
        ArgumentError: If not 0 <= k <= n
        CapacityError: If n exceeds the ground set cap

    Examples:
        >>> all_k_subsets(3, 2).to_sets()
        [[0, 1], [0, 2], [1, 2]]
    """
    check_ground_set(n)
    if not 0 <= k <= n:
        raise ArgumentError(f"Subset size {k} outside 0..{n}")
    masks = (sum(1 << e for e in combo) for combo in combinations(range(n), k))
    return SetFamily(masks, n)


def complement_family(fam: SetFamily, n: Optional[int] = None) -> SetFamily:
    """Family of complements U \\ X of the members; swaps subset and superset order."""
    if n is None:
        n = fam.n
    full = (1 << n) - 1
    return SetFamily((full ^ mask for mask in fam), n)


def common_ground_set(*families: SetFamily, n: Optional[int] = None) -> int:
    """
    Ground set size shared by several families.

    Families built with an explicit n must all agree on it. Families whose
    n was inferred from their members embed unchanged into any ground set
    they fit; without an explicit or declared n the largest one is used.

    Args:
        families: Families that must live over the same ground set
        n: Explicit ground set size

    Raises:
        ArgumentError: If declared ground sets differ from each other or
            from n, or a family has members outside the chosen ground set
    """
    declared = sorted({fam.n for fam in families if fam.declared})
    if n is None:
        if len(declared) > 1:
            raise ArgumentError(f"Families over different ground sets {declared}")
        n = declared[0] if declared else max((fam.n for fam in families), default=0)
    elif any(size != n for size in declared):
        raise ArgumentError(f"Families over ground sets {declared} do not match n={n}")

    check_ground_set(n)
    for fam in families:
        if fam.masks and fam.masks[-1].bit_length() > n:
            raise ArgumentError(f"Family over {fam.n} elements does not fit ground set of size {n}")
    return n

"""
Fast intersection transform.

For f defined on a family F and targets Y in G, computes

    f_iota_j(Y) = sum of f(X) over X in F with |X & Y| = j,   j = 0..n

in three stages, all expressed against the builder interface:

    1. up-zeta of f on down(F):            g(Z) = sum of f(X) over X containing Z
    2. ranked down-zeta on G:              y_i(Y) = sum of g(Z) over Z in Y, |Z| = i
    3. per Y, x(Y) = B y(Y) with the inverse binomial matrix B, since
       y_i(Y) = sum_j C(j, i) f_iota_j(Y).

f is zero off F.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import Config
from ..errors import ArgumentError
from ..models.circuit import Circuit
from ..models.set_family import SetFamily, popcount
from ..models.tables import IndexedFunction, IntersectionTable, PascalPair, sorted_rows
from ..utils.circuit_builder import ArithmeticBuilder, CircuitBuilder, DirectBuilder, plus, scale
from ..utils.lattice import common_ground_set, complement_family, down_closure
from ..utils.rings import BIGINT, RingOps
from .zeta import down_zeta_on_targets, up_zeta_on_downclosure

logger = logging.getLogger(__name__)


def binomial(p: int, q: int) -> int:
    """
    Binomial coefficient extended to every integer p.

    C(p, q) = prod_{k=1..q} (p + 1 - k) / k for q > 0, 1 for q = 0, 0 for q < 0.

    Examples:
        >>> binomial(5, 2)
        10

        >>> binomial(-1, 3)
        -1

        >>> binomial(2, 3)
        0
    """
    if q < 0:
        return 0
    result = 1
    for k in range(1, q + 1):
        # exact at every step: the running product is C(p, k)
        result = result * (p + 1 - k) // k
    return result


@lru_cache(maxsize=None)
def pascal_matrices(n: int) -> PascalPair:
    """
    The binomial matrix A (a_ij = C(j, i)) and its inverse B (b_ij = (-1)^(i+j) C(j, i)).

    Both are (n+1) x (n+1), upper triangular with unit diagonal.

    Args:
        n: Largest index, 0 <= n <= 64

    Raises:
        ArgumentError: If n is out of range
    """
    if not 0 <= n <= Config.MAX_PASCAL_N:
        raise ArgumentError(f"Pascal matrix size n={n} outside 0..{Config.MAX_PASCAL_N}")

    size = range(n + 1)
    A = tuple(tuple(binomial(j, i) for j in size) for i in size)
    B = tuple(tuple((-1) ** (i + j) * binomial(j, i) for j in size) for i in size)
    if __debug__:
        for i in size:
            for j in size:
                assert sum(A[i][k] * B[k][j] for k in size) == (i == j), "A * B != I"
    return PascalPair(n, A, B)


def emit_pascal_recovery(builder: ArithmeticBuilder, B: Sequence[Sequence[int]],
                         ys: Sequence[Optional[Any]], rows: Sequence[int]) -> Dict[int, Optional[Any]]:
    """
    Emit x_j = sum_i b_ji y_i for the requested rows j.

    Zero matrix entries and zero handles emit no gates.

    Args:
        builder: Circuit or streaming builder
        B: Inverse binomial matrix, indexed 0..r
        ys: Handles y_0..y_r (None is zero)
        rows: Rows j to produce

    Returns:
        j -> handle (None when the row is identically zero)
    """
    r = len(ys) - 1
    out: Dict[int, Optional[Any]] = {}
    for j in rows:
        acc = None
        for i in range(j, r + 1):
            acc = plus(builder, acc, scale(builder, B[j][i], ys[i]))
        out[j] = acc
    return out


def emit_intersection_transform(builder: ArithmeticBuilder, f: IndexedFunction, G: SetFamily,
                                n: int, rows: Optional[Sequence[int]] = None) -> Dict[int, List[Optional[Any]]]:
    """
    Emit the three-stage construction for the requested rows.

    Args:
        builder: Circuit or streaming builder
        f: Handles over F (None is zero)
        G: Target family
        n: Ground set size
        rows: j values to produce (default 0..n)

    Returns:
        j -> handles aligned with G (None is zero)
    """
    wanted = sorted_rows(rows, n)
    F = f.domain
    if not len(F) or not len(G) or not wanted:
        return {j: [None] * len(G) for j in wanted}

    # ranks above r carry no mass: b_ji = 0 for i < j, and g vanishes above max |X|
    r = min(n, F.max_rank)
    lowest = wanted[0]

    # 1. Up-transform
    down_f = down_closure(F)
    g = up_zeta_on_downclosure(builder, f, down_f)

    # 2. Down-transform by rank; the rank split is a relabelling, no gates
    down_g = down_closure(G)
    ys: List[List[Optional[Any]]] = []
    for i in range(r + 1):
        if i < lowest:
            ys.append([None] * len(G))
            continue
        ranked = IndexedFunction(
            down_f, [h if popcount(mask) == i else None for mask, h in g.items()]
        )
        ys.append(down_zeta_on_targets(builder, ranked, G, down_g).values)

    # 3. Recover the intersection transform
    B = pascal_matrices(r).B
    table: Dict[int, List[Optional[Any]]] = {j: [] for j in wanted}
    for pos in range(len(G)):
        column = [ys[i][pos] for i in range(r + 1)]
        x = emit_pascal_recovery(builder, B, column, [j for j in wanted if j <= r])
        for j in wanted:
            table[j].append(x.get(j))

    logger.debug("intersection transform: |F|=%d |down F|=%d |G|=%d |down G|=%d rows=%s",
                 len(F), len(down_f), len(G), len(down_g), wanted)
    return table


def _prepare(F: SetFamily, G: SetFamily, n: Optional[int]) -> Tuple[SetFamily, SetFamily, int]:
    n = common_ground_set(F, G, n=n)
    return F.with_ground_set(n), G.with_ground_set(n), n


def build_intersection_circuit(F: SetFamily, G: SetFamily, n: Optional[int] = None,
                               rows: Optional[Sequence[int]] = None) -> Tuple[Circuit, IntersectionTable]:
    """
    Circuit with |F| input slots and outputs labelled (j, Y).

    Args:
        F: Input family; input slot k is the k-th member in ascending order
        G: Target family
        n: Ground set size shared by F and G
        rows: j values to produce (default 0..n)

    Returns:
        Tuple (circuit, table of output labels)

    Raises:
        ArgumentError: If F or G does not fit the ground set
    """
    F, G, n = _prepare(F, G, n)
    builder = CircuitBuilder(len(F))
    f = IndexedFunction(F, [builder.input(slot) for slot in range(len(F))])
    table = emit_intersection_transform(builder, f, G, n, rows)

    labels = IntersectionTable(G, n)
    for j in sorted(table):
        labels.rows[j] = []
        for mask, handle in zip(G.masks, table[j]):
            builder.output((j, mask), handle)
            labels.rows[j].append((j, mask))

    logger.info("intersection circuit: n=%d |F|=%d |G|=%d %s", n, len(F), len(G), builder.stats())
    return builder.build(), labels


def intersection_transform(F: SetFamily, f: Sequence[Any], G: SetFamily, n: Optional[int] = None,
                           ring: RingOps = BIGINT, rows: Optional[Sequence[int]] = None,
                           builder: Optional[DirectBuilder] = None) -> IntersectionTable:
    """
    Evaluate the intersection transform directly in a ring.

    Performs the same arithmetic as the circuit from build_intersection_circuit
    without materializing gates.

    Args:
        F: Input family
        f: Ring elements aligned with F's order
        G: Target family
        n: Ground set size
        ring: Ring of the values
        rows: j values to produce (default 0..n)
        builder: Streaming builder to reuse (its counts accumulate)

    Returns:
        Table of ring elements
    """
    F, G, n = _prepare(F, G, n)
    if len(f) != len(F):
        raise ArgumentError(f"Got {len(f)} values for a family of {len(F)} sets")

    if builder is None:
        builder = DirectBuilder(ring)
    handles = IndexedFunction(F, list(f))
    table = emit_intersection_transform(builder, handles, G, n, rows)

    zero = ring.zero()
    out = IntersectionTable(G, n)
    for j, values in table.items():
        out.rows[j] = [zero if v is None else v for v in values]
    return out


def count_intersecting(F: SetFamily, G: SetFamily, j: int, n: Optional[int] = None) -> Dict[int, int]:
    """
    For each Y in G, the number of X in F with |X & Y| = j.

    Returns:
        mask of Y -> count
    """
    F, G, n = _prepare(F, G, n)
    if not 0 <= j <= n:
        raise ArgumentError(f"Intersection size {j} outside 0..{n}")
    table = intersection_transform(F, [1] * len(F), G, n, BIGINT, rows=[j])
    return table.row(j)


def count_disjoint(F: SetFamily, G: SetFamily, n: Optional[int] = None) -> Dict[int, int]:
    """
    For each Y in G, the number of X in F disjoint from Y.

    Examples:
        >>> count_disjoint(SetFamily.from_sets([[0], [1], [2]]), SetFamily.from_sets([[0]]), 3)
        {1: 2}
    """
    return count_intersecting(F, G, 0, n)


def count_subsets_of(F: SetFamily, G: SetFamily, n: Optional[int] = None) -> Dict[int, int]:
    """
    For each Y in G, the number of X in F with X a subset of Y.

    X is inside Y exactly when X misses U \\ Y, so this counts disjoint
    members against the complemented targets, at cost O*(|down F| + |up G|).
    """
    F, G, n = _prepare(F, G, n)
    full = (1 << n) - 1
    disjoint = count_disjoint(F, complement_family(G, n), n)
    return {mask: disjoint[full ^ mask] for mask in G}

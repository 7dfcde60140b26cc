"""
Brute-force reference implementations.

Literal, unoptimized evaluations of the defining sums, used to check the
fast transforms and the path counter. Nothing here imports the transform
or counting code.
"""

import logging
from typing import Any, Dict, List, Sequence

from .errors import ArgumentError
from .models.digraph import WeightedDigraph
from .models.set_family import SetFamily, popcount
from .models.tables import IndexedFunction, IntersectionTable, PathCount
from .models.weight_polynomial import ZERO_POLYNOMIAL, WeightPolynomial
from .utils.rings import BIGINT, RingOps

logger = logging.getLogger(__name__)


def brute_intersection_transform(F: SetFamily, f: Sequence[Any], G: SetFamily, n: int,
                                 ring: RingOps = BIGINT) -> IntersectionTable:
    """
    f_iota_j(Y) by a double loop over (X, Y), for j = 0..n.

    Args:
        F: Input family
        f: Ring elements aligned with F
        G: Target family
        n: Ground set size
        ring: Ring of the values

    Returns:
        Full (n+1) x |G| table
    """
    table = IntersectionTable(G, n)
    for j in range(n + 1):
        table.rows[j] = [ring.zero() for _ in G]
    for pos, Y in enumerate(G):
        for X, value in zip(F, f):
            j = popcount(X & Y)
            table.rows[j][pos] = ring.add(table.rows[j][pos], value)
    return table


def brute_zeta(kind: str, F: SetFamily, f: Sequence[Any], G: SetFamily,
               ring: RingOps = BIGINT) -> IndexedFunction:
    """
    Up- or down-zeta transform evaluated on G by literal summation.

    Args:
        kind: 'up' (sum over X containing Y) or 'down' (sum over X inside Y)

    Raises:
        ArgumentError: If kind is neither 'up' nor 'down'
    """
    if kind not in ('up', 'down'):
        raise ArgumentError(f"Unknown zeta kind '{kind}'; expected 'up' or 'down'")

    out = []
    for Y in G:
        acc = ring.zero()
        for X, value in zip(F, f):
            inside = (Y & ~X) == 0 if kind == 'up' else (X & ~Y) == 0
            if inside:
                acc = ring.add(acc, value)
        out.append(acc)
    return IndexedFunction(G, out)


def _simple_walks(D: WeightedDigraph, s: int, length: int, visit):
    """Call visit(end, weight) once for every simple walk of the given length from s."""
    on_path = [False] * D.n
    on_path[s] = True

    def extend(v: int, steps: int, weight: int):
        if steps == length:
            visit(v, weight)
            return
        for edge in D.out_edges(v):
            if on_path[edge.head]:
                continue
            on_path[edge.head] = True
            extend(edge.head, steps + 1, weight + edge.weight)
            on_path[edge.head] = False

    extend(s, 0, 0)


def brute_count_paths(D: WeightedDigraph, s: int, t: int, length: int) -> PathCount:
    """
    Enumerate simple s -> t walks of the given length by DFS, by weight.

    Parallel edges are distinct walks. Feasible for n up to about 12.
    """
    counts: Dict[int, int] = {}

    def visit(end: int, weight: int):
        if end == t:
            counts[weight] = counts.get(weight, 0) + 1

    _simple_walks(D, s, length, visit)
    poly = ZERO_POLYNOMIAL
    for weight, c in counts.items():
        poly = poly + WeightPolynomial.monomial(weight, c)
    return PathCount(s, t, length, poly)


def brute_count_cycles(D: WeightedDigraph, length: int) -> WeightPolynomial:
    """
    Enumerate directed cycles of the given length, each counted once at its minimum vertex.

    Length 1 counts loops.
    """
    total = ZERO_POLYNOMIAL
    for v in range(D.n):
        if length == 1:
            for edge in D.out_edges(v):
                if edge.head == v:
                    total = total + WeightPolynomial.monomial(edge.weight)
            continue

        sub, ids = D.induced(range(v, D.n))
        closings: List[WeightPolynomial] = [D.edge_polynomial(ids[u], v) for u in range(sub.n)]
        found: List[WeightPolynomial] = []

        def visit(end: int, weight: int):
            if end != 0 and not closings[end].is_zero():
                found.append(closings[end].shift(weight))

        _simple_walks(sub, 0, length - 1, visit)
        for poly in found:
            total = total + poly
    return total


def unit_values(F: SetFamily, ring: RingOps = BIGINT) -> List[Any]:
    """f = 1 on every member of F."""
    return [ring.one() for _ in F]


def brute_count_disjoint(F: SetFamily, G: SetFamily) -> Dict[int, int]:
    """Pairwise count of X in F with X & Y empty, per Y in G."""
    return {Y: sum(1 for X in F if not X & Y) for Y in G}


def brute_count_subsets(F: SetFamily, G: SetFamily) -> Dict[int, int]:
    """Pairwise count of X in F with X a subset of Y, per Y in G."""
    return {Y: sum(1 for X in F if not X & ~Y) for Y in G}


__all__ = [
    'brute_intersection_transform',
    'brute_zeta',
    'brute_count_paths',
    'brute_count_cycles',
    'brute_count_disjoint',
    'brute_count_subsets',
    'unit_values',
]

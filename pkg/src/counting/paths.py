"""
Counting simple paths and cycles of a given length by total weight.

A simple walk of length l from s to t splits uniquely into its prefix of
length floor(l/2) from s to some vertex a and its suffix of length
ceil(l/2) from a to t, whose supports meet exactly in {a}. Prefixes are
tabulated by a support DP from s, suffixes by the same DP on the reversed
graph from t, and the halves are glued per endpoint a through the j = 1
slice of the intersection transform.

All counts are weight generating polynomials in z with arbitrary-precision
integer coefficients.
"""

import logging
from typing import Dict, List, Optional

from ..errors import ArgumentError
from ..models.digraph import WeightedDigraph
from ..models.set_family import SetFamily
from ..models.tables import PathCount, SupportDPTable
from ..models.weight_polynomial import ONE_POLYNOMIAL, ZERO_POLYNOMIAL, WeightPolynomial
from ..transforms.itrans import intersection_transform
from ..utils.circuit_builder import DirectBuilder
from ..utils.rings import POLYNOMIALS

logger = logging.getLogger(__name__)


def _check_vertex(D: WeightedDigraph, v: int, name: str):
    if not 0 <= v < D.n:
        raise ArgumentError(f"Vertex {name}={v} outside 0..{D.n - 1}")


def _check_length(D: WeightedDigraph, length: int):
    if not 0 <= length <= D.n - 1:
        raise ArgumentError(f"Path length {length} outside 0..{D.n - 1}")


def support_walk_dp(D: WeightedDigraph, s: int, kmax: int) -> SupportDPTable:
    """
    Walk polynomials f_{s,a}(S) for every support S containing s with |S| <= kmax.

    f_{s,s}({s}) = 1, and a walk with support S ending at t extends a walk
    with support S \\ {t} ending at some a by an edge a -> t, contributing
    the edge polynomial of (a, t). Supports are processed by increasing size;
    only reachable states are stored.

    Args:
        D: Weighted digraph
        s: Source vertex
        kmax: Largest support size, 1 <= kmax <= n

    Returns:
        Sparse table of nonzero f_{s,a}(S)
    """
    _check_vertex(D, s, "s")
    if not 1 <= kmax <= D.n:
        raise ArgumentError(f"Support size bound {kmax} outside 1..{D.n}")

    polys = D.edge_polynomials()
    levels: List[Dict[int, Dict[int, WeightPolynomial]]] = [{}, {1 << s: {s: ONE_POLYNOMIAL}}]
    for _ in range(2, kmax + 1):
        nxt: Dict[int, Dict[int, WeightPolynomial]] = {}
        for mask, ends in levels[-1].items():
            for a, walks in ends.items():
                for t in D.out_neighbors(a):
                    bit = 1 << t
                    if mask & bit:
                        continue
                    extended = walks * polys[(a, t)]
                    bucket = nxt.setdefault(mask | bit, {})
                    prev = bucket.get(t)
                    bucket[t] = extended if prev is None else prev + extended
        levels.append(nxt)

    table = SupportDPTable(s, kmax, levels)
    logger.debug("support DP from %d to depth %d: %d states", s, kmax, table.state_count())
    return table


def _glue_pairwise(prefixes: Dict[int, WeightPolynomial],
                   suffixes: Dict[int, WeightPolynomial]) -> WeightPolynomial:
    """Sum of p(S) q(T) over pairs with |S & T| = 1."""
    total = ZERO_POLYNOMIAL
    for S, p in prefixes.items():
        for T, q in suffixes.items():
            meet = S & T
            if meet and not meet & (meet - 1):
                total = total + p * q
    return total


def count_paths_by_weight(D: WeightedDigraph, s: int, t: int, length: int,
                          pairwise: bool = False,
                          builder: Optional[DirectBuilder] = None) -> PathCount:
    """
    Count simple s -> t paths of the given length, by total weight.

    Args:
        D: Weighted digraph
        s: Source vertex
        t: Target vertex
        length: Number of edges, 0 <= length <= n - 1
        pairwise: Glue halves by explicit pairwise |S & T| = 1 summation
            instead of the intersection transform
        builder: Streaming builder that accumulates operation counts

    Returns:
        Generating polynomial g_{s,t}(length)

    Raises:
        ArgumentError: If a vertex or the length is out of range
    """
    _check_vertex(D, s, "s")
    _check_vertex(D, t, "t")
    _check_length(D, length)

    head_size = length // 2 + 1
    tail_size = (length + 1) // 2 + 1

    prefix = support_walk_dp(D, s, head_size)
    # f_{a,t}(T) in D is f_{t,a}(T) in the reversed graph
    suffix = support_walk_dp(D.reversed(), t, tail_size)

    if builder is None:
        builder = DirectBuilder(POLYNOMIALS)

    total = ZERO_POLYNOMIAL
    for a in range(D.n):
        p = prefix.supports_ending_at(head_size, a)
        if not p:
            continue
        q = suffix.supports_ending_at(tail_size, a)
        if not q:
            continue

        if pairwise:
            total = total + _glue_pairwise(p, q)
            continue

        F = SetFamily(q.keys(), D.n)
        G = SetFamily(p.keys(), D.n)
        r = intersection_transform(
            F, [q[T] for T in F], G, D.n, POLYNOMIALS, rows=[1], builder=builder
        ).row(1)
        for S in G:
            total = total + p[S] * r[S]

    logger.debug("paths %d->%d of length %d: %s", s, t, length, total.to_text())
    return PathCount(s, t, length, total)


def count_paths_direct(D: WeightedDigraph, s: int, t: int, length: int) -> PathCount:
    """
    Count s -> t paths with one support DP to depth length + 1.

    The untrimmed O*(2^n)-style specialization, used to cross-check the
    glued count.
    """
    _check_vertex(D, s, "s")
    _check_vertex(D, t, "t")
    _check_length(D, length)

    table = support_walk_dp(D, s, length + 1)
    total = ZERO_POLYNOMIAL
    for poly in table.supports_ending_at(length + 1, t).values():
        total = total + poly
    return PathCount(s, t, length, total)


def count_cycles_by_weight(D: WeightedDigraph, length: int,
                           builder: Optional[DirectBuilder] = None) -> WeightPolynomial:
    """
    Count directed cycles of the given length by weight, each cycle once.

    A cycle is anchored at its minimum vertex v: it is a path v -> u of
    length l - 1 inside the vertices >= v, closed by an edge u -> v.
    Length 1 counts loops.

    Args:
        D: Weighted digraph
        length: Cycle length, 1 <= length <= n
        builder: Streaming builder that accumulates operation counts

    Raises:
        ArgumentError: If the length is out of range
    """
    if not 1 <= length <= D.n:
        raise ArgumentError(f"Cycle length {length} outside 1..{D.n}")

    total = ZERO_POLYNOMIAL
    for v in range(D.n):
        if length == 1:
            total = total + D.edge_polynomial(v, v)
            continue
        if D.n - v < length:
            break

        sub, ids = D.induced(range(v, D.n))
        # the anchor is relabelled to 0
        for u in range(1, sub.n):
            closing = D.edge_polynomial(ids[u], v)
            if closing.is_zero():
                continue
            paths = count_paths_by_weight(sub, 0, u, length - 1, builder=builder).polynomial
            total = total + paths * closing

    return total


def reconstruct_path(D: WeightedDigraph, s: int, t: int, length: int, weight: int) -> Optional[List[int]]:
    """
    One simple s -> t path of the given length and weight, or None.

    Self-reduction: fix the first edge s -> v of weight w(e) such that the
    residual instance (s deleted, source v, length - 1, weight - w(e)) still
    has a nonzero count, and repeat.

    Returns:
        Vertex list from s to t, or None if no such path exists
    """
    _check_vertex(D, s, "s")
    _check_vertex(D, t, "t")
    _check_length(D, length)

    if count_paths_by_weight(D, s, t, length).count_of_weight(weight) == 0:
        return None

    path = [s]
    graph, ids = D, list(range(D.n))
    src, dst, remaining, wanted = s, t, length, weight
    while remaining > 0:
        rest, rest_ids = graph.induced(v for v in range(graph.n) if v != src)
        local = {old: new for new, old in enumerate(rest_ids)}
        chosen = None
        for edge in graph.out_edges(src):
            if edge.head == src or edge.weight > wanted:
                continue
            v = edge.head
            if remaining - 1 == 0:
                found = v == dst and edge.weight == wanted
            else:
                if v == dst:
                    continue
                residual = count_paths_by_weight(rest, local[v], local[dst], remaining - 1)
                found = residual.count_of_weight(wanted - edge.weight) > 0
            if found:
                chosen = edge
                break

        if chosen is None:
            # unreachable when the initial count was positive
            raise RuntimeError("Self-reduction lost the path")

        path.append(ids[chosen.head])
        src, dst = local[chosen.head], local[dst]
        ids = [ids[old] for old in rest_ids]
        graph = rest
        remaining -= 1
        wanted -= chosen.weight

    return path


def coefficient_bound(D: WeightedDigraph) -> int:
    """Loose bound 2^m * 2^(5n) on the absolute value of any coefficient."""
    return 2 ** D.m * 2 ** (5 * D.n)

"""
Weighted digraph data model.
"""

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ArgumentError
from .set_family import check_ground_set
from .weight_polynomial import WeightPolynomial


@dataclass(frozen=True)
class Edge:
    """Directed edge tail -> head with a nonnegative integer weight."""
    tail: int
    head: int
    weight: int = 0


# (tail, head) -> sum of z^w(e) over the parallel edges tail -> head
EdgePolyTable = Dict[Tuple[int, int], WeightPolynomial]


@dataclass(frozen=True)
class WeightedDigraph:
    """Digraph on vertices 0..n-1; loops and parallel edges are allowed."""
    n: int
    edges: Tuple[Edge, ...] = ()
    weight_bound: Optional[int] = None  # B; heavier edges are rejected
    _out: Tuple[Tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)
    _polys: EdgePolyTable = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        check_ground_set(self.n)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)

        for e in edges:
            if not (0 <= e.tail < self.n and 0 <= e.head < self.n):
                raise ArgumentError(f"Edge {e.tail}->{e.head} has a vertex outside 0..{self.n - 1}")
            if e.weight < 0:
                raise ArgumentError(f"Edge {e.tail}->{e.head} has negative weight {e.weight}")
            if self.weight_bound is not None and e.weight > self.weight_bound:
                raise ArgumentError(
                    f"Edge {e.tail}->{e.head} weight {e.weight} exceeds bound {self.weight_bound}"
                )

        polys: EdgePolyTable = {}
        for e in edges:
            key = (e.tail, e.head)
            polys[key] = polys.get(key, WeightPolynomial()) + WeightPolynomial.monomial(e.weight)
        object.__setattr__(self, '_polys', polys)

        out: List[List[int]] = [[] for _ in range(self.n)]
        for tail, head in sorted(polys):
            out[tail].append(head)
        object.__setattr__(self, '_out', tuple(tuple(heads) for heads in out))

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]],
                   weight_bound: Optional[int] = None) -> 'WeightedDigraph':
        """Create a digraph from (tail, head[, weight]) tuples."""
        return WeightedDigraph(n, tuple(Edge(*e) for e in edges), weight_bound)

    @staticmethod
    def complete(n: int, weight: int = 0) -> 'WeightedDigraph':
        """Complete digraph without loops, every edge of the given weight."""
        return WeightedDigraph(
            n, tuple(Edge(a, b, weight) for a in range(n) for b in range(n) if a != b)
        )

    @staticmethod
    def sample(n: int, density: float, max_weight: int, rng: random.Random,
               loops: bool = False) -> 'WeightedDigraph':
        """
        Random digraph: each ordered pair becomes an edge with probability density.

        Args:
            n: Vertex count
            density: Edge probability in [0, 1]
            max_weight: Weights are drawn uniformly from 0..max_weight
            rng: Seeded generator
            loops: Also draw loops
        """
        edges = []
        for a in range(n):
            for b in range(n):
                if a == b and not loops:
                    continue
                if rng.random() < density:
                    edges.append(Edge(a, b, rng.randint(0, max_weight)))
        return WeightedDigraph(n, tuple(edges), max_weight)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def edge_polynomials(self) -> EdgePolyTable:
        """Polynomial sum of z^w(e) per ordered vertex pair with at least one edge."""
        return dict(self._polys)

    def edge_polynomial(self, tail: int, head: int) -> WeightPolynomial:
        return self._polys.get((tail, head), WeightPolynomial())

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        """Distinct heads of edges leaving v, ascending."""
        return self._out[v]

    def out_edges(self, v: int) -> List[Edge]:
        """Edges leaving v in input order."""
        return [e for e in self.edges if e.tail == v]

    def reversed(self) -> 'WeightedDigraph':
        """Digraph with every edge turned around."""
        return WeightedDigraph(
            self.n, tuple(Edge(e.head, e.tail, e.weight) for e in self.edges), self.weight_bound
        )

    def induced(self, vertices: Iterable[int]) -> Tuple['WeightedDigraph', List[int]]:
        """
        Subgraph induced by a vertex subset, relabelled to 0..k-1.

        Args:
            vertices: Vertices to keep

        Returns:
            Tuple (subgraph, original_ids) where original_ids[new] = old
        """
        keep = sorted(set(vertices))
        relabel = {old: new for new, old in enumerate(keep)}
        edges = tuple(
            Edge(relabel[e.tail], relabel[e.head], e.weight)
            for e in self.edges
            if e.tail in relabel and e.head in relabel
        )
        return WeightedDigraph(len(keep), edges, self.weight_bound), keep

    def has_edge(self, tail: int, head: int, weight: Optional[int] = None) -> bool:
        poly = self.edge_polynomial(tail, head)
        if weight is None:
            return not poly.is_zero()
        return poly.coefficient(weight) > 0

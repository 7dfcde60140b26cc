"""
Data models for the intersection transform toolkit.
"""

from .weight_polynomial import WeightPolynomial, ZERO_POLYNOMIAL, ONE_POLYNOMIAL
from .set_family import SetFamily, mask_of, elements_of, popcount, format_set
from .circuit import Circuit, CircuitStats, Gate, GateKind
from .tables import IndexedFunction, IntersectionTable, PascalPair, PathCount, SupportDPTable
from .digraph import Edge, EdgePolyTable, WeightedDigraph
from .run_config import RunConfig

__all__ = [
    'WeightPolynomial',
    'ZERO_POLYNOMIAL',
    'ONE_POLYNOMIAL',
    'SetFamily',
    'mask_of',
    'elements_of',
    'popcount',
    'format_set',
    'Circuit',
    'CircuitStats',
    'Gate',
    'GateKind',
    'IndexedFunction',
    'IntersectionTable',
    'PascalPair',
    'PathCount',
    'SupportDPTable',
    'Edge',
    'EdgePolyTable',
    'WeightedDigraph',
    'RunConfig',
]

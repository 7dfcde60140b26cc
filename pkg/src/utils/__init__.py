"""
Utility modules: rings, lattice operations, circuit builders and file formats.
"""

from .rings import RingOps, BigIntRing, ModPrimeRing, PolynomialRing, BIGINT, POLYNOMIALS, ring_by_name
from .lattice import down_closure, up_closure, all_k_subsets, complement_family
from .circuit_builder import CircuitBuilder, DirectBuilder, evaluate, stats, dump_circuit, load_circuit
from .file_formats import read_family, read_values, read_graph

__all__ = [
    'RingOps',
    'BigIntRing',
    'ModPrimeRing',
    'PolynomialRing',
    'BIGINT',
    'POLYNOMIALS',
    'ring_by_name',
    'down_closure',
    'up_closure',
    'all_k_subsets',
    'complement_family',
    'CircuitBuilder',
    'DirectBuilder',
    'evaluate',
    'stats',
    'dump_circuit',
    'load_circuit',
    'read_family',
    'read_values',
    'read_graph',
]

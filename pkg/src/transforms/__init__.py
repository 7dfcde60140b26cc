"""
Trimmed zeta transforms and the fast intersection transform.
"""

from .zeta import trimmed_zeta, zeta_transform, build_zeta_circuit
from .itrans import (
    pascal_matrices,
    build_intersection_circuit,
    intersection_transform,
    count_intersecting,
    count_disjoint,
    count_subsets_of,
)

__all__ = [
    'trimmed_zeta',
    'zeta_transform',
    'build_zeta_circuit',
    'pascal_matrices',
    'build_intersection_circuit',
    'intersection_transform',
    'count_intersecting',
    'count_disjoint',
    'count_subsets_of',
]

"""
Weighted counting of simple paths and cycles.
"""

from .paths import (
    support_walk_dp,
    count_paths_by_weight,
    count_paths_direct,
    count_cycles_by_weight,
    reconstruct_path,
)

__all__ = [
    'support_walk_dp',
    'count_paths_by_weight',
    'count_paths_direct',
    'count_cycles_by_weight',
    'reconstruct_path',
]

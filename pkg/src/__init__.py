"""
Fast Intersection Transform

Trimmed zeta transforms and the intersection transform over the subset
lattice, built as arithmetic circuits, with weighted counting of simple
paths and cycles of a given length in digraphs.
"""

__version__ = "1.0.0"

from .main import main, run
from .config import Config

__all__ = ['main', 'run', 'Config']

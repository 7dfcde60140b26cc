"""
Configuration settings for the intersection transform toolkit.
"""

from typing import Dict, List, Tuple


class Config:
    """Application configuration."""

    # Application info
    APP_NAME = "Fast Intersection Transform"
    VERSION = "1.0.0"

    # Ground set limits
    MAX_GROUND_SET = 32  # masks must fit a 32-bit word
    MAX_PASCAL_N = 64

    # Ring defaults
    DEFAULT_RING = "bigint"
    DEFAULT_PRIME = 2147483647  # 2^31 - 1

    # Benchmark defaults
    DEFAULT_BENCH_SIZES: Tuple[int, ...] = (14, 16, 18, 20)
    DEFAULT_BENCH_RATIO = 0.5  # path length as a fraction of n
    DEFAULT_SEED = 20081

    # Logging
    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    DEFAULT_LOG_LEVEL = "WARNING"

    # Exit codes
    EXIT_OK = 0
    EXIT_DATA_ERROR = 1
    EXIT_USAGE_ERROR = 2

    # Ring selectors accepted on the command line
    RINGS: Dict[str, str] = {
        'bigint': "Arbitrary-precision integers",
        'poly': "Polynomials in z with integer coefficients",
        'modp': "Residues modulo a machine-word prime",
    }

    @classmethod
    def get_ring_names(cls) -> List[str]:
        """
        Get all ring selector names for the command line.

        Returns:
            List of ring names
        """
        return list(cls.RINGS.keys())

    @classmethod
    def get_ring_description(cls, name: str) -> str:
        """
        Get a one-line description of a ring selector.

        Args:
            name: Ring selector (e.g., 'modp')

        Returns:
            Description, or the default ring's description if unknown
        """
        return cls.RINGS.get(name, cls.RINGS[cls.DEFAULT_RING])

"""
Shared fixtures for the test suite.
"""

import random
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.config import Config
from src.models.digraph import WeightedDigraph
from src.models.set_family import SetFamily


def random_family(rng: random.Random, n: int, max_size: int) -> SetFamily:
    """Up to max_size random distinct subsets of an n-element ground set."""
    count = rng.randint(0, max_size)
    return SetFamily((rng.getrandbits(n) if n else 0 for _ in range(count)), n)


def random_values(rng: random.Random, count: int, low: int = -10, high: int = 10):
    return [rng.randint(low, high) for _ in range(count)]


def chain_graph(n: int = 3) -> WeightedDigraph:
    """0 -> 1 -> ... -> n-1, all weights 0."""
    return WeightedDigraph.from_edges(n, [(i, i + 1, 0) for i in range(n - 1)])


@pytest.fixture
def rng():
    """Seeded generator; the seed is fixed so failures reproduce."""
    return random.Random(Config.DEFAULT_SEED)


@pytest.fixture
def chain3():
    return chain_graph(3)


@pytest.fixture
def settings_file(tmp_path):
    """Settings path inside a temporary directory."""
    return tmp_path / "itrans" / "settings.yaml"

"""
Entropy bound predictor and benchmark reporter.

Path counting at length l works in the lattice truncated at sets of size
k = ceil(l/2) + 1, whose size is bounded by exp(H(k/n) n) for k/n <= 1/2.
The reporter measures that truncated lattice and the gate count of the
intersection circuit on F = G = all k-subsets.
"""

import logging
import math
import random
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Tuple

from .config import Config
from .counting.paths import count_paths_by_weight
from .errors import ArgumentError
from .models.digraph import WeightedDigraph
from .transforms.itrans import binomial, build_intersection_circuit
from .utils.circuit_builder import stats
from .utils.lattice import all_k_subsets, down_closure

logger = logging.getLogger(__name__)


def binary_entropy(p: float) -> float:
    """
    H(p) = -p ln p - (1 - p) ln(1 - p), with H(0) = H(1) = 0.

    Raises:
        ArgumentError: If p is outside [0, 1]
    """
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"Entropy argument {p} outside [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log(p) - (1.0 - p) * math.log(1.0 - p)


def cap_size(length: int) -> int:
    """Largest support size the half-walk gluing touches for a path of this length."""
    return (length + 1) // 2 + 1


def entropy_bound(n: int, length: int) -> Tuple[float, int]:
    """
    Predicted and measured size of the truncated lattice for paths of a given length.

    Args:
        n: Vertex count, n >= 1
        length: Path length, 0 <= length <= n - 1

    Returns:
        Tuple (predicted, measured): predicted is exp(H(k/n) n), or 2^n when
        k/n > 1/2; measured is the number of sets of size at most k

    Examples:
        >>> entropy_bound(20, 8)[1]
        21700

        >>> entropy_bound(5, 0)[1]
        6
    """
    if n < 1 or not 0 <= length <= n - 1:
        raise ArgumentError(f"Need n >= 1 and 0 <= length <= n - 1, got n={n} length={length}")

    k = cap_size(length)
    p = k / n
    predicted = float(2 ** n) if p > 0.5 else math.exp(binary_entropy(p) * n)
    measured = sum(binomial(n, i) for i in range(k + 1))
    return predicted, measured


@dataclass
class BenchRow:
    """One benchmark measurement."""
    n: int
    length: int
    k: int
    measured: int
    predicted: float
    gates: int
    adds: int
    muls: int
    consts: int
    seconds: float
    ratio: float  # gates / (n^2 (|down F| + |down G|))
    paths: int = 0
    path_seconds: float = 0.0

    HEADER = ("n", "len", "k", "measured", "predicted", "gates", "adds", "muls",
              "consts", "seconds", "ratio", "paths", "path_seconds")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_tsv(self) -> str:
        return "\t".join([
            str(self.n), str(self.length), str(self.k), str(self.measured),
            f"{self.predicted:.1f}", str(self.gates), str(self.adds), str(self.muls),
            str(self.consts), f"{self.seconds:.3f}", f"{self.ratio:.4f}",
            str(self.paths), f"{self.path_seconds:.3f}",
        ])


def measure_itrans_circuit(n: int, k: int) -> Tuple:
    """
    Build the intersection circuit for F = G = all k-subsets of n elements.

    Returns:
        Tuple (CircuitStats, seconds, ratio) where ratio normalizes the gate
        count by n^2 (|down F| + |down G|)
    """
    family = all_k_subsets(n, k)
    closed = len(down_closure(family))

    started = time.perf_counter()
    circuit, _ = build_intersection_circuit(family, family, n)
    seconds = time.perf_counter() - started

    counts = stats(circuit)
    ratio = counts.gates / (max(n, 1) ** 2 * 2 * closed)
    logger.debug("itrans circuit n=%d k=%d: %s in %.3fs (ratio %.4f)", n, k, counts, seconds, ratio)
    return counts, seconds, ratio


def bench_length(n: int, ratio: float) -> int:
    """Path length for size n at a fixed length-to-size ratio, clamped to 0..n-1."""
    return max(0, min(n - 1, round(ratio * n)))


def time_path_count(n: int, length: int, seed: int) -> Tuple[int, float]:
    """
    Count 0 -> n-1 paths on a seeded sparse random digraph.

    Returns:
        Tuple (number of paths, seconds)
    """
    rng = random.Random(seed + n)
    graph = WeightedDigraph.sample(n, min(1.0, 4.0 / max(n, 1)), 3, rng)
    started = time.perf_counter()
    count = count_paths_by_weight(graph, 0, n - 1, length)
    return count.total(), time.perf_counter() - started


def run_benchmark(sizes: Iterable[int] = Config.DEFAULT_BENCH_SIZES,
                  ratio: float = Config.DEFAULT_BENCH_RATIO,
                  seed: int = Config.DEFAULT_SEED) -> List[BenchRow]:
    """
    Measure the truncated lattice and circuit size across n at fixed l / n.

    Args:
        sizes: Ground set sizes
        ratio: Path length as a fraction of n
        seed: Seed for the random digraphs of the path-count timing

    Returns:
        One row per size
    """
    if not 0.0 <= ratio <= 1.0:
        raise ArgumentError(f"Length ratio {ratio} outside [0, 1]")

    rows = []
    for n in sizes:
        length = bench_length(n, ratio)
        predicted, measured = entropy_bound(n, length)
        k = cap_size(length)
        counts, seconds, normalized = measure_itrans_circuit(n, k)
        paths, path_seconds = time_path_count(n, length, seed)
        row = BenchRow(n, length, k, measured, predicted, counts.gates, counts.adds,
                       counts.muls, counts.consts, seconds, normalized, paths, path_seconds)
        logger.info("bench n=%d: %s", n, row.to_tsv())
        rows.append(row)
    return rows

"""
Readers for the family, values and graph text files.

Family file: one set per line as space-separated element indices; an empty
line is the empty set; lines starting with '#' are comments.

Values file: one integer per line, aligned with the set lines of the
family file; '#' comments and blank lines are skipped.

Graph file: first non-comment line 'n m', then m lines 'tail head weight'
with zero-based vertices and nonnegative integer weights.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..errors import ArgumentError, CapacityError, DataError
from ..models.digraph import Edge, WeightedDigraph
from ..models.set_family import SetFamily, mask_of

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read file: {e.strerror or e}", path)


def parse_family(text: str, source: Optional[PathLike] = None, n: Optional[int] = None,
                 allow_duplicates: bool = False) -> Tuple[SetFamily, List[int]]:
    """
    Parse a family file.

    Args:
        text: File contents
        source: File name for error messages
        n: Ground set size, if fixed by the caller
        allow_duplicates: Keep only the first of repeated sets instead of failing;
            only safe when no per-line values follow the file

    Returns:
        Tuple (family, line_masks) where line_masks lists the set of every
        set line in file order, duplicates included

    Raises:
        DataError: On a malformed line, or a duplicate set unless allowed
    """
    line_masks: List[int] = []
    seen = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        try:
            elements = [int(tok) for tok in line.split()]
        except ValueError:
            raise DataError(f"Expected element indices, got '{line}'", source, line_number)
        if any(e < 0 for e in elements):
            raise DataError("Element indices must be nonnegative", source, line_number)
        if n is not None and any(e >= n for e in elements):
            raise DataError(f"Element outside ground set of size {n}", source, line_number)
        if len(set(elements)) != len(elements):
            raise DataError("Repeated element in a set", source, line_number)

        mask = mask_of(elements)
        if mask in seen:
            if allow_duplicates:
                logger.info("%s:%d repeats the set from line %d; counted once",
                            source or "<input>", line_number, seen[mask])
                line_masks.append(mask)
                continue
            raise DataError(f"Duplicate set (first on line {seen[mask]})", source, line_number)
        seen[mask] = line_number
        line_masks.append(mask)

    try:
        family = SetFamily(line_masks, n)
    except CapacityError:
        raise
    except ArgumentError as e:
        raise DataError(str(e), source)
    logger.debug("read %d sets from %s", len(family), source or "<input>")
    return family, line_masks


def read_family(path: PathLike, n: Optional[int] = None,
                allow_duplicates: bool = False) -> Tuple[SetFamily, List[int]]:
    """Read a family file; see parse_family."""
    return parse_family(_read_text(path), path, n, allow_duplicates)


def parse_values(text: str, count: int, source: Optional[PathLike] = None) -> List[int]:
    """
    Parse a values file holding exactly count integers.

    Raises:
        DataError: On a non-integer line or a count mismatch
    """
    values: List[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise DataError(f"Expected an integer, got '{line}'", source, line_number)
    if len(values) != count:
        raise DataError(f"Expected {count} values, got {len(values)}", source)
    return values


def read_values(path: PathLike, count: int) -> List[int]:
    """Read a values file; see parse_values."""
    return parse_values(_read_text(path), count, path)


def align_values(family: SetFamily, line_masks: List[int], values: List[int]) -> List[int]:
    """Reorder per-line values into the family's ascending mask order."""
    by_mask = dict(zip(line_masks, values))
    return [by_mask[mask] for mask in family]


def parse_graph(text: str, source: Optional[PathLike] = None) -> WeightedDigraph:
    """
    Parse a graph file.

    Raises:
        DataError: On a malformed header or edge line, or a wrong edge count
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Edge] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            numbers = [int(tok) for tok in fields]
        except ValueError:
            raise DataError(f"Expected integers, got '{line}'", source, line_number)

        if header is None:
            if len(numbers) != 2 or min(numbers) < 0:
                raise DataError("Header must be 'n m' with nonnegative integers", source, line_number)
            header = (numbers[0], numbers[1])
            continue

        if len(numbers) != 3:
            raise DataError("Edge line must be 'tail head weight'", source, line_number)
        tail, head, weight = numbers
        n = header[0]
        if not (0 <= tail < n and 0 <= head < n):
            raise DataError(f"Edge vertex outside 0..{n - 1}", source, line_number)
        if weight < 0:
            raise DataError("Edge weight must be nonnegative", source, line_number)
        edges.append(Edge(tail, head, weight))

    if header is None:
        raise DataError("Missing 'n m' header", source)
    if len(edges) != header[1]:
        raise DataError(f"Header promises {header[1]} edges, found {len(edges)}", source)

    try:
        graph = WeightedDigraph(header[0], tuple(edges))
    except CapacityError:
        raise
    except ArgumentError as e:
        raise DataError(str(e), source)
    logger.debug("read graph n=%d m=%d from %s", graph.n, graph.m, source or "<input>")
    return graph


def read_graph(path: PathLike) -> WeightedDigraph:
    """Read a graph file; see parse_graph."""
    return parse_graph(_read_text(path), path)


def write_graph(graph: WeightedDigraph) -> str:
    """Render a graph in the graph file format."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{e.tail} {e.head} {e.weight}" for e in graph.edges)
    return "\n".join(lines) + "\n"

#!/usr/bin/env python3
"""
Command-line front end.

Subcommands:
    itrans        intersection transform table of a family against targets
    disjoint      per target, the number of members disjoint from it
    subsets       per target, the number of members contained in it
    count-paths   weighted count of simple s -> t paths of a given length
    count-cycles  weighted count of directed cycles of a given length
    find-path     one s -> t path of a given length and weight
    bench         entropy bound and circuit size across ground set sizes

Reports go to stdout, logs to stderr.
"""

import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from .bench import BenchRow, run_benchmark
from .config import Config
from .counting.paths import count_cycles_by_weight, count_paths_by_weight, reconstruct_path
from .errors import IntersectionToolError
from .models.circuit import Circuit
from .models.digraph import WeightedDigraph
from .models.run_config import RunConfig
from .models.set_family import SetFamily, format_set
from .models.weight_polynomial import WeightPolynomial
from .oracle import (
    brute_count_cycles,
    brute_count_disjoint,
    brute_count_paths,
    brute_count_subsets,
    brute_intersection_transform,
)
from .settings import Settings
from .transforms.itrans import build_intersection_circuit, count_disjoint, count_subsets_of
from .utils.circuit_builder import DirectBuilder, dump_circuit, evaluate, stats
from .utils.file_formats import align_values, read_family, read_graph, read_values
from .utils.lattice import common_ground_set, complement_family
from .utils.rings import POLYNOMIALS, RingOps, ring_by_name

logger = logging.getLogger(__name__)


# =============================================================================
# Argument parsing
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with one subparser per subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    ring_help = "; ".join(
        f"{name}: {Config.get_ring_description(name)}" for name in Config.get_ring_names()
    )
    common.add_argument("--ring", choices=Config.get_ring_names(), default=None,
                        help=f"ring to compute in, default from settings ({ring_help})")
    common.add_argument("--prime", type=int, default=None, help="modulus of the modp ring")
    common.add_argument("--oracle", action="store_true",
                        help="compare against brute force and print MATCH or MISMATCH")
    common.add_argument("--stats", action="store_true", help="print gate / operation counts")
    common.add_argument("--config", type=Path, default=None, help="settings file (YAML)")
    common.add_argument("--log-level", default=None, help="logging level (DEBUG, INFO, ...)")

    parser = argparse.ArgumentParser(
        prog="itrans",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {Config.VERSION}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_text in (
        ("itrans", "intersection transform table"),
        ("disjoint", "count members disjoint from each target"),
        ("subsets", "count members contained in each target"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--sets", type=Path, help="family file F")
        p.add_argument("--targets", type=Path, help="family file G")
        p.add_argument("--n", type=int, default=None, help="ground set size (default: inferred)")
        p.add_argument("--dump-circuit", type=Path, default=None, help="write the circuit dump here")
        if name == "itrans":
            p.add_argument("--values", type=Path, default=None,
                           help="integer values aligned with the set lines (default 1)")

    for name, help_text in (
        ("count-paths", "count simple paths by weight"),
        ("count-cycles", "count directed cycles by weight"),
        ("find-path", "reconstruct one path of a given weight"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--graph", type=Path, help="graph file")
        p.add_argument("--len", dest="length", type=int, default=None, help="length in edges")
        if name != "count-cycles":
            p.add_argument("--s", type=int, default=None, help="source vertex")
            p.add_argument("--t", type=int, default=None, help="target vertex")
        if name == "find-path":
            p.add_argument("--weight", type=int, default=None, help="total path weight")

    p = sub.add_parser("bench", parents=[common], help="entropy bound and circuit size report")
    p.add_argument("--sizes", type=int, nargs="+", default=None, help="ground set sizes")
    p.add_argument("--ratio", type=float, default=None, help="path length as a fraction of n")

    return parser


def configure_logging(level: str, stream: TextIO):
    """Send log records to stream at the given level."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=Config.LOG_FORMAT,
        stream=stream,
        force=True,
    )


def make_run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Merge parsed flags with Settings defaults into a validated RunConfig."""
    data: Dict[str, Any] = {k: v for k, v in vars(args).items()
                            if v is not None and k not in ("config", "log_level")}
    data.setdefault("ring", settings.get_default_ring())
    data.setdefault("prime", settings.get_prime())
    if args.subcommand == "bench":
        data.setdefault("sizes", settings.get_bench_sizes())
        data.setdefault("ratio", settings.get_bench_ratio())
    return RunConfig(**data)


# =============================================================================
# Subcommands
# =============================================================================

def _print_stats(label: str, counts, out: TextIO):
    out.write(f"# {label} {counts}\n")


def _report_oracle(matched: bool, out: TextIO) -> int:
    out.write("MATCH\n" if matched else "MISMATCH\n")
    return Config.EXIT_OK if matched else Config.EXIT_DATA_ERROR


def _write_dump(circuit: Circuit, path: Path):
    with open(path, "w") as f:
        dump_circuit(circuit, f)
    logger.info("wrote circuit with %d gates to %s", len(circuit), path)


def _read_families(cfg: RunConfig):
    # repeated sets are only ambiguous when per-line values are attached
    F, lines = read_family(cfg.sets, cfg.n, allow_duplicates=cfg.values is None)
    G, _ = read_family(cfg.targets, cfg.n, allow_duplicates=True)
    n = common_ground_set(F, G, n=cfg.n)
    return F.with_ground_set(n), lines, G.with_ground_set(n), n


def run_itrans(cfg: RunConfig, ring: RingOps, out: TextIO) -> int:
    F, lines, G, n = _read_families(cfg)
    if cfg.values is not None:
        raw = align_values(F, lines, read_values(cfg.values, len(lines)))
    else:
        raw = [1] * len(F)
    values = [ring.from_integer(v) for v in raw]

    circuit, labels = build_intersection_circuit(F, G, n)
    if cfg.dump_circuit is not None:
        _write_dump(circuit, cfg.dump_circuit)
    results = evaluate(circuit, values, ring)

    out.write("j\tset\tvalue\n")
    for j, mask, label in labels.entries():
        out.write(f"{j}\t{format_set(mask)}\t{ring.format(results[label])}\n")
    if cfg.stats:
        _print_stats("circuit", stats(circuit), out)

    if cfg.oracle:
        expected = brute_intersection_transform(F, values, G, n, ring)
        matched = all(
            ring.equals(results[label], expected.value(j, mask))
            for j, mask, label in labels.entries()
        )
        return _report_oracle(matched, out)
    return Config.EXIT_OK


def run_counting(cfg: RunConfig, out: TextIO) -> int:
    F, _, G, n = _read_families(cfg)
    subsets = cfg.subcommand == "subsets"
    counts = count_subsets_of(F, G, n) if subsets else count_disjoint(F, G, n)

    out.write("set\tcount\n")
    for mask in G:
        out.write(f"{format_set(mask)}\t{counts[mask]}\n")

    if cfg.stats or cfg.dump_circuit is not None:
        targets = complement_family(G, n) if subsets else G
        circuit, _ = build_intersection_circuit(F, targets, n, rows=[0])
        if cfg.dump_circuit is not None:
            _write_dump(circuit, cfg.dump_circuit)
        if cfg.stats:
            _print_stats("circuit", stats(circuit), out)

    if cfg.oracle:
        expected = brute_count_subsets(F, G) if subsets else brute_count_disjoint(F, G)
        return _report_oracle(expected == counts, out)
    return Config.EXIT_OK


def _reduce(poly: WeightPolynomial, ring: RingOps) -> str:
    """Polynomial text with coefficients mapped into the ring's integers."""
    if ring.name != "modp":
        return poly.to_text()
    return WeightPolynomial(tuple(ring.from_integer(c) for c in poly.coeffs)).to_text()


def run_count_paths(cfg: RunConfig, graph: WeightedDigraph, ring: RingOps, out: TextIO) -> int:
    builder = DirectBuilder(POLYNOMIALS)
    count = count_paths_by_weight(graph, cfg.s, cfg.t, cfg.length, builder=builder)
    out.write(_reduce(count.polynomial, ring) + "\n")
    if cfg.stats:
        _print_stats("operations", builder.stats(), out)
    if cfg.oracle:
        expected = brute_count_paths(graph, cfg.s, cfg.t, cfg.length)
        return _report_oracle(expected.polynomial == count.polynomial, out)
    return Config.EXIT_OK


def run_count_cycles(cfg: RunConfig, graph: WeightedDigraph, ring: RingOps, out: TextIO) -> int:
    builder = DirectBuilder(POLYNOMIALS)
    total = count_cycles_by_weight(graph, cfg.length, builder=builder)
    out.write(_reduce(total, ring) + "\n")
    if cfg.stats:
        _print_stats("operations", builder.stats(), out)
    if cfg.oracle:
        return _report_oracle(brute_count_cycles(graph, cfg.length) == total, out)
    return Config.EXIT_OK


def _is_witness(graph: WeightedDigraph, path: List[int], cfg: RunConfig) -> bool:
    """Simple, right endpoints and length, and a weight-w choice of edges exists."""
    if len(path) != cfg.length + 1 or len(set(path)) != len(path):
        return False
    if path[0] != cfg.s or path[-1] != cfg.t:
        return False
    weights = WeightPolynomial.constant(1)
    for a, b in zip(path, path[1:]):
        weights = weights * graph.edge_polynomial(a, b)
    return weights.coefficient(cfg.weight) > 0


def run_find_path(cfg: RunConfig, graph: WeightedDigraph, out: TextIO) -> int:
    path = reconstruct_path(graph, cfg.s, cfg.t, cfg.length, cfg.weight)
    out.write("none\n" if path is None else " ".join(str(v) for v in path) + "\n")
    if cfg.oracle:
        if path is None:
            expected = brute_count_paths(graph, cfg.s, cfg.t, cfg.length)
            return _report_oracle(expected.count_of_weight(cfg.weight) == 0, out)
        return _report_oracle(_is_witness(graph, path, cfg), out)
    return Config.EXIT_OK


def run_bench(cfg: RunConfig, seed: int, out: TextIO) -> int:
    rows = run_benchmark(cfg.sizes, cfg.ratio, seed)
    out.write("\t".join(BenchRow.HEADER) + "\n")
    for row in rows:
        out.write(row.to_tsv() + "\n")
    return Config.EXIT_OK


def dispatch(cfg: RunConfig, settings: Settings, out: TextIO) -> int:
    """Run one validated command and return its exit code."""
    ring = ring_by_name(cfg.ring, cfg.prime)
    logger.debug("running %s", cfg.to_dict())

    if cfg.subcommand == "itrans":
        return run_itrans(cfg, ring, out)
    if cfg.subcommand in ("disjoint", "subsets"):
        return run_counting(cfg, out)
    if cfg.subcommand == "bench":
        return run_bench(cfg, settings.get_seed(), out)

    graph = read_graph(cfg.graph)
    if cfg.subcommand == "count-paths":
        return run_count_paths(cfg, graph, ring, out)
    if cfg.subcommand == "count-cycles":
        return run_count_cycles(cfg, graph, ring, out)
    return run_find_path(cfg, graph, out)


# =============================================================================
# Entry points
# =============================================================================

def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Run the command line and return the exit code.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stdout: Report stream
        stderr: Log and error stream

    Returns:
        0 on success, 1 on a data error or oracle mismatch, 2 on a usage error
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr

    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except SystemExit as e:
        return Config.EXIT_OK if e.code in (0, None) else Config.EXIT_USAGE_ERROR

    settings = Settings(args.config)
    configure_logging(args.log_level or settings.get_log_level(), err)

    try:
        cfg = make_run_config(args, settings)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        err.write(f"Error: Invalid Argument: {messages}\n")
        return Config.EXIT_USAGE_ERROR

    try:
        return dispatch(cfg, settings, out)
    except IntersectionToolError as e:
        err.write(f"Error: {e.error_title}: {e}\n")
        return e.exit_code


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()

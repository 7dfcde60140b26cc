"""
Command-line run configuration.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..config import Config

Subcommand = Literal["itrans", "disjoint", "subsets", "count-paths", "count-cycles", "find-path", "bench"]

FAMILY_COMMANDS = ("itrans", "disjoint", "subsets")
GRAPH_COMMANDS = ("count-paths", "count-cycles", "find-path")
LENGTH_COMMANDS = GRAPH_COMMANDS
ENDPOINT_COMMANDS = ("count-paths", "find-path")


class RunConfig(BaseModel):
    """Validated options of one command-line invocation.

    Flags the user omitted are filled from Settings before validation.
    """

    subcommand: Subcommand
    sets: Optional[Path] = None
    targets: Optional[Path] = None
    values: Optional[Path] = None
    graph: Optional[Path] = None
    n: Optional[int] = Field(default=None, ge=0, le=Config.MAX_GROUND_SET)
    s: Optional[int] = Field(default=None, ge=0)
    t: Optional[int] = Field(default=None, ge=0)
    length: Optional[int] = Field(default=None, ge=0)
    weight: Optional[int] = Field(default=None, ge=0)
    ring: Literal["bigint", "poly", "modp"] = Config.DEFAULT_RING
    prime: int = Config.DEFAULT_PRIME
    oracle: bool = False
    dump_circuit: Optional[Path] = None
    stats: bool = False
    sizes: List[int] = Field(default_factory=lambda: list(Config.DEFAULT_BENCH_SIZES))
    ratio: float = Field(default=Config.DEFAULT_BENCH_RATIO, ge=0.0, le=1.0)

    @model_validator(mode='after')
    def _check_required(self) -> 'RunConfig':
        cmd = self.subcommand
        if cmd in FAMILY_COMMANDS:
            if self.sets is None or self.targets is None:
                raise ValueError(f"'{cmd}' needs --sets and --targets")
        elif self.sets is not None or self.targets is not None:
            raise ValueError(f"'{cmd}' does not take --sets/--targets")

        if self.values is not None and cmd != "itrans":
            raise ValueError("--values is only accepted by 'itrans'")

        if cmd in GRAPH_COMMANDS and self.graph is None:
            raise ValueError(f"'{cmd}' needs --graph")

        if cmd in LENGTH_COMMANDS:
            if self.length is None:
                raise ValueError(f"'{cmd}' needs --len")
        elif self.length is not None:
            raise ValueError(f"'{cmd}' does not take --len")

        if cmd in ENDPOINT_COMMANDS and (self.s is None or self.t is None):
            raise ValueError(f"'{cmd}' needs --s and --t")
        if cmd == "find-path" and self.weight is None:
            raise ValueError("'find-path' needs --weight")

        if self.dump_circuit is not None and cmd not in FAMILY_COMMANDS:
            raise ValueError("--dump-circuit is only accepted by the transform subcommands")
        if any(size < 1 or size > Config.MAX_GROUND_SET for size in self.sizes):
            raise ValueError(f"Benchmark sizes must lie in 1..{Config.MAX_GROUND_SET}")
        return self

    def to_dict(self) -> dict:
        return self.model_dump(mode='json', exclude_none=True)

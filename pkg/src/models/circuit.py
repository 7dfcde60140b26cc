"""
Arithmetic circuit data model.

A circuit is a list of gates in topological order: every operand id is
smaller than the id of the gate that reads it. Constants are plain
integers, embedded into a ring only when the circuit is evaluated, so a
single circuit serves every ring.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Hashable, Iterator, List, Optional, Sequence

from pydantic import BaseModel, model_validator


class GateKind(IntEnum):
    """Gate opcodes."""
    INPUT = 0
    CONST = 1
    ADD = 2
    MUL = 3


class Gate(BaseModel):
    """A single gate of the circuit."""

    id: int
    kind: GateKind
    slot: Optional[int] = None  # INPUT only
    value: Optional[int] = None  # CONST only
    left: Optional[int] = None  # ADD / MUL
    right: Optional[int] = None  # ADD / MUL

    @model_validator(mode='after')
    def _check_operands(self) -> 'Gate':
        if self.kind == GateKind.INPUT and self.slot is None:
            raise ValueError(f"INPUT gate {self.id} has no slot")
        if self.kind == GateKind.CONST and self.value is None:
            raise ValueError(f"CONST gate {self.id} has no value")
        if self.kind in (GateKind.ADD, GateKind.MUL):
            if self.left is None or self.right is None:
                raise ValueError(f"Gate {self.id} is missing an operand")
            if not (0 <= self.left < self.id and 0 <= self.right < self.id):
                raise ValueError(f"Gate {self.id} reads an operand that does not precede it")
        return self

    def to_line(self) -> str:
        """Render in the circuit dump format."""
        if self.kind == GateKind.INPUT:
            return f"{self.id} INPUT {self.slot}"
        if self.kind == GateKind.CONST:
            return f"{self.id} CONST {self.value}"
        return f"{self.id} {self.kind.name} {self.left} {self.right}"


@dataclass(frozen=True)
class CircuitStats:
    """Exact gate counts."""
    gates: int = 0
    adds: int = 0
    muls: int = 0
    consts: int = 0

    @property
    def inputs(self) -> int:
        return self.gates - self.adds - self.muls - self.consts

    def as_tuple(self):
        return (self.gates, self.adds, self.muls, self.consts)

    def __str__(self) -> str:
        return f"gates={self.gates} adds={self.adds} muls={self.muls} consts={self.consts}"


class Circuit:
    """Immutable gate list with labelled outputs.

    Gates are stored column-wise (kind, first operand, second operand) so that
    circuits with millions of gates stay compact. For INPUT gates the first
    operand holds the slot, for CONST gates the integer value.
    """

    __slots__ = ('_kinds', '_a', '_b', '_input_count', '_outputs')

    def __init__(self, kinds: Sequence[int], a: Sequence[int], b: Sequence[int],
                 input_count: int, outputs: Dict[Hashable, int]):
        """
        Initialize a circuit from column-wise gate storage.

        Raises:
            ValueError: If the columns disagree in length or an output id is invalid
        """
        if not (len(kinds) == len(a) == len(b)):
            raise ValueError("Gate columns have different lengths")
        for label, gate_id in outputs.items():
            if not 0 <= gate_id < len(kinds):
                raise ValueError(f"Output {label!r} refers to missing gate {gate_id}")

        self._kinds = tuple(kinds)
        self._a = tuple(a)
        self._b = tuple(b)
        self._input_count = input_count
        self._outputs = dict(outputs)

    @property
    def input_count(self) -> int:
        return self._input_count

    @property
    def outputs(self) -> Dict[Hashable, int]:
        """Output label -> gate id (copy)."""
        return dict(self._outputs)

    @property
    def columns(self):
        """Raw (kinds, a, b) columns, for evaluators."""
        return self._kinds, self._a, self._b

    def __len__(self) -> int:
        return len(self._kinds)

    def gate(self, gate_id: int) -> Gate:
        """Materialize one gate as a Gate model."""
        kind = GateKind(self._kinds[gate_id])
        if kind == GateKind.INPUT:
            return Gate(id=gate_id, kind=kind, slot=self._a[gate_id])
        if kind == GateKind.CONST:
            return Gate(id=gate_id, kind=kind, value=self._a[gate_id])
        return Gate(id=gate_id, kind=kind, left=self._a[gate_id], right=self._b[gate_id])

    def gates(self) -> Iterator[Gate]:
        for gate_id in range(len(self._kinds)):
            yield self.gate(gate_id)

    @staticmethod
    def from_gates(gates: List[Gate], outputs: Dict[Hashable, int]) -> 'Circuit':
        """Create a circuit from Gate models listed in id order."""
        kinds, a, b = [], [], []
        input_count = 0
        for expected, g in enumerate(gates):
            if g.id != expected:
                raise ValueError(f"Gate ids must be consecutive; expected {expected}, got {g.id}")
            kinds.append(int(g.kind))
            if g.kind == GateKind.INPUT:
                a.append(g.slot)
                b.append(0)
                input_count = max(input_count, g.slot + 1)
            elif g.kind == GateKind.CONST:
                a.append(g.value)
                b.append(0)
            else:
                a.append(g.left)
                b.append(g.right)
        return Circuit(kinds, a, b, input_count, outputs)

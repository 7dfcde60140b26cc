"""
Circuit construction and evaluation.

Transform code is written once against the builder interface below and
run either with a ``CircuitBuilder`` (which records gates) or with a
``DirectBuilder`` (which performs the same ring operations immediately).
Handles are gate ids for the former and ring elements for the latter.
In both, ``None`` is the zero handle: it emits nothing.
"""

import logging
from typing import Any, Dict, Hashable, List, Optional, Protocol, Sequence, TextIO

from ..errors import ArgumentError, DataError
from ..models.circuit import Circuit, CircuitStats, Gate, GateKind
from ..models.tables import label_text, parse_label
from .rings import RingOps

logger = logging.getLogger(__name__)

Handle = Any


class ArithmeticBuilder(Protocol):
    """Operations shared by the recording and the streaming builder."""

    def input(self, slot: int) -> Handle: ...

    def const(self, z: int) -> Handle: ...

    def add(self, left: Handle, right: Handle) -> Handle: ...

    def mul(self, left: Handle, right: Handle) -> Handle: ...

    def output(self, label: Hashable, handle: Optional[Handle]) -> None: ...


def plus(builder: ArithmeticBuilder, left: Optional[Handle], right: Optional[Handle]) -> Optional[Handle]:
    """Sum of two handles where None is zero."""
    if left is None:
        return right
    if right is None:
        return left
    return builder.add(left, right)


def scale(builder: ArithmeticBuilder, z: int, handle: Optional[Handle]) -> Optional[Handle]:
    """Product with an integer constant; zero constants emit nothing."""
    if z == 0 or handle is None:
        return None
    return builder.mul(builder.const(z), handle)


class CircuitBuilder:
    """Records gates in topological order and produces an immutable Circuit."""

    def __init__(self, input_count: int = 0):
        """
        Initialize an empty circuit.

        Args:
            input_count: Number of input slots of the finished circuit
        """
        self.input_count = input_count
        self._kinds: List[int] = []
        self._a: List[int] = []
        self._b: List[int] = []
        self._outputs: Dict[Hashable, int] = {}
        self._consts: Dict[int, int] = {}
        self._adds = 0
        self._muls = 0

    def _emit(self, kind: int, a: int, b: int = 0) -> int:
        self._kinds.append(kind)
        self._a.append(a)
        self._b.append(b)
        return len(self._kinds) - 1

    def input(self, slot: int) -> int:
        if not 0 <= slot < self.input_count:
            raise ArgumentError(f"Input slot {slot} outside 0..{self.input_count - 1}")
        return self._emit(GateKind.INPUT, slot)

    def const(self, z: int) -> int:
        """CONST gate for z; one gate per distinct value."""
        gate_id = self._consts.get(z)
        if gate_id is None:
            gate_id = self._emit(GateKind.CONST, z)
            self._consts[z] = gate_id
        return gate_id

    def add(self, left: int, right: int) -> int:
        self._adds += 1
        return self._emit(GateKind.ADD, left, right)

    def mul(self, left: int, right: int) -> int:
        self._muls += 1
        return self._emit(GateKind.MUL, left, right)

    def output(self, label: Hashable, handle: Optional[int]) -> None:
        """Label a gate as an output; a zero handle is wired to CONST 0."""
        if label in self._outputs:
            raise ArgumentError(f"Duplicate output label {label!r}")
        self._outputs[label] = self.const(0) if handle is None else handle

    @property
    def gate_count(self) -> int:
        return len(self._kinds)

    def stats(self) -> CircuitStats:
        return CircuitStats(len(self._kinds), self._adds, self._muls, len(self._consts))

    def build(self) -> Circuit:
        circuit = Circuit(self._kinds, self._a, self._b, self.input_count, self._outputs)
        logger.debug("built circuit: %s, %d outputs", self.stats(), len(self._outputs))
        return circuit


class DirectBuilder:
    """Performs the builder operations directly in a ring, without gates.

    Keeps the same add/mul/const counts a CircuitBuilder would record, so
    streaming runs can report operation counts.
    """

    def __init__(self, ring: RingOps, inputs: Sequence[Any] = ()):
        """
        Initialize a streaming evaluator.

        Args:
            ring: Ring to compute in
            inputs: Ring elements returned by input(slot)
        """
        self.ring = ring
        self.inputs = list(inputs)
        self.results: Dict[Hashable, Any] = {}
        self._consts: Dict[int, Any] = {}
        self._adds = 0
        self._muls = 0
        self._input_reads = 0

    def input(self, slot: int) -> Any:
        self._input_reads += 1
        return self.inputs[slot]

    def const(self, z: int) -> Any:
        value = self._consts.get(z)
        if value is None:
            value = self.ring.from_integer(z)
            self._consts[z] = value
        return value

    def add(self, left: Any, right: Any) -> Any:
        self._adds += 1
        return self.ring.add(left, right)

    def mul(self, left: Any, right: Any) -> Any:
        self._muls += 1
        return self.ring.mul(left, right)

    def output(self, label: Hashable, handle: Optional[Any]) -> None:
        if label in self.results:
            raise ArgumentError(f"Duplicate output label {label!r}")
        self.results[label] = self.ring.zero() if handle is None else handle

    def stats(self) -> CircuitStats:
        consts = len(self._consts)
        total = self._input_reads + consts + self._adds + self._muls
        return CircuitStats(total, self._adds, self._muls, consts)


def evaluate(c: Circuit, inputs: Sequence[Any], ring: RingOps) -> Dict[Hashable, Any]:
    """
    Evaluate a circuit over a ring.

    Every gate is computed once, in id order. Evaluation is pure: the same
    circuit and inputs always give the same outputs.

    Args:
        c: Circuit to evaluate
        inputs: One ring element per input slot
        ring: Ring to compute in

    Returns:
        Output label -> ring element

    Raises:
        ArgumentError: If the number of inputs does not match the circuit
    """
    if len(inputs) != c.input_count:
        raise ArgumentError(f"Circuit expects {c.input_count} inputs, got {len(inputs)}")

    kinds, a, b = c.columns
    add, mul = ring.add, ring.mul
    values: List[Any] = [None] * len(kinds)
    for i, kind in enumerate(kinds):
        if kind == GateKind.ADD:
            values[i] = add(values[a[i]], values[b[i]])
        elif kind == GateKind.MUL:
            values[i] = mul(values[a[i]], values[b[i]])
        elif kind == GateKind.INPUT:
            values[i] = inputs[a[i]]
        else:
            values[i] = ring.from_integer(a[i])

    return {label: values[gate_id] for label, gate_id in c.outputs.items()}


def stats(c: Circuit) -> CircuitStats:
    """Exact gate counts of a circuit."""
    kinds = c.columns[0]
    adds = sum(1 for k in kinds if k == GateKind.ADD)
    muls = sum(1 for k in kinds if k == GateKind.MUL)
    consts = sum(1 for k in kinds if k == GateKind.CONST)
    return CircuitStats(len(kinds), adds, muls, consts)


def dump_circuit(c: Circuit, stream: TextIO):
    """Write the text dump: one gate per line, then OUTPUT lines."""
    for gate in c.gates():
        stream.write(gate.to_line() + "\n")
    for label, gate_id in c.outputs.items():
        stream.write(f"OUTPUT {label_text(label)} {gate_id}\n")


def load_circuit(text: str, source: Optional[str] = None) -> Circuit:
    """
    Parse the text dump format back into a circuit.

    Raises:
        DataError: On a malformed line, with its line number
    """
    gates: List[Gate] = []
    outputs: Dict[Hashable, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "OUTPUT":
                if len(fields) != 3:
                    raise ValueError("expected OUTPUT <label> <id>")
                outputs[parse_label(fields[1])] = int(fields[2])
                continue

            gate_id, kind = int(fields[0]), GateKind[fields[1]]
            operands = [int(x) for x in fields[2:]]
            if kind == GateKind.INPUT:
                gates.append(Gate(id=gate_id, kind=kind, slot=operands[0]))
            elif kind == GateKind.CONST:
                gates.append(Gate(id=gate_id, kind=kind, value=operands[0]))
            else:
                gates.append(Gate(id=gate_id, kind=kind, left=operands[0], right=operands[1]))
        except (ValueError, KeyError, IndexError) as e:
            raise DataError(f"Malformed circuit line '{line}': {e}", source, line_number)

    try:
        return Circuit.from_gates(gates, outputs)
    except ValueError as e:
        raise DataError(str(e), source)

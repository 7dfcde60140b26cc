"""
Tests for the circuit model, builders, evaluator and dump format.
"""

import io

import pytest
from pydantic import ValidationError

from src.errors import ArgumentError, DataError
from src.models.circuit import Gate, GateKind
from src.models.set_family import SetFamily
from src.models.weight_polynomial import WeightPolynomial
from src.transforms.itrans import (
    build_intersection_circuit,
    emit_pascal_recovery,
    intersection_transform,
    pascal_matrices,
)
from src.utils.circuit_builder import (
    CircuitBuilder,
    DirectBuilder,
    dump_circuit,
    evaluate,
    load_circuit,
    stats,
)
from src.utils.rings import BIGINT, POLYNOMIALS, ModPrimeRing


def adder():
    b = CircuitBuilder(2)
    b.output("out", b.add(b.input(0), b.input(1)))
    return b.build()


class TestEvaluate:
    """Test ring-generic evaluation."""

    def test_add_two_inputs(self):
        """Test out = x0 + x1 over the integers."""
        assert evaluate(adder(), [2, 3], BIGINT) == {"out": 5}

    def test_negation_by_constant(self):
        """Test out = x0 * (-1)."""
        b = CircuitBuilder(1)
        b.output("out", b.mul(b.input(0), b.const(-1)))
        assert evaluate(b.build(), [7], BIGINT) == {"out": -7}

    def test_identity_wire_over_polynomials(self):
        """Test that an input wired to an output passes through."""
        b = CircuitBuilder(1)
        b.output("out", b.input(0))
        p = WeightPolynomial((1, 1))
        assert evaluate(b.build(), [p], POLYNOMIALS) == {"out": p}

    def test_constants_embed_per_ring(self):
        """Test that one circuit serves several rings."""
        b = CircuitBuilder(1)
        b.output("out", b.mul(b.input(0), b.const(-3)))
        c = b.build()
        assert evaluate(c, [5], BIGINT)["out"] == -15
        assert evaluate(c, [5], ModPrimeRing(7))["out"] == (-15) % 7

    def test_input_length_mismatch(self):
        """Test that the wrong number of inputs is an argument error."""
        with pytest.raises(ArgumentError):
            evaluate(adder(), [1], BIGINT)

    def test_zero_output_wired_to_const(self):
        """Test that a None handle becomes CONST 0."""
        b = CircuitBuilder(0)
        b.output("zero", None)
        c = b.build()
        assert evaluate(c, [], BIGINT) == {"zero": 0}
        assert stats(c).consts == 1

    def test_pure(self):
        """Test that re-evaluation gives identical outputs."""
        c = adder()
        assert evaluate(c, [4, 9], BIGINT) == evaluate(c, [4, 9], BIGINT)

    def test_polynomial_evaluation_commutes_with_substitution(self, rng):
        """Test that evaluating over polynomials then substituting z matches the integers."""
        F = SetFamily([0b011, 0b101, 0b110, 0b111], 3)
        G = SetFamily([0b001, 0b011, 0b111], 3)
        circuit, _ = build_intersection_circuit(F, G, 3)
        polys = [WeightPolynomial(tuple(rng.randint(-5, 5) for _ in range(3))) for _ in F]
        over_polys = evaluate(circuit, polys, POLYNOMIALS)
        for z in (-2, 0, 3):
            over_ints = evaluate(circuit, [p.evaluate(z) for p in polys], BIGINT)
            assert {k: v.evaluate(z) for k, v in over_polys.items()} == over_ints


class TestStats:
    """Test exact gate counts."""

    def test_empty_circuit(self):
        """Test that the empty circuit has no gates."""
        assert stats(CircuitBuilder(0).build()).as_tuple() == (0, 0, 0, 0)

    def test_one_add(self):
        """Test an adder over two inputs."""
        assert stats(adder()).as_tuple() == (3, 1, 0, 0)

    def test_pascal_recovery_block(self):
        """Test the hand count of the recovery block for n = 2, one target set."""
        b = CircuitBuilder(3)
        ys = [b.input(i) for i in range(3)]
        emit_pascal_recovery(b, pascal_matrices(2).B, ys, [0, 1, 2])
        counts = b.stats()
        # x0 = y0 - y1 + y2, x1 = y1 - 2 y2, x2 = y2; constants 1, -1, -2
        assert (counts.muls, counts.adds, counts.consts) == (6, 3, 3)
        assert counts.gates == 3 + 3 + 6 + 3

    def test_pascal_recovery_values(self):
        """Test that recovery inverts y = A x."""
        d = DirectBuilder(BIGINT)
        x = emit_pascal_recovery(d, pascal_matrices(2).B, [10, 13, 5], [0, 1, 2])
        assert x == {0: 2, 1: 3, 2: 5}

    def test_one_output_per_row_and_target(self):
        """Test that the circuit has an input per member and an output per (j, Y)."""
        F = SetFamily([1, 2, 3, 6], 3)
        circuit, labels = build_intersection_circuit(F, F, 3)
        assert stats(circuit).inputs == len(F)
        assert len(circuit.outputs) == 4 * len(F)
        assert sorted(circuit.outputs) == [label for _, _, label in labels.entries()]

    def test_direct_builder_counts_match_circuit(self):
        """Test that streaming runs count the same additions and multiplications."""
        F = SetFamily([1, 2, 3, 6, 7], 3)
        circuit, _ = build_intersection_circuit(F, F, 3)
        d = DirectBuilder(BIGINT)
        intersection_transform(F, [1] * len(F), F, 3, builder=d)
        assert (d.stats().adds, d.stats().muls) == (stats(circuit).adds, stats(circuit).muls)


class TestGateModel:
    """Test the pydantic gate model."""

    def test_operands_must_precede(self):
        """Test the topological order invariant."""
        with pytest.raises(ValidationError):
            Gate(id=1, kind=GateKind.ADD, left=0, right=1)

    def test_input_needs_slot(self):
        """Test that INPUT gates carry a slot."""
        with pytest.raises(ValidationError):
            Gate(id=0, kind=GateKind.INPUT)

    def test_to_line(self):
        """Test the dump rendering of single gates."""
        assert Gate(id=2, kind=GateKind.MUL, left=0, right=1).to_line() == "2 MUL 0 1"
        assert Gate(id=0, kind=GateKind.CONST, value=-4).to_line() == "0 CONST -4"


class TestDumpFormat:
    """Test the text dump and its parser."""

    def test_dump_lines(self):
        """Test the exact dump of an adder."""
        buf = io.StringIO()
        dump_circuit(adder(), buf)
        assert buf.getvalue() == "0 INPUT 0\n1 INPUT 1\n2 ADD 0 1\nOUTPUT out 2\n"

    def test_load_restores_behaviour(self):
        """Test that a loaded intersection circuit evaluates identically."""
        F = SetFamily([0b01, 0b10, 0b11], 2)
        circuit, labels = build_intersection_circuit(F, F, 2)
        buf = io.StringIO()
        dump_circuit(circuit, buf)
        loaded = load_circuit(buf.getvalue())
        assert len(loaded) == len(circuit)
        assert evaluate(loaded, [1, 2, 3], BIGINT) == evaluate(circuit, [1, 2, 3], BIGINT)

    def test_load_reports_line_number(self):
        """Test that malformed lines carry their line number."""
        with pytest.raises(DataError) as e:
            load_circuit("0 INPUT 0\n1 FROB 0 0\n", source="bad.circ")
        assert e.value.line_number == 2
        assert "bad.circ:2" in str(e.value)

    def test_load_rejects_forward_reference(self):
        """Test that a gate reading a later gate is refused."""
        with pytest.raises(DataError):
            load_circuit("0 INPUT 0\n1 ADD 0 2\n2 INPUT 1\n")

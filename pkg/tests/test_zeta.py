"""
Tests for the trimmed zeta transforms.
"""

import random

import pytest

from src.errors import ArgumentError
from src.models.set_family import SetFamily
from src.models.tables import IndexedFunction
from src.oracle import brute_zeta
from src.transforms.zeta import (
    ZETA_VARIANTS,
    build_zeta_circuit,
    down_zeta_on_targets,
    trimmed_zeta,
    up_zeta_on_downclosure,
    zeta_by_complement,
    zeta_transform,
)
from src.utils.circuit_builder import CircuitBuilder, DirectBuilder, evaluate, stats
from src.utils.lattice import complement_family, down_closure
from src.utils.rings import BIGINT, ModPrimeRing

from conftest import random_family, random_values


def fam(*sets, n=None):
    return SetFamily.from_sets(sets, n)


def direct(F, values):
    return IndexedFunction(F, list(values))


class TestUpZetaOnDownClosure:
    """Test the up-zeta sweep over the down-closure."""

    def test_single_set(self):
        """Test that every subset of the only member sees its value."""
        out = up_zeta_on_downclosure(DirectBuilder(BIGINT), direct(fam([0, 1]), [5]))
        assert out.as_dict() == {0b00: 5, 0b01: 5, 0b10: 5, 0b11: 5}

    def test_two_singletons(self):
        """Test superset sums over {{0}, {1}}."""
        out = up_zeta_on_downclosure(DirectBuilder(BIGINT), direct(fam([0], [1]), [1, 1]))
        assert out.as_dict() == {0b00: 2, 0b01: 1, 0b10: 1}

    def test_empty_family(self):
        """Test that the empty family gives empty output."""
        out = up_zeta_on_downclosure(DirectBuilder(BIGINT), direct(SetFamily(), []))
        assert len(out.domain) == 0

    def test_matches_brute_force(self, rng):
        """Test pointwise agreement with literal superset sums."""
        for _ in range(30):
            n = rng.randint(1, 10)
            F = random_family(rng, n, 40)
            f = random_values(rng, len(F))
            out = up_zeta_on_downclosure(DirectBuilder(BIGINT), direct(F, f))
            expected = brute_zeta('up', F, f, out.domain)
            assert [v or 0 for v in out.values] == expected.values

    def test_gate_bound(self, rng):
        """Test that the circuit has at most (n+1)(|F| + |down F|) gates."""
        for _ in range(10):
            n = rng.randint(1, 10)
            F = random_family(rng, n, 60)
            b = CircuitBuilder(len(F))
            up_zeta_on_downclosure(b, IndexedFunction(F, [b.input(i) for i in range(len(F))]))
            assert b.gate_count <= (n + 1) * (len(F) + len(down_closure(F)))


class TestDownZetaOnTargets:
    """Test the down-zeta sweep over the down-closure of the targets."""

    def test_both_singletons_inside(self):
        """Test that {0} and {1} are both inside {0, 1}."""
        out = down_zeta_on_targets(DirectBuilder(BIGINT), direct(fam([0], [1]), [1, 1]), fam([0, 1]))
        assert out.values == [2]

    def test_nothing_inside(self):
        """Test that a target with no member inside reads zero."""
        out = down_zeta_on_targets(DirectBuilder(BIGINT), direct(fam([0, 1]), [1]), fam([0]))
        assert out.values == [None]

    def test_nested_chain(self):
        """Test subset sums over a chain."""
        F = fam([], [0], [0, 1])
        out = down_zeta_on_targets(DirectBuilder(BIGINT), direct(F, [1, 1, 1]), fam([0], [0, 1]))
        assert out.values == [2, 3]

    def test_matches_brute_force(self, rng):
        """Test pointwise agreement with literal subset sums."""
        for _ in range(30):
            n = rng.randint(1, 10)
            F, G = random_family(rng, n, 40), random_family(rng, n, 40)
            f = random_values(rng, len(F))
            out = down_zeta_on_targets(DirectBuilder(BIGINT), direct(F, f), G)
            assert [v or 0 for v in out.values] == brute_zeta('down', F, f, G).values

    def test_gate_bound(self, rng):
        """Test that the circuit has at most (n+1)(|F| + |down G|) gates."""
        for _ in range(10):
            n = rng.randint(1, 10)
            F, G = random_family(rng, n, 60), random_family(rng, n, 60)
            b = CircuitBuilder(len(F))
            down_zeta_on_targets(b, IndexedFunction(F, [b.input(i) for i in range(len(F))]), G)
            assert b.gate_count <= (n + 1) * (len(F) + len(down_closure(G)))


class TestComplementRoutes:
    """Test the complement-based variants."""

    def test_variant_4_example(self):
        """Test down-zeta of {0} at {0, 1}."""
        out = zeta_by_complement(4, DirectBuilder(BIGINT), direct(fam([0]), [1]), fam([0, 1]), 2)
        assert out.values == [1]

    def test_variant_2_example(self):
        """Test up-zeta of {0, 1} at {0}."""
        out = zeta_by_complement(2, DirectBuilder(BIGINT), direct(fam([0, 1]), [1]), fam([0]), 2)
        assert out.values == [1]

    def test_variant_2_matches_brute_force(self, rng):
        """Test the complement up-zeta route against literal sums at n = 10."""
        for _ in range(10):
            F, G = random_family(rng, 10, 50), random_family(rng, 10, 50)
            f = random_values(rng, len(F))
            out = zeta_by_complement(2, DirectBuilder(BIGINT), direct(F, f), G, 10)
            assert [v or 0 for v in out.values] == brute_zeta('up', F, f, G).values

    def test_unsupported_kind(self):
        """Test that only kinds 2 and 4 have a complement route."""
        with pytest.raises(ArgumentError):
            zeta_by_complement(3, DirectBuilder(BIGINT), direct(fam([0]), [1]), fam([0]), 1)

    def test_duality(self, rng):
        """Test that variant 1 on complemented inputs equals variant 4 on the originals."""
        n = 8
        full = (1 << n) - 1
        for _ in range(10):
            F, G = random_family(rng, n, 30), random_family(rng, n, 30)
            f = dict(zip(F, random_values(rng, len(F))))
            comp_F, comp_G = complement_family(F, n), complement_family(G, n)
            v1 = zeta_transform(1, comp_F, [f[full ^ m] for m in comp_F], comp_G, BIGINT, n)
            v4 = zeta_transform(4, F, [f[m] for m in F], G, BIGINT, n)
            assert {full ^ m: v for m, v in v1.items()} == v4.as_dict()


class TestTrimmedZeta:
    """Test the four variants through the common entry points."""

    @pytest.mark.parametrize("kind", ZETA_VARIANTS)
    def test_all_variants_match_brute_force(self, kind):
        """Test every variant against literal sums, over two rings."""
        rng = random.Random(1000 + kind)
        direction = 'up' if kind in (1, 2) else 'down'
        for ring in (BIGINT, ModPrimeRing(10007)):
            for _ in range(15):
                n = rng.randint(1, 9)
                F, G = random_family(rng, n, 30), random_family(rng, n, 30)
                f = [ring.from_integer(v) for v in random_values(rng, len(F))]
                out = zeta_transform(kind, F, f, G, ring, n)
                assert out.values == brute_zeta(direction, F, f, G, ring).values

    @pytest.mark.parametrize("kind", ZETA_VARIANTS)
    def test_circuit_matches_direct(self, kind, rng):
        """Test that the built circuit evaluates to the direct result."""
        F, G = random_family(rng, 6, 20), random_family(rng, 6, 20)
        f = random_values(rng, len(F))
        circuit = build_zeta_circuit(kind, F, G, 6)
        assert evaluate(circuit, f, BIGINT) == zeta_transform(kind, F, f, G, BIGINT, 6).as_dict()
        assert stats(circuit).inputs == len(F)

    def test_empty_targets(self):
        """Test that G = {} gives an empty result."""
        assert len(zeta_transform(3, fam([0]), [1], SetFamily(), BIGINT, 1).values) == 0

    def test_empty_family(self):
        """Test that F = {} gives zeros on G."""
        assert zeta_transform(2, SetFamily(), [], fam([0], [1]), BIGINT, 2).values == [0, 0]

    def test_unknown_variant(self):
        """Test that kinds outside 1..4 are refused."""
        with pytest.raises(ArgumentError):
            trimmed_zeta(5, DirectBuilder(BIGINT), direct(fam([0]), [1]), fam([0]))

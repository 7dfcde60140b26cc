"""
Tests for the fast intersection transform and its counting applications.
"""

import random

import pytest

from src.errors import ArgumentError, CapacityError
from src.models.set_family import SetFamily, popcount
from src.models.tables import IndexedFunction
from src.oracle import (
    brute_count_disjoint,
    brute_count_subsets,
    brute_intersection_transform,
)
from src.transforms.itrans import (
    binomial,
    build_intersection_circuit,
    count_disjoint,
    count_intersecting,
    count_subsets_of,
    intersection_transform,
    pascal_matrices,
)
from src.transforms.zeta import down_zeta_on_targets, up_zeta_on_downclosure
from src.utils.circuit_builder import DirectBuilder, evaluate, stats
from src.utils.lattice import all_k_subsets, down_closure
from src.utils.rings import BIGINT, POLYNOMIALS, ModPrimeRing

from conftest import random_family, random_values


def fam(*sets, n=None):
    return SetFamily.from_sets(sets, n)


def matmul(A, B):
    size = range(len(A))
    return [[sum(A[i][k] * B[k][j] for k in size) for j in size] for i in size]


def identity(n):
    return [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]


class TestBinomial:
    """Test the extended binomial coefficient."""

    @pytest.mark.parametrize("p,q,expected", [
        (5, 2, 10), (4, 0, 1), (2, 3, 0), (-1, 3, -1), (-2, 2, 3), (7, -1, 0),
    ])
    def test_values(self, p, q, expected):
        """Test the product formula on positive, negative and out-of-range arguments."""
        assert binomial(p, q) == expected


class TestPascalMatrices:
    """Test the binomial matrix pair."""

    def test_n_2(self):
        """Test the explicit 3 x 3 matrices."""
        pair = pascal_matrices(2)
        assert [list(r) for r in pair.A] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
        assert [list(r) for r in pair.B] == [[1, -1, 1], [0, 1, -2], [0, 0, 1]]

    def test_n_0(self):
        """Test the 1 x 1 case."""
        pair = pascal_matrices(0)
        assert pair.A == ((1,),) and pair.B == ((1,),)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_mutual_inverses(self, n):
        """Test A B = B A = I."""
        pair = pascal_matrices(n)
        assert matmul(pair.A, pair.B) == identity(n)
        assert matmul(pair.B, pair.A) == identity(n)

    @pytest.mark.parametrize("n", [-1, 65])
    def test_out_of_range(self, n):
        """Test that sizes outside 0..64 are refused."""
        with pytest.raises(ArgumentError):
            pascal_matrices(n)


class TestIntersectionTransformExamples:
    """Test small hand-checked instances."""

    def test_two_sets_two_targets(self):
        """Test F = {{0}, {0,1}} against G = {{0}, {1}}."""
        table = intersection_transform(fam([0], [0, 1]), [1, 1], fam([0], [1]), 2)
        assert table.column(0b01) == [0, 2, 0]
        assert table.column(0b10) == [1, 1, 0]

    def test_empty_set_only(self):
        """Test that f on the empty set lands in row 0 for every target."""
        G = fam([0], [1, 2], [0, 1, 2])
        table = intersection_transform(SetFamily([0], 3), [7], G, 3)
        for mask in G:
            assert table.column(mask) == [7, 0, 0, 0]

    def test_pairs_of_four(self):
        """Test F = G = all 2-subsets of 4 elements."""
        F = all_k_subsets(4, 2)
        table = intersection_transform(F, [1] * len(F), F, 4)
        for mask in F:
            assert table.column(mask) == [1, 4, 1, 0, 0]

    def test_circuit_matches_direct(self):
        """Test that evaluating the circuit equals direct evaluation."""
        F = all_k_subsets(4, 2)
        circuit, labels = build_intersection_circuit(F, F, 4)
        results = evaluate(circuit, [1] * len(F), BIGINT)
        direct = intersection_transform(F, [1] * len(F), F, 4)
        for j, mask, label in labels.entries():
            assert results[label] == direct.value(j, mask)

    def test_empty_families(self):
        """Test F = {} and G = {}."""
        assert intersection_transform(SetFamily(), [], fam([0]), 1).column(1) == [0, 0]
        assert intersection_transform(fam([0]), [3], SetFamily(), 1).rows == {0: [], 1: []}

    def test_ground_set_too_small(self):
        """Test that an explicit n must hold both families."""
        with pytest.raises(ArgumentError):
            intersection_transform(fam([3]), [1], fam([0]), 2)

    def test_mismatched_ground_sets(self):
        """Test that F and G declared over different ground sets are refused."""
        with pytest.raises(ArgumentError):
            build_intersection_circuit(SetFamily([1], 2), SetFamily([1], 5))
        with pytest.raises(ArgumentError):
            intersection_transform(SetFamily([1], 2), [1], SetFamily([1], 3), 3)

    def test_value_count_mismatch(self):
        """Test that f must align with F."""
        with pytest.raises(ArgumentError):
            intersection_transform(fam([0], [1]), [1], fam([0]), 2)

    def test_capacity(self):
        """Test that ground sets above 32 elements are refused."""
        with pytest.raises(CapacityError):
            intersection_transform(fam([0]), [1], fam([0]), 33)


class TestIntersectionTransformOracle:
    """Test exact agreement with the pairwise definition."""

    @pytest.mark.property_based
    @pytest.mark.parametrize("seed", range(100))
    def test_matches_brute_force(self, seed):
        """Test random instances over the integers and modulo a prime."""
        rng = random.Random(seed)
        n = rng.randint(0, 12)
        F, G = random_family(rng, n, 200), random_family(rng, n, 200)
        f = random_values(rng, len(F))
        fast = intersection_transform(F, f, G, n)
        assert fast.rows == brute_intersection_transform(F, f, G, n).rows

        ring = ModPrimeRing(2147483647)
        fm = [ring.from_integer(v) for v in f]
        assert intersection_transform(F, fm, G, n, ring).rows == \
            brute_intersection_transform(F, fm, G, n, ring).rows

    def test_row_mass_conservation(self, rng):
        """Test that every X lands in exactly one row for each Y."""
        for _ in range(20):
            n = rng.randint(1, 10)
            F, G = random_family(rng, n, 50), random_family(rng, n, 50)
            f = random_values(rng, len(F))
            table = intersection_transform(F, f, G, n)
            for mask in G:
                assert sum(table.column(mask)) == sum(f)

    def test_polynomial_values(self, rng):
        """Test that the transform works over the polynomial ring."""
        F, G = random_family(rng, 6, 20), random_family(rng, 6, 20)
        polys = [POLYNOMIALS.from_integer(v).shift(i % 3) for i, v in enumerate(random_values(rng, len(F)))]
        fast = intersection_transform(F, polys, G, 6, POLYNOMIALS)
        assert fast.rows == brute_intersection_transform(F, polys, G, 6, POLYNOMIALS).rows

    def test_ranked_down_zeta_is_binomial_image(self, rng):
        """Test y(Y) = A x(Y) for the intermediate rank sums."""
        for _ in range(10):
            n = rng.randint(1, 8)
            F, G = random_family(rng, n, 30), random_family(rng, n, 30)
            if not len(F) or not len(G):
                continue
            f = random_values(rng, len(F))
            builder = DirectBuilder(BIGINT)
            g = up_zeta_on_downclosure(builder, IndexedFunction(F, f))
            x = intersection_transform(F, f, G, n)
            A = pascal_matrices(n).A
            for i in range(n + 1):
                ranked = IndexedFunction(g.domain, [v if popcount(m) == i else None for m, v in g.items()])
                y = down_zeta_on_targets(builder, ranked, G)
                for mask, value in y.items():
                    expected = sum(A[i][j] * x.value(j, mask) for j in range(n + 1))
                    assert (value or 0) == expected

    def test_row_slice(self, rng):
        """Test that a requested slice equals the same rows of the full table."""
        F, G = random_family(rng, 9, 60), random_family(rng, 9, 60)
        f = random_values(rng, len(F))
        full = intersection_transform(F, f, G, 9)
        sliced = intersection_transform(F, f, G, 9, rows=[1, 3])
        assert sorted(sliced.rows) == [1, 3]
        assert sliced.rows[1] == full.rows[1] and sliced.rows[3] == full.rows[3]

    def test_row_out_of_range(self):
        """Test that rows outside 0..n are refused."""
        with pytest.raises(ArgumentError):
            intersection_transform(fam([0]), [1], fam([0]), 1, rows=[2])


class TestGateCount:
    """Test the circuit size bound."""

    def test_bound_on_random_instances(self, rng):
        """Test gates <= 2 (n+1)^2 (|down F| + |down G| + |G|)."""
        for _ in range(15):
            n = rng.randint(1, 10)
            F, G = random_family(rng, n, 80), random_family(rng, n, 80)
            circuit, _ = build_intersection_circuit(F, G, n)
            bound = 2 * (n + 1) ** 2 * (len(down_closure(F)) + len(down_closure(G)) + len(G))
            assert stats(circuit).gates <= max(bound, len(G) * (n + 1) + 1)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [14, 16, 18, 20])
    def test_scaling_normalized_by_down_closures(self, n):
        """Test that gates / (n^2 (|down F| + |down G|)) stays at most 1 for quarter-size sets."""
        F = all_k_subsets(n, n // 4)
        circuit, _ = build_intersection_circuit(F, F, n)
        closed = len(down_closure(F))
        assert stats(circuit).gates / (n * n * 2 * closed) <= 1.0


class TestCountingApplications:
    """Test disjointness and containment counts."""

    def test_disjoint_singletons(self):
        """Test that two of three singletons avoid {0}."""
        assert count_disjoint(fam([0], [1], [2]), fam([0]), 3) == {0b001: 2}

    def test_disjoint_empty_member(self):
        """Test that the empty set is disjoint from everything."""
        assert count_disjoint(SetFamily([0], 2), fam([0, 1]), 2) == {0b11: 1}

    def test_subsets_all_fit(self):
        """Test that every member fits in the full set."""
        assert count_subsets_of(fam([0], [1], [0, 1]), fam([0, 1]), 2) == {0b11: 3}

    def test_subsets_one_fits(self):
        """Test that only {0} fits in {0}."""
        assert count_subsets_of(fam([0], [1], [0, 1]), fam([0]), 2) == {0b01: 1}

    def test_random_against_pairwise(self, rng):
        """Test both counts against pairwise enumeration at n = 10."""
        for _ in range(10):
            F, G = random_family(rng, 10, 80), random_family(rng, 10, 80)
            assert count_disjoint(F, G, 10) == brute_count_disjoint(F, G)
            assert count_subsets_of(F, G, 10) == brute_count_subsets(F, G)

    def test_count_intersecting(self, rng):
        """Test exact intersection sizes against pairwise enumeration."""
        F, G = random_family(rng, 8, 40), random_family(rng, 8, 40)
        for j in range(9):
            expected = {Y: sum(1 for X in F if popcount(X & Y) == j) for Y in G}
            assert count_intersecting(F, G, j, 8) == expected

    def test_count_intersecting_out_of_range(self):
        """Test that j above n is refused."""
        with pytest.raises(ArgumentError):
            count_intersecting(fam([0]), fam([0]), 3, 2)

import random

import pytest
from hypothesis import given, strategies as st

from fullrank.linalg import (
    IntMatrix,
    centered_residue,
    det_exact,
    det_mod_p,
    select_columns,
)
from oracles import perm_det

ODD_PRIMES = [3, 5, 7, 11, 13]


class TestCenteredResidue:
    def test_spot_values(self):
        assert centered_residue(3, 5) == -2
        assert centered_residue(0, 7) == 0
        assert centered_residue(10, 13) == -3

    @pytest.mark.parametrize("p", [4, 2, 0, -5, 1])
    def test_bad_modulus(self, p):
        with pytest.raises(ValueError):
            centered_residue(1, p)

    @given(st.integers(-10**9, 10**9), st.sampled_from(ODD_PRIMES + [17, 101, 9]))
    def test_congruent_and_centered(self, x, p):
        # p only needs to be odd here, not prime
        r = centered_residue(x, p)
        assert (r - x) % p == 0
        assert 2 * abs(r) <= p - 1


class TestDetExact:
    def test_identity(self):
        eye = IntMatrix.from_rows([[1 if i == j else 0 for j in range(4)]
                                   for i in range(4)])
        assert det_exact(eye) == 1

    def test_2x2(self):
        assert det_exact(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_vandermonde_nodes_123(self):
        # product formula (2-1)(3-1)(3-2) = 2
        V = IntMatrix.from_rows([[1, 1, 1], [1, 2, 3], [1, 4, 9]])
        assert det_exact(V) == 2

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det_exact(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    def test_matches_permutation_expansion(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert det_exact(IntMatrix.from_rows(rows)) == perm_det(rows)

    def test_row_swap_negates(self):
        rng = random.Random(8)
        for _ in range(100):
            n = rng.randint(2, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            swapped = list(rows)
            swapped[0], swapped[1] = swapped[1], swapped[0]
            assert det_exact(IntMatrix.from_rows(swapped)) == \
                -det_exact(IntMatrix.from_rows(rows))

    def test_repeated_row_is_singular(self):
        rng = random.Random(9)
        for _ in range(50):
            n = rng.randint(2, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            rows[-1] = list(rows[0])
            assert det_exact(IntMatrix.from_rows(rows)) == 0

    def test_big_entries_no_overflow(self):
        big = 10 ** 30
        M = IntMatrix.from_rows([[big, 1], [1, big]])
        assert det_exact(M) == big * big - 1


class TestDetModP:
    def test_identity(self):
        eye = IntMatrix.from_rows([[1 if i == j else 0 for j in range(3)]
                                   for i in range(3)])
        assert det_mod_p(eye, 5) == 1

    def test_2x2(self):
        assert det_mod_p(IntMatrix.from_rows([[1, 1], [1, 2]]), 5) == 1

    def test_equal_rows(self):
        assert det_mod_p(IntMatrix.from_rows([[1, 1], [1, 1]]), 7) == 0

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            det_mod_p(IntMatrix.from_rows([[1, 0], [0, 1]]), 6)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det_mod_p(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]]), 5)

    def test_agrees_with_exact_mod_p(self):
        rng = random.Random(10)
        for _ in range(300):
            n = rng.randint(1, 4)
            p = rng.choice(ODD_PRIMES)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            M = IntMatrix.from_rows(rows)
            assert det_mod_p(M, p) == det_exact(M) % p


class TestSelectColumns:
    def setup_method(self):
        self.A = IntMatrix.from_rows(
            [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]], entry_bound=9)

    def test_first_and_last(self):
        sub = select_columns(self.A, [0, 4])
        assert sub.to_rows() == [[0, 4], [5, 9]]

    def test_identity_selection(self):
        assert select_columns(self.A, range(5)) == self.A

    def test_single_column(self):
        sub = select_columns(self.A, [2])
        assert sub.to_rows() == [[2], [7]]
        assert sub.column(0) == self.A.column(2)

    def test_annotations_inherited(self):
        sub = select_columns(self.A, [1, 3])
        assert sub.entry_bound == 9
        assert sub.modulus is None

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            select_columns(self.A, [0, 5])

    def test_duplicate(self):
        with pytest.raises(ValueError):
            select_columns(self.A, [1, 1])


class TestIntMatrixInvariants:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_entry_bound_enforced(self):
        with pytest.raises(ValueError):
            IntMatrix(1, 2, (1, 5), entry_bound=4)

    def test_modulus_requires_centered_entries(self):
        with pytest.raises(ValueError):
            IntMatrix(1, 2, (3, 0), modulus=5)

    def test_modulus_must_be_odd_prime(self):
        with pytest.raises(ValueError):
            IntMatrix(1, 2, (1, 0), modulus=9)

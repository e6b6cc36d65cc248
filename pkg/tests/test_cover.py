import itertools
import math

import pytest

from fullrank.construct import construct_vandermonde
from fullrank.cover import (
    CoverInstance,
    columns_on_hyperplane,
    cover_lower_bound,
    min_cover_bruteforce,
    verify_cover,
)
from fullrank.errors import BudgetExceededError
from fullrank.intmath import primitive_vector
from fullrank.linalg import IntMatrix


def primitive_classes(m, k):
    """All primitive sign-normalized normals with ||n||_inf <= k."""
    out = set()
    for v in itertools.product(range(-k, k + 1), repeat=m):
        if any(v):
            out.add(primitive_vector(v))
    return sorted(out)


def subset_cover_oracle(m, k):
    """Minimum cover by subset enumeration in increasing size."""
    pts = [
        p for p in itertools.product(range(-k, k + 1), repeat=m)
        if any(p)
    ]
    cands = primitive_classes(m, k)
    cover = {
        n: frozenset(p for p in pts
                     if sum(a * b for a, b in zip(n, p)) == 0)
        for n in cands
    }
    universe = frozenset(pts)
    for size in range(1, len(cands) + 1):
        for subset in itertools.combinations(cands, size):
            got = frozenset()
            for n in subset:
                got |= cover[n]
            if got == universe:
                return size
    raise AssertionError("candidate set cannot cover the grid")


class TestCoverLowerBound:
    @pytest.mark.parametrize("m,k,expected", [(2, 4, 8), (2, 2, 2), (3, 3, 2)])
    def test_spot_values(self, m, k, expected):
        assert cover_lower_bound(m, k) == expected

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cover_lower_bound(2, 1)  # needs k >= m
        with pytest.raises(ValueError):
            cover_lower_bound(1, 5)

    def test_matches_scan_oracle(self):
        for m in (2, 3, 4):
            for k in range(m, 13):
                km = k ** m
                q = 1
                while ((2 * m - 2) * q) ** (m - 1) < km:
                    q += 1
                assert cover_lower_bound(m, k) == q

    def test_exact_at_integer_boundary(self):
        # k=4, m=2: 16/2 = 8 exactly; a float ceiling could give 9
        assert cover_lower_bound(2, 4) == 8


class TestVerifyCover:
    def test_axes_and_diagonals_cover_radius_one(self):
        inst = CoverInstance(2, 1, ((1, 0), (0, 1), (1, -1), (1, 1)))
        check = verify_cover(inst)
        assert check.accepted
        assert check.points_checked == 9

    def test_axes_only_rejected_at_lex_first(self):
        inst = CoverInstance(2, 1, ((1, 0), (0, 1)))
        check = verify_cover(inst)
        assert not check.accepted
        assert check.uncovered == (-1, -1)

    def test_origin_only_grid(self):
        inst = CoverInstance(2, 0, ((1, 0),))
        assert verify_cover(inst).accepted

    def test_empty_normals_reject_immediately(self):
        inst = CoverInstance(2, 1, ())
        check = verify_cover(inst)
        assert not check.accepted
        assert check.uncovered == (-1, -1)

    def test_budget(self):
        inst = CoverInstance(2, 100, ((1, 0),))
        with pytest.raises(BudgetExceededError):
            verify_cover(inst, budget=100)

    def test_normals_stored_primitive(self):
        inst = CoverInstance(2, 1, ((-2, 4), (0, -3)))
        assert inst.normals == ((1, -2), (0, 1))

    def test_zero_normal_rejected(self):
        with pytest.raises(ValueError):
            CoverInstance(2, 1, ((0, 0),))


class TestColumnsOnHyperplane:
    def test_vandermonde_horizontal_normal(self):
        A, _ = construct_vandermonde(2, 3)
        count, cols = columns_on_hyperplane(A, (0, 1))
        assert (count, cols) == (1, (4,))  # only the column (1, 0)

    def test_no_orthogonal_columns(self):
        A, _ = construct_vandermonde(2, 3)
        count, cols = columns_on_hyperplane(A, (3, 1))
        assert (count, cols) == (0, ())

    def test_duplicated_column_exceeds_duality_bound(self):
        A = IntMatrix.from_rows([[1, 1], [0, 0]])
        count, _ = columns_on_hyperplane(A, (0, 1))
        assert count == 2  # > m - 1 = 1: certifies a degenerate pair

    def test_zero_normal(self):
        A, _ = construct_vandermonde(2, 3)
        with pytest.raises(ValueError):
            columns_on_hyperplane(A, (0, 0))

    def test_duality_for_construction(self):
        # no hyperplane catches m or more columns of a valid construction
        for m, k in [(2, 3), (2, 5), (3, 4)]:
            A, _ = construct_vandermonde(m, k)
            for n in primitive_classes(m, 2 * k + 1):
                count, _ = columns_on_hyperplane(A, n)
                assert count <= m - 1


class TestMinCover:
    def test_radius_one(self):
        size, witness = min_cover_bruteforce(2, 1)
        assert size == 4
        assert verify_cover(CoverInstance(2, 1, witness)).accepted

    def test_radius_zero(self):
        assert min_cover_bruteforce(2, 0)[0] == 1

    def test_radius_two_matches_direction_count(self):
        # in the plane each point determines its orthogonal line uniquely,
        # so the minimum is the number of distinct primitive directions
        size, witness = min_cover_bruteforce(2, 2)
        assert size == len(primitive_classes(2, 2)) == 8
        assert verify_cover(CoverInstance(2, 2, witness)).accepted

    def test_matches_subset_oracle(self):
        assert min_cover_bruteforce(2, 1)[0] == subset_cover_oracle(2, 1)
        assert min_cover_bruteforce(3, 1)[0] == subset_cover_oracle(3, 1) == 4

    def test_three_dims_witness_covers(self):
        size, witness = min_cover_bruteforce(3, 1)
        assert size == 4
        assert verify_cover(CoverInstance(3, 1, witness)).accepted

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            min_cover_bruteforce(2, 5)
        with pytest.raises(BudgetExceededError):
            min_cover_bruteforce(3, 2)

    def test_dominates_lower_bound_where_defined(self):
        for k in (2, 3, 4):
            assert min_cover_bruteforce(2, k)[0] >= cover_lower_bound(2, k)


class TestCountingConsequence:
    def test_cover_containing_all_columns_obeys_column_count(self):
        # an accepted cover whose lines contain every column of a valid
        # construction needs at least ceil(d / (m-1)) hyperplanes
        A, _ = construct_vandermonde(2, 3)  # entries within radius 2
        normals = primitive_classes(2, 2)
        inst = CoverInstance(2, 2, tuple(normals))
        assert verify_cover(inst).accepted
        for j in range(A.cols):
            col = A.column(j)
            assert any(sum(a * b for a, b in zip(n, col)) == 0
                       for n in inst.normals)
        assert len(inst.normals) >= math.ceil(A.cols / (A.rows - 1))

import itertools
import random
from fractions import Fraction

import pytest

from fullrank.construct import construct, construct_vandermonde
from fullrank.errors import BudgetExceededError
from fullrank.linalg import IntMatrix
from fullrank.recover import (
    Measurement,
    SparseSignal,
    decode,
    encode,
    guarantee_holds,
    scale_matrix,
)

F = Fraction


@pytest.fixture
def vand23():
    return construct_vandermonde(2, 3)[0]


class TestSparseSignal:
    def test_dense_round_trip(self):
        x = SparseSignal.from_dense([0, 3, 0, -1, 0])
        assert (x.support, x.values) == ((1, 3), (3, -1))
        assert x.to_dense() == [0, 3, 0, -1, 0]
        assert x.sparsity == 2

    def test_rejects_zero_value(self):
        with pytest.raises(ValueError):
            SparseSignal(4, (1,), (0,))

    def test_rejects_unsorted_support(self):
        with pytest.raises(ValueError):
            SparseSignal(4, (2, 1), (1, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            SparseSignal(4, (4,), (1,))


class TestEncode:
    def test_zero_signal_zero_noise(self, vand23):
        x = SparseSignal.from_dense([0] * 5)
        meas = encode(vand23, x, [0, 0])
        assert meas.b == (F(0), F(0))

    def test_exact_rational_measurement(self, vand23):
        x = SparseSignal(5, (2,), (2,))
        meas = encode(vand23, x, (F(3, 10), F(-1, 5)))
        assert meas.b == (F(23, 10), F(-21, 5))
        assert meas.in_guarantee

    def test_boundary_noise_flagged_out(self, vand23):
        x = SparseSignal(5, (2,), (2,))
        meas = encode(vand23, x, (F(1, 2), F(0)))
        assert not meas.in_guarantee  # strictly-below threshold

    def test_dimension_mismatch(self, vand23):
        with pytest.raises(ValueError):
            encode(vand23, SparseSignal(4, (0,), (1,)), [0, 0])
        with pytest.raises(ValueError):
            encode(vand23, SparseSignal(5, (0,), (1,)), [0, 0, 0])

    def test_decimal_strings_parse_exactly(self, vand23):
        x = SparseSignal(5, (2,), (2,))
        meas = encode(vand23, x, ("0.3", "-0.2"))
        assert meas.b == (F(23, 10), F(-21, 5))


class TestDecode:
    def test_recovers_spot_example(self, vand23):
        meas = Measurement(b=(F(23, 10), F(-21, 5)), noise=())
        result = decode(vand23, meas, s=1, amp_bound=3)
        assert not result.ambiguous
        assert result.signal == SparseSignal(5, (2,), (2,))
        assert result.residual == F(3, 10)
        assert result.candidates == 35

    def test_zero_measurement_gives_zero_signal(self, vand23):
        result = decode(vand23, (0, 0), s=1, amp_bound=3)
        assert result.signal == SparseSignal.from_dense([0] * 5)
        assert result.residual == 0

    def test_equal_columns_ambiguous(self):
        A = IntMatrix.from_rows([[2, 2]])
        result = decode(A, (F(2),), s=1, amp_bound=1)
        assert result.ambiguous
        assert len(result.minimizers) == 2
        assert result.residual == 0

    def test_budget_refusal_reports_count(self, vand23):
        with pytest.raises(BudgetExceededError) as exc:
            decode(vand23, (0, 0), s=2, amp_bound=3, budget=10)
        assert exc.value.required == 10 * 7 ** 2

    def test_sparsity_guarantee_flag(self, vand23):
        assert decode(vand23, (0, 0), s=1, amp_bound=1).sparsity_in_guarantee
        assert not decode(vand23, (0, 0), s=2, amp_bound=1).sparsity_in_guarantee

    def test_round_trip_small_grid(self, vand23):
        # all 1-sparse signals, a grid of in-guarantee noises: exact recovery
        noises = [
            (F(0), F(0)),
            (F(49, 100), F(-49, 100)),
            (F(-2, 5), F(1, 4)),
            (F(1, 3), F(-1, 3)),
        ]
        for j in range(5):
            for v in (-2, -1, 1, 2):
                dense = [0] * 5
                dense[j] = v
                x = SparseSignal.from_dense(dense)
                for e in noises:
                    meas = encode(vand23, x, e)
                    result = decode(vand23, meas, s=1, amp_bound=2)
                    assert not result.ambiguous
                    assert result.signal == x

    def test_out_of_guarantee_noise_still_returns_minimizer(self, vand23):
        x = SparseSignal(5, (0,), (1,))
        meas = encode(vand23, x, (F(3, 4), F(0)))  # noise 3/4 >= 1/2
        assert not meas.in_guarantee
        result = decode(vand23, meas, s=1, amp_bound=2)
        assert result.minimizers  # no correctness claim, just the minimizers


class TestSeparation:
    def test_m_sparse_images_have_unit_sup_norm(self):
        # nonzero z with at most m nonzeros, |z_i| <= 2B: ||Az||_inf >= 1
        A = construct(2, 3, 4)
        cols = [A.column(j) for j in range(4)]
        for z in itertools.product(range(-4, 5), repeat=4):
            nz = sum(1 for c in z if c)
            if nz == 0 or nz > 2:
                continue
            az0 = sum(cols[j][0] * z[j] for j in range(4))
            az1 = sum(cols[j][1] * z[j] for j in range(4))
            assert max(abs(az0), abs(az1)) >= 1

    def test_scaled_matrix_separation(self):
        A = construct(2, 3, 4)
        S = scale_matrix(A, 3)  # factor 6
        cols = [S.column(j) for j in range(4)]
        for z in itertools.product(range(-2, 3), repeat=4):
            nz = sum(1 for c in z if c)
            if nz == 0 or nz > 2:
                continue
            az = [sum(cols[j][i] * z[j] for j in range(4)) for i in range(2)]
            assert max(abs(v) for v in az) >= 6


class TestScaleMatrix:
    def test_half_is_identity(self, vand23):
        assert scale_matrix(vand23, F(1, 2)) == vand23

    def test_integer_scale(self):
        A = IntMatrix.from_rows([[1, -2], [0, 1]], entry_bound=2)
        S = scale_matrix(A, 3)
        assert S.to_rows() == [[6, -12], [0, 6]]
        assert S.entry_bound == 12
        assert S.modulus is None

    def test_non_integer_double_rejected(self, vand23):
        with pytest.raises(ValueError):
            scale_matrix(vand23, F(1, 3))

    def test_argmin_invariant_residual_scales(self, vand23):
        x = SparseSignal(5, (2,), (2,))
        e = (F(3, 10), F(-1, 5))
        meas = encode(vand23, x, e)
        S = scale_matrix(vand23, 2)  # factor 4
        scaled_b = tuple(4 * t for t in meas.b)
        base = decode(vand23, meas, s=1, amp_bound=3)
        scaled = decode(S, scaled_b, s=1, amp_bound=3)
        assert scaled.signal == base.signal
        assert scaled.residual == 4 * base.residual


class TestGuaranteeHolds:
    def test_inside(self):
        assert guarantee_holds(4, 2, (F(1, 4), 0, 0, 0))

    def test_sparsity_too_high(self):
        assert not guarantee_holds(4, 3, (0, 0, 0, 0))

    def test_boundary_excluded(self):
        assert not guarantee_holds(2, 1, (F(1, 2), 0))

    def test_decimal_string_noise(self):
        assert guarantee_holds(2, 1, ("0.49", "-0.49"))
        assert not guarantee_holds(2, 1, ("0.5", "0"))


class TestRandomRoundTrip:
    def test_seeded_recovery_sweep(self):
        # small version of the full acceptance sweep: random s-sparse x,
        # random in-guarantee rational noise, exact recovery
        A = construct(3, 4, 5)
        rng = random.Random(5)
        for _ in range(60):
            s = 1  # m = 3 allows s <= 1
            dense = [0] * 5
            support = rng.sample(range(5), s)
            for j in support:
                dense[j] = rng.choice([-2, -1, 1, 2])
            x = SparseSignal.from_dense(dense)
            e = tuple(F(rng.randint(-49, 49), 100) for _ in range(3))
            result = decode(A, encode(A, x, e), s=1, amp_bound=2)
            assert not result.ambiguous
            assert result.signal == x

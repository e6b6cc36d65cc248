"""Integer sparse recovery against a bounded-entry measurement matrix.

Measurements are exact rationals (b = Ax + e with Fraction arithmetic)
and the decoder is an exhaustive minimizer of the sup-norm residual over
all candidate sparse integer vectors. When every m columns of A are
linearly independent, any nonzero (2s)-sparse integer difference z
satisfies ||Az||_inf >= 1, so with 2s <= m and noise below 1/2 the true
signal is the unique minimizer.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import BudgetExceededError
from .linalg import IntMatrix

DEFAULT_BUDGET = 10_000_000

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SparseSignal:
    """Integer vector given by its support and nonzero values."""

    dimension: int
    support: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(int(i) for i in self.support))
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.support) != len(self.values):
            raise ValueError("support and values must have equal length")
        if any(v == 0 for v in self.values):
            raise ValueError("values on the support must be nonzero")
        if any(not 0 <= i < self.dimension for i in self.support):
            raise ValueError("support index out of range")
        if any(a >= b for a, b in zip(self.support, self.support[1:])):
            raise ValueError("support must be strictly increasing")

    @property
    def sparsity(self) -> int:
        return len(self.support)

    @classmethod
    def from_dense(cls, vec) -> "SparseSignal":
        vec = [int(v) for v in vec]
        support = tuple(i for i, v in enumerate(vec) if v != 0)
        return cls(len(vec), support, tuple(vec[i] for i in support))

    def to_dense(self) -> list[int]:
        out = [0] * self.dimension
        for i, v in zip(self.support, self.values):
            out[i] = v
        return out


@dataclass(frozen=True)
class Measurement:
    """Exact rational measurement vector with the noise that produced it."""

    b: tuple[Fraction, ...]
    noise: tuple[Fraction, ...]
    noise_bound: Fraction = HALF

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "noise", tuple(Fraction(x) for x in self.noise))
        bound = Fraction(self.noise_bound)
        if bound <= 0:
            raise ValueError("noise bound must be positive")
        object.__setattr__(self, "noise_bound", bound)

    @property
    def noise_inf(self) -> Fraction:
        return max((abs(x) for x in self.noise), default=Fraction(0))

    @property
    def in_guarantee(self) -> bool:
        """Strictly below the bound; equality is outside the guarantee."""
        return self.noise_inf < self.noise_bound


@dataclass(frozen=True)
class DecodeResult:
    """All global minimizers of ||b - Ay||_inf over the candidate set."""

    minimizers: tuple[SparseSignal, ...]
    residual: Fraction
    sparsity_in_guarantee: bool  # 2s <= m held for this decode
    candidates: int

    @property
    def ambiguous(self) -> bool:
        return len(self.minimizers) != 1

    @property
    def signal(self) -> SparseSignal | None:
        return self.minimizers[0] if len(self.minimizers) == 1 else None


def encode(A: IntMatrix, x: SparseSignal, e,
           noise_bound=HALF) -> Measurement:
    """Exact measurement b = Ax + e; use Measurement.in_guarantee to see
    whether the noise stayed strictly inside the bound."""
    if x.dimension != A.cols:
        raise ValueError(
            f"signal dimension {x.dimension} != matrix columns {A.cols}")
    e = tuple(Fraction(t) for t in e)
    if len(e) != A.rows:
        raise ValueError(f"noise length {len(e)} != matrix rows {A.rows}")
    dense = x.to_dense()
    b = tuple(
        sum(A.entry(i, j) * dense[j] for j in range(A.cols)) + e[i]
        for i in range(A.rows)
    )
    return Measurement(b=b, noise=e, noise_bound=noise_bound)


def decode(A: IntMatrix, b, s: int, amp_bound: int,
           budget: int = DEFAULT_BUDGET) -> DecodeResult:
    """Exhaustive sup-norm decoder over s-sparse integer vectors.

    Enumerates every support of size s and every value assignment with
    |y_i| <= amp_bound (zeros included, so lower sparsities are covered)
    and returns all distinct minimizers of ||b - Ay||_inf under exact
    comparison. Ties are reported, never broken silently: inside the
    guarantee regime they cannot occur, so an ambiguity is diagnostic.
    """
    target = b.b if isinstance(b, Measurement) else tuple(Fraction(t) for t in b)
    m, d = A.rows, A.cols
    if len(target) != m:
        raise ValueError(f"measurement length {len(target)} != matrix rows {m}")
    if not 0 <= s <= d:
        raise ValueError(f"sparsity s={s} outside [0, {d}]")
    if amp_bound < 1:
        raise ValueError("amplitude bound must be >= 1")
    n_candidates = math.comb(d, s) * (2 * amp_bound + 1) ** s
    if n_candidates > budget:
        raise BudgetExceededError(n_candidates, budget, what="decoder enumeration")

    # clear denominators once so the inner loop is pure integer arithmetic
    denom = math.lcm(*(t.denominator for t in target))
    tint = [int(t * denom) for t in target]
    cols = [A.column(j) for j in range(d)]

    best: int | None = None
    best_dense: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    vals_range = range(-amp_bound, amp_bound + 1)
    for support in combinations(range(d), s):
        sup_cols = [cols[j] for j in support]
        for vals in product(vals_range, repeat=s):
            resid = 0
            for i in range(m):
                ay = 0
                for c, v in zip(sup_cols, vals):
                    ay += c[i] * v
                delta = abs(tint[i] - denom * ay)
                if delta > resid:
                    resid = delta
                    if best is not None and resid > best:
                        break
            if best is None or resid < best:
                best = resid
                dense = [0] * d
                for j, v in zip(support, vals):
                    dense[j] = v
                key = tuple(dense)
                best_dense = [key]
                seen = {key}
            elif resid == best:
                dense = [0] * d
                for j, v in zip(support, vals):
                    dense[j] = v
                key = tuple(dense)
                if key not in seen:
                    seen.add(key)
                    best_dense.append(key)
    return DecodeResult(
        minimizers=tuple(SparseSignal.from_dense(v) for v in best_dense),
        residual=Fraction(best, denom),
        sparsity_in_guarantee=2 * s <= m,
        candidates=n_candidates,
    )


def scale_matrix(A: IntMatrix, c) -> IntMatrix:
    """Entrywise multiplication by 2c, which must be a positive integer.

    Raising the tolerable noise level from 1/2 to c is exactly this
    rescaling; residuals scale by 2c and the decoder's argmin is
    unchanged. The modulus annotation survives only the trivial c = 1/2,
    since any larger factor breaks the centered-residue invariant.
    """
    c = Fraction(c)
    factor = 2 * c
    if factor <= 0 or factor.denominator != 1:
        raise ValueError("2c must be a positive integer to keep the matrix integral")
    f = int(factor)
    return IntMatrix(
        A.rows,
        A.cols,
        tuple(f * e for e in A.entries),
        modulus=A.modulus if f == 1 else None,
        entry_bound=None if A.entry_bound is None else f * A.entry_bound,
    )


def guarantee_holds(m: int, s: int, e) -> bool:
    """True iff 2s <= m and ||e||_inf < 1/2 (exact comparison)."""
    e_inf = max((abs(Fraction(t)) for t in e), default=Fraction(0))
    return 2 * s <= m and e_inf < HALF

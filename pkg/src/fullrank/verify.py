"""Verification that all (or sampled) maximal minors are nonzero, plus
validation of degeneracy certificates.

For matrices carrying a modulus annotation the fast path works mod d
(nonzero mod d implies nonzero); any minor that vanishes mod d is
re-checked with the exact determinant before it is listed, so failure
lists always contain genuinely degenerate column sets regardless of the
arithmetic used.
"""

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice

from .errors import BudgetExceededError
from .linalg import IntMatrix, _det_bareiss, _det_mod_rows

DEFAULT_BUDGET = 10_000_000

MOD_D = "mod_d"
EXACT = "exact"


@dataclass
class VerificationReport:
    """Outcome of a minor sweep."""

    total_checked: int
    failures: list[tuple[int, ...]] = field(default_factory=list)
    mode: str = "exhaustive"
    arithmetic: str = EXACT
    seed: int | None = None
    trials: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Witness of a degenerate m x m submatrix: a nonzero coefficient vector
    on the first t rows whose combination vanishes on every listed column."""

    t: int
    coeffs: tuple[int, ...]
    columns: tuple[int, ...]


@dataclass(frozen=True)
class CertificateCheck:
    accepted: bool
    reason: str


def _minor_rows(col_cache, combo, m):
    return [[col_cache[j][i] for j in combo] for i in range(m)]


def _is_degenerate(col_cache, combo, m, modulus, arithmetic) -> bool:
    rows = _minor_rows(col_cache, combo, m)
    if arithmetic == MOD_D:
        if _det_mod_rows(rows, modulus) != 0:
            return False
        # zero mod d is necessary but not sufficient for exact degeneracy
        return _det_bareiss(_minor_rows(col_cache, combo, m)) == 0
    return _det_bareiss(rows) == 0


def _pick_arithmetic(A: IntMatrix, arithmetic: str | None) -> str:
    if arithmetic is None:
        return MOD_D if A.modulus is not None else EXACT
    if arithmetic not in (MOD_D, EXACT):
        raise ValueError(f"unknown arithmetic {arithmetic!r}")
    if arithmetic == MOD_D and A.modulus is None:
        raise ValueError("mod_d arithmetic needs a matrix with a modulus")
    return arithmetic


def _scan_chunk(args):
    A, start, stop, arithmetic = args
    col_cache = [A.column(j) for j in range(A.cols)]
    bad = []
    for combo in islice(combinations(range(A.cols), A.rows), start, stop):
        if _is_degenerate(col_cache, combo, A.rows, A.modulus, arithmetic):
            bad.append(combo)
    return bad


def verify_exhaustive(A: IntMatrix, budget: int = DEFAULT_BUDGET,
                      arithmetic: str | None = None,
                      jobs: int = 1) -> VerificationReport:
    """Check every m-subset of columns, in lexicographic order.

    Refuses when C(d, m) exceeds the budget. With jobs > 1 the subset
    stream is partitioned across worker processes; failures merge by
    union, so the report does not depend on the partitioning.
    """
    m, d = A.rows, A.cols
    if d < m:
        raise ValueError(f"matrix has fewer columns ({d}) than rows ({m})")
    total = math.comb(d, m)
    if total > budget:
        raise BudgetExceededError(total, budget, what="exhaustive minor sweep")
    arithmetic = _pick_arithmetic(A, arithmetic)

    if jobs > 1 and total >= 4 * jobs:
        step = -(-total // jobs)
        chunks = [(A, lo, min(lo + step, total), arithmetic)
                  for lo in range(0, total, step)]
        failures = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, chunks):
                failures.extend(part)
        failures.sort()
    else:
        failures = _scan_chunk((A, 0, total, arithmetic))
    return VerificationReport(
        total_checked=total,
        failures=failures,
        mode="exhaustive",
        arithmetic=arithmetic,
    )


def verify_sampled(A: IntMatrix, trials: int, seed: int,
                   arithmetic: str | None = None) -> VerificationReport:
    """Check `trials` column m-subsets drawn from a seeded generator.

    Subsets may repeat; equal seeds give identical reports.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    m, d = A.rows, A.cols
    if d < m:
        raise ValueError(f"matrix has fewer columns ({d}) than rows ({m})")
    arithmetic = _pick_arithmetic(A, arithmetic)
    col_cache = [A.column(j) for j in range(d)]
    rng = random.Random(seed)
    failures = set()
    for _ in range(trials):
        combo = tuple(sorted(rng.sample(range(d), m)))
        if _is_degenerate(col_cache, combo, m, A.modulus, arithmetic):
            failures.add(combo)
    return VerificationReport(
        total_checked=trials,
        failures=sorted(failures),
        mode="sampled",
        arithmetic=arithmetic,
        seed=seed,
        trials=trials,
    )


def verify_certificate(A: IntMatrix, cert: DegeneracyCertificate) -> CertificateCheck:
    """Accept iff the certificate really witnesses a degenerate m x m minor.

    Checks, in order: well-formedness, a nonzero coefficient vector, the
    combination of the first t rows vanishing on every listed column, and
    (exact-determinant oracle) singularity of the submatrix on the first m
    listed columns.
    """
    m, d = A.rows, A.cols
    if not 1 <= cert.t <= m:
        return CertificateCheck(False, f"t={cert.t} outside [1, {m}]")
    if len(cert.coeffs) != cert.t:
        return CertificateCheck(
            False, f"{len(cert.coeffs)} coefficients for t={cert.t} rows")
    if not any(cert.coeffs):
        return CertificateCheck(False, "coefficient vector is zero")
    cols = cert.columns
    if len(cols) < m:
        return CertificateCheck(False, f"needs at least m={m} columns, got {len(cols)}")
    if any(not 0 <= j < d for j in cols):
        return CertificateCheck(False, "column index out of range")
    if any(a >= b for a, b in zip(cols, cols[1:])):
        return CertificateCheck(False, "columns must be strictly increasing")
    for j in cols:
        s = sum(cert.coeffs[i] * A.entry(i, j) for i in range(cert.t))
        if s != 0:
            return CertificateCheck(
                False, f"combination does not vanish at column {j} (value {s})")
    sub = [[A.entry(i, j) for j in cols[:m]] for i in range(m)]
    if _det_bareiss(sub) != 0:
        return CertificateCheck(
            False, "submatrix on the first m listed columns is nonsingular")
    return CertificateCheck(True, "ok")

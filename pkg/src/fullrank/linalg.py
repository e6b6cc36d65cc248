"""Exact integer linear algebra.

Centered residues, exact (fraction-free) and modular determinants, and
column selection. All determinant work is done with unbounded-precision
integers or in the prime field; nothing here touches floating point.
"""

from dataclasses import dataclass

from .intmath import is_prime


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix stored row-major, with optional annotations.

    modulus: odd prime ambient modulus for residue-built matrices. When
        present, every entry must already be a centered residue, i.e.
        |entry| <= (modulus - 1) / 2.
    entry_bound: guaranteed bound on |entry|, when one is being tracked.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]
    modulus: int | None = None
    entry_bound: int | None = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if self.entry_bound is not None:
            bad = max(abs(e) for e in self.entries)
            if bad > self.entry_bound:
                raise ValueError(
                    f"entry bound {self.entry_bound} violated (found |{bad}|)"
                )
        if self.modulus is not None:
            p = self.modulus
            if p < 3 or p % 2 == 0 or not is_prime(p):
                raise ValueError("modulus must be an odd prime")
            half = (p - 1) // 2
            if any(abs(e) > half for e in self.entries):
                raise ValueError("entries of a mod-p matrix must be centered residues")

    @classmethod
    def from_rows(cls, rows, modulus: int | None = None,
                  entry_bound: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be nonempty and of equal length")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), len(rows[0]), flat, modulus, entry_bound)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def max_abs_entry(self) -> int:
        return max(abs(e) for e in self.entries)


def centered_residue(x: int, p: int) -> int:
    """Representative of x mod p in [-(p-1)/2, (p-1)/2]. p must be odd, >= 3."""
    if p < 3 or p % 2 == 0:
        raise ValueError("modulus must be odd and >= 3")
    r = x % p
    if r > (p - 1) // 2:
        r -= p
    return r


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; all divisions are exact by construction."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _det_mod_rows(rows: list[list[int]], p: int) -> int:
    """Gaussian elimination over the field of p elements; result in [0, p)."""
    n = len(rows)
    rows = [[x % p for x in r] for r in rows]
    det = 1
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if rows[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = (-det) % p
        pv = rows[c][c]
        det = (det * pv) % p
        inv = pow(pv, -1, p)
        for r in range(c + 1, n):
            f = (rows[r][c] * inv) % p
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[c])]
    return det % p


def det_exact(square: IntMatrix) -> int:
    """Exact integer determinant (fraction-free elimination)."""
    if square.rows != square.cols:
        raise ValueError("determinant requires a square matrix")
    return _det_bareiss(square.to_rows())


def det_mod_p(square: IntMatrix, p: int) -> int:
    """Determinant reduced mod p, computed entirely in the prime field."""
    if square.rows != square.cols:
        raise ValueError("determinant requires a square matrix")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _det_mod_rows(square.to_rows(), p)


def select_columns(A: IntMatrix, cols) -> IntMatrix:
    """Submatrix on the given distinct column indices, in the given order.

    Annotations (modulus, entry_bound) are inherited: dropping columns
    cannot break either invariant.
    """
    cols = [int(c) for c in cols]
    if len(set(cols)) != len(cols):
        raise ValueError("duplicate column index")
    for c in cols:
        if not 0 <= c < A.cols:
            raise ValueError(f"column index {c} out of range [0, {A.cols})")
    if not cols:
        raise ValueError("need at least one column")
    entries = tuple(
        A.entries[i * A.cols + c] for i in range(A.rows) for c in cols
    )
    return IntMatrix(A.rows, len(cols), entries, A.modulus, A.entry_bound)

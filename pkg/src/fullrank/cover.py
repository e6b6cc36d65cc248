"""Covering the integer grid {x : ||x||_inf <= k} with hyperplanes
through the origin.

Includes the exact lower bound ceil(k^(m/(m-1)) / (2m-2)) on the number
of hyperplanes needed, a brute-force cover verifier, the column-counting
duality check (a matrix with all maximal minors invertible puts at most
m-1 of its columns on any hyperplane), and an exact minimum-cover search
for tiny grids.
"""

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError
from .intmath import iroot, primitive_vector
from .linalg import IntMatrix

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class CoverInstance:
    """Grid parameters and hyperplane normals, stored primitive and
    sign-normalized (gcd 1, first nonzero coordinate positive)."""

    m: int
    k: int
    normals: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 1 or self.k < 0:
            raise ValueError("need m >= 1 and k >= 0")
        norm = []
        for n in self.normals:
            n = tuple(int(x) for x in n)
            if len(n) != self.m:
                raise ValueError(f"normal {n} has length {len(n)}, expected {self.m}")
            norm.append(primitive_vector(n))  # raises on the zero vector
        object.__setattr__(self, "normals", tuple(norm))


@dataclass(frozen=True)
class CoverCheck:
    accepted: bool
    uncovered: tuple[int, ...] | None
    points_checked: int


def cover_lower_bound(m: int, k: int) -> int:
    """ceil(k^(m/(m-1)) / (2m-2)), exactly.

    The ceiling is located by integer comparisons of k^m against
    ((2m-2) q)^(m-1); no floating point near the boundary.
    """
    if m < 2 or k < m:
        raise ValueError(f"bound needs k >= m >= 2 (got m={m}, k={k})")
    km = k ** m
    root = iroot(km, m - 1)
    r_ceil = root if root ** (m - 1) == km else root + 1
    step = 2 * m - 2
    return -(-r_ceil // step)


def verify_cover(inst: CoverInstance, budget: int = DEFAULT_BUDGET) -> CoverCheck:
    """Accept iff every grid point lies on some listed hyperplane.

    Scans lexicographically from (-k, ..., -k); a rejection reports the
    first uncovered point. An empty normal list covers nothing, so it is
    rejected at the first point scanned.
    """
    size = (2 * inst.k + 1) ** inst.m
    if size > budget:
        raise BudgetExceededError(size, budget, what="grid enumeration")
    span = range(-inst.k, inst.k + 1)
    checked = 0
    for x in product(span, repeat=inst.m):
        checked += 1
        covered = any(
            sum(a * b for a, b in zip(n, x)) == 0 for n in inst.normals
        )
        if not covered:
            return CoverCheck(False, x, checked)
    return CoverCheck(True, None, checked)


def columns_on_hyperplane(A: IntMatrix, n) -> tuple[int, tuple[int, ...]]:
    """How many columns of A are orthogonal to n, and which ones."""
    n = tuple(int(x) for x in n)
    if len(n) != A.rows:
        raise ValueError(f"normal length {len(n)} != row count {A.rows}")
    if not any(n):
        raise ValueError("normal must be nonzero")
    hits = tuple(
        j for j in range(A.cols)
        if sum(n[i] * A.entry(i, j) for i in range(A.rows)) == 0
    )
    return len(hits), hits


def _half_grid(m: int, k: int) -> list[tuple[int, ...]]:
    """Nonzero grid points up to sign (first nonzero coordinate positive)."""
    pts = []
    for x in product(range(-k, k + 1), repeat=m):
        for c in x:
            if c > 0:
                pts.append(x)
                break
            if c < 0:
                break
    return pts


def min_cover_bruteforce(m: int, k: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Exact minimum number of hyperplanes covering the grid, with a witness.

    Candidate normals are the primitive sign-normalized vectors with
    ||n||_inf <= k. At this scale every hyperplane that can appear in an
    optimal cover is determined by grid points it must contain, so the
    restriction loses nothing. Search is depth-first on the least-covered
    point with branch-and-bound pruning; only tiny grids are in budget
    (m = 2 with k <= 4, or m = 3 with k <= 1).
    """
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    if not ((m == 2 and k <= 4) or (m == 3 and k <= 1)):
        raise BudgetExceededError(
            (2 * k + 1) ** m, (2 * 4 + 1) ** 2, what="exact cover search")
    if k == 0:
        # the grid is the origin; one hyperplane (any) covers it
        return 1, ((1,) + (0,) * (m - 1),)

    points = _half_grid(m, k)
    candidates = sorted({primitive_vector(p) for p in points})
    cover_sets = {
        n: frozenset(
            p for p in points if sum(a * b for a, b in zip(n, p)) == 0
        )
        for n in candidates
    }
    by_point = {
        p: [n for n in candidates if p in cover_sets[n]] for p in points
    }
    max_cover = max(len(s) for s in cover_sets.values())
    universe = frozenset(points)

    best_size = len(candidates) + 1
    best_witness: tuple = ()

    def dfs(uncovered: frozenset, chosen: tuple):
        nonlocal best_size, best_witness
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_witness = chosen
            return
        lower = len(chosen) + -(-len(uncovered) // max_cover)
        if lower >= best_size:
            return
        # branch on the point with the fewest available hyperplanes
        pivot = min(uncovered, key=lambda p: len(by_point[p]))
        for n in by_point[pivot]:
            dfs(uncovered - cover_sets[n], chosen + (n,))

    dfs(universe, ())
    return best_size, tuple(sorted(best_witness))

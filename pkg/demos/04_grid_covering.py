"""
Covering an integer grid with hyperplanes through the origin
============================================================

How many (m-1)-dimensional linear subspaces does it take to cover every
integer point x with ||x||_inf <= k? A matrix whose every m columns are
independent gives a lower bound: each hyperplane contains at most m-1 of
its d columns, so any cover needs at least d/(m-1) hyperplanes.
"""

from fullrank import (
    CoverInstance,
    columns_on_hyperplane,
    construct_vandermonde,
    cover_lower_bound,
    min_cover_bruteforce,
    verify_cover,
)

# %% The planar grid of radius 1 needs exactly 4 lines.

size, witness = min_cover_bruteforce(m=2, k=1)
print(f"minimum lines covering the 3x3 grid: {size}")
print("witness normals:", [list(n) for n in witness])
print("verifier accepts:", verify_cover(CoverInstance(2, 1, witness)).accepted)

# %% Drop a line and the verifier pinpoints the first hole.

partial = CoverInstance(2, 1, witness[:-1])
check = verify_cover(partial)
print("\nwith one line removed: accepted =", check.accepted,
      "| first uncovered point:", check.uncovered)

# %% The duality that powers the lower bound: no hyperplane catches m or
# more columns of a constructed matrix.

A, params = construct_vandermonde(m=2, k=3)
print(f"\ncolumns of the d = {params.d} construction on sample lines:")
for n in [(0, 1), (1, -1), (2, 1), (3, 1)]:
    count, cols = columns_on_hyperplane(A, n)
    print(f"    normal {n}: {count} column(s) {list(cols)}")

# %% The general bound, exact at integer boundaries, against the small
# cases where exhaustive search is feasible.

print("\nlower bound vs exact minimum (m = 2):")
for k in (2, 3, 4):
    bound = cover_lower_bound(2, k)
    exact, _ = min_cover_bruteforce(2, k)
    print(f"    k={k}: bound ceil(k^2/2) = {bound:>2} <= exact {exact}")

exact3, _ = min_cover_bruteforce(3, 1)
print(f"\nthree dimensions, radius 1: exact minimum {exact3} planes")

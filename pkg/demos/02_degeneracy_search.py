"""
Hunting degenerate submatrices with small row combinations
==========================================================

If two small-coefficient combinations of the first t rows agree on m or
more coordinates, their difference vanishes there, and the m x m
submatrix on those columns is degenerate. This search is the engine
behind the width upper bound; here it runs as an executable procedure
that emits checkable certificates.
"""

import random

from fullrank import (
    AttackConfig,
    IntMatrix,
    attack_params,
    find_collision,
    verify_certificate,
    construct_vandermonde,
)

# %% A planted example: the first row already has two zeros.

A = IntMatrix.from_rows([[0, 0, 1], [1, 2, 3]])
cert = find_collision(A, AttackConfig(t=1, lam=1, min_agree=2))
print("planted matrix certificate:", cert)
print("verifier says:", verify_certificate(A, cert), "\n")

# %% Random matrices at this size are usually degenerate somewhere, and
# the search finds a witness almost every time.

rng = random.Random(2024)
cfg = AttackConfig(t=2, lam=2, min_agree=2)
found = 0
for _ in range(300):
    M = IntMatrix.from_rows(
        [[rng.randint(-2, 2) for _ in range(8)] for _ in range(2)])
    cert = find_collision(M, cfg)
    if cert is not None:
        assert verify_certificate(M, cert).accepted
        found += 1
print(f"random 2x8 matrices with entries in [-2, 2]: "
      f"{found}/300 yielded a verified certificate\n")

# %% Constructed matrices resist the same search, as they must.

V, params = construct_vandermonde(2, 3)
print(f"power-residue matrix (d = {params.d}):",
      find_collision(V, AttackConfig(t=2, lam=2, min_agree=2)))

# %% Default parameters adapt to the entry bound: a constant coefficient
# range suffices once the matrix has enough rows, otherwise the range
# grows like k^(1/(m-1)).

for m, k in [(2, 7), (2, 10), (5, 3), (4, 64)]:
    cfg = attack_params(m, k)
    print(f"defaults for m={m}, k={k}: combine t={cfg.t} rows, "
          f"coefficients 0..{cfg.lam}")

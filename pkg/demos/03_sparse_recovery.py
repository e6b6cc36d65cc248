"""
Exact integer sparse recovery from few noisy measurements
=========================================================

A signal x in Z^d with at most s nonzero entries is measured as
b = Ax + e with only m << d rows. When every m columns of A are linearly
independent and 2s <= m, any two distinct candidate signals differ by at
least 1 in some measurement coordinate, so noise below 1/2 cannot
confuse the sup-norm decoder. Everything below runs in exact rational
arithmetic; the 1/2 threshold is a strict inequality you can actually
test.
"""

from fractions import Fraction as F

from fullrank import (
    SparseSignal,
    construct,
    decode,
    encode,
    guarantee_holds,
    scale_matrix,
)

# %% Four measurements, five unknowns, two nonzeros.

A = construct(m=4, k=4, d_requested=5)
print("measurement matrix (4 rows, 5 columns):")
for row in A.to_rows():
    print("   ", row)

x = SparseSignal(dimension=5, support=(1, 3), values=(2, -1))
e = (F(2, 5), F(-49, 100), F(1, 4), F(0))
meas = encode(A, x, e)
print("\ntrue signal:     ", x.to_dense())
print("measurement b:   ", [str(t) for t in meas.b])
print("noise inside the guarantee:", meas.in_guarantee,
      "| guarantee_holds(m=4, s=2):", guarantee_holds(4, 2, e))

result = decode(A, meas, s=2, amp_bound=2)
print("decoded:         ", result.signal.to_dense(),
      "| residual:", result.residual,
      "| ambiguous:", result.ambiguous)
assert result.signal == x

# %% Push the noise to the boundary and beyond: at 1/2 the guarantee is
# void, and the decoder reports whatever minimizes the residual.

hot = encode(A, x, (F(1, 2), F(0), F(0), F(0)))
print("\nnoise .5 flagged out of guarantee:", not hot.in_guarantee)
risky = decode(A, hot, s=2, amp_bound=2)
print("decoder still answers:", risky.signal.to_dense(),
      "(no correctness claim)")

# %% Duplicated columns make recovery impossible, and the decoder says so
# instead of picking an answer silently.

from fullrank import IntMatrix

dup = IntMatrix.from_rows([[2, 2]])
tie = decode(dup, (F(2),), s=1, amp_bound=1)
print("\nrank-deficient sensing: ambiguous =", tie.ambiguous,
      "| minimizers:", [t.to_dense() for t in tie.minimizers])

# %% Tolerating noise up to C instead of 1/2 is a rescaling of A by 2C.

S = scale_matrix(A, 3)  # now ||e||_inf < 3 is tolerable
bigger = encode(S, x, (F(29, 10), F(-2), F(1), F(0)))
result = decode(S, bigger, s=2, amp_bound=2)
print("\nafter scaling by 6, noise up to 3 decodes exactly:",
      result.signal == x)

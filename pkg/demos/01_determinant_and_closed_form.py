"""Compute the tridiagonal determinant three ways and watch them agree.

The recurrence is fast, the Bareiss elimination over half-exponent variables
is slow but shares no code with it, and the alternating q-binomial sum is the
closed form.  All three produce identical polynomials in X and q.
"""

from qetude import det_oracle, det_recurrence, theorem2_value

for n in range(1, 9):
    d = det_recurrence(n)
    assert d == det_oracle(n) == theorem2_value(n)
    print(f"n = {n}:  {d.to_text()}")

print()
print("X coefficient for n = 1..8:")
for n in range(1, 9):
    print(f"  n = {n}:  {det_recurrence(n).coeff(1).to_text()}")

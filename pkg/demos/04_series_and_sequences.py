"""The n -> infinity limit series, its specializations, and integer sequences.

At X = q the reciprocal of the limit series counts compositions whose
consecutive differences are all >= -1 (A003116).  At X = -q the series
becomes the first Rogers-Ramanujan product, i.e. it counts partitions with
gaps >= 2.
"""

from qetude import (rr_product_truncated, sequence_rpartitions, series_invert,
                    substitute_x, theorem1_truncated)

K = 20
limit = theorem1_truncated(K)

at_q = substitute_x(limit, 1, 1)
recip = series_invert(at_q)
print("reciprocal of the X=q specialization, q^1..q^20:")
print(" ", [int(c) for c in recip.scalar_list()[1:]])
print("direct composition counts (difference >= -1):")
print(" ", sequence_rpartitions(-1, K))

at_minus_q = substitute_x(limit, -1, 1)
product = rr_product_truncated(K, {1, 4}, 5)
print("\nX=-q equals the parts = 1,4 (mod 5) product:", at_minus_q == product)
print("gap->=2 partition counts:", [1] + sequence_rpartitions(2, 10), "...")

print("\ncompanion specializations (nothing asserted for X=-1):")
print("  X=-1  :", [int(c) for c in substitute_x(limit, -1, 0).scalar_list()[:11]])
print("  X=-q^2:", [int(c) for c in substitute_x(limit, -1, 2).scalar_list()[:11]])

"""Rediscover the closed form from raw determinant data, twice.

The first pipeline recognizes each X-coefficient as a scaled q-binomial
coefficient; the second fits a rational function of N = q^n by degree
escalation, strips the (N - q^j) roots off the numerator, and inspects the
leftover denominators.  Both routes end at the same conjecture.
"""

from qetude import rebuild_xqpoly, synthesize_conjecture, trial_divide_numerator
from qetude.lehmer import det_recurrence

andrews = synthesize_conjecture("andrews", 5, 20)
print("q-binomial route:")
for t in andrews.terms[1:]:
    sign = "-" if t.sign < 0 else "+"
    print(f"  X^{t.a}: {sign} q^{t.q_shift} * "
          f"GP(n{t.gaussian.m_offset:+d}, {t.gaussian.n_param})")

ansatz = synthesize_conjecture("ansatz", 5, 24)
print("\nrational-fit route (numerator roots stripped by trial division):")
for t in ansatz.terms[1:]:
    roots, _ = trial_divide_numerator(t.rational, 2 * t.a + 2)
    factors = " ".join(f"(N - q^{j})" for j in roots)
    print(f"  X^{t.a}: numerator {factors}")
print("  leftover denominator ratios d(a)/d(a-1):",
      [p.to_text() for p in ansatz.denominator_ratios])

print("\nboth rebuild the data exactly, e.g. n = 11:")
assert rebuild_xqpoly(andrews, 11) == rebuild_xqpoly(ansatz, 11) == det_recurrence(11)
print(" ", det_recurrence(11).to_text())

"""Floating-point sanity anchor: the full series really sums to 2/pi.

The alternating series sum (-1)^k (4k+1) (1/2)_k^3/k!^3 has terms decaying
only like 1/sqrt(k), so raw partial sums creep toward 2/pi uselessly
slowly.  ramanujan_partial feeds them through iterated pairwise averaging,
which squeezes out machine precision from a few dozen terms.  The raw
column below is computed here for contrast.
"""

import math
from fractions import Fraction

from supercong import ramanujan_partial

target = 2 / math.pi
print(f"target 2/pi = {target:.15f}\n")
print(f"{'N':>3}  {'raw partial sum':>18}  {'raw error':>10}"
      f"  {'accelerated':>18}  {'error':>9}")

raw = 0.0
term = 1.0
for k in range(50):
    raw += (1 if k % 2 == 0 else -1) * (4 * k + 1) * term
    term *= ((k + 0.5) / (k + 1)) ** 3
    N = k + 1
    if N in (1, 2, 5, 10, 20, 30, 50):
        acc = ramanujan_partial(N)
        print(f"{N:>3}  {raw:>18.12f}  {abs(raw - target):>10.1e}"
              f"  {acc:>18.15f}  {abs(acc - target):>9.1e}")

print("\nfirst three terms as exact rationals:")
half = Fraction(1, 2)
t = Fraction(1)
for k in range(3):
    sign = -1 if k % 2 else 1
    print(f"  k={k}: {sign * (4 * k + 1) * t}")
    t *= ((half + k) / (k + 1)) ** 3

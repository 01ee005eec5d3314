"""Polynomial analogues: congruences between truncated q-series.

[n] = 1 + q + ... + q^(n-1) plays the role of the prime, the cyclotomic
polynomial Phi_n(q) the role of its powers.  The two truncated q-series
agree with a sign-twisted [n] modulo [n] Phi_n(q)^2, and conjecturally
with each other modulo [n] Phi_n(q)^3.  Everything here is exact integer
polynomial arithmetic; q -> 1 recovers the numeric supercongruences.
"""

from supercong import (
    conjecture41_witness,
    cyclotomic,
    q_integer,
    q_limit_term_check,
    verify_conjecture41,
    verify_gz,
)

print("building blocks:")
print(f"  [5]       = {q_integer(5).to_string()}   (coefficient list, low degree first)")
print(f"  Phi_5(q)  = {cyclotomic(5).to_string()}")
print(f"  Phi_12(q) = {cyclotomic(12).to_string()}")
print(f"  Phi_105 has degree {cyclotomic(105).degree} and a -2 coefficient:"
      f" {min(cyclotomic(105).coeffs)}")

print("\nsign-twisted [n] congruences, modulus [n] Phi_n(q)^2:")
for fam, ns in (("gz-e2", (3, 5, 7, 9, 11)), ("gz-f2", (5, 9, 13))):
    for n in ns:
        r = verify_gz(n, fam)
        tag = "ok" if r.passed else "FAIL"
        e = (n - 1) * (n - 3) // 8
        rhs = q_integer(n).shift(e)  # (-q)^e [n]
        if e % 2:
            rhs = -rhs
        print(f"  [{tag}] {fam} n={n:>2}: rhs = (-q)^{e} [{n}]"
              f" = {rhs.to_string():<32}  mod {r.modulus}")

print("\nmod [n] Phi_n(q)^3 agreement of the two series (open conjecture):")
for n in (5, 9, 13):
    r = verify_conjecture41(n)
    print(f"  [{'ok' if r.passed else 'FAIL'}] n={n:>2}  mod {r.modulus}")

w = conjecture41_witness(5)
print("\nwitness payload at n=5 (what a counterexample report would carry):")
print(f"  difference numerator starts {w['difference_numerator'][:40]}...")
print(f"  remainder certificate: {w['remainder_certificate']!r} (empty = congruent)")

print("\nq -> 1 limit of each summand matches the numeric series term by term:")
print("  k=0..7:", all(q_limit_term_check(8, k) for k in range(8)))

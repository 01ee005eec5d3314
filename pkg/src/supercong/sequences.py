"""Rising factorials, harmonic numbers, and Euler numbers/polynomials.

Everything here is exact (Fraction or integer residues).  The Euler
polynomials E_n(x) follow the Appell recurrence

    E_n(x) = x^n - (1/2) * sum_{k<n} C(n,k) E_k(x),

and the Euler numbers are E_n = 2^n E_n(1/2).  The classical identities
the congruence machinery relies on (Lehmer's harmonic congruences, the
Euler reflection/vanishing rules, four alternating binomial identities)
are exposed as boolean checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import NotPAdicIntegral, ResidueClass, is_p_integral, reduce_mod

__all__ = [
    "InverseMissing",
    "HarmonicValue",
    "EulerPolyTable",
    "pochhammer",
    "pochhammer_mod",
    "harmonic",
    "alternating_reciprocal_squares",
    "euler_poly_coeffs",
    "euler_poly_table",
    "euler_poly_eval",
    "euler_number",
    "euler_poly_eval_mod",
    "euler_number_mod",
    "check_lehmer",
    "check_euler_identities",
    "check_binomial_identities",
]


class InverseMissing(ArithmeticError):
    """A required modular inverse does not exist (e.g. 1/2 mod 2)."""


@dataclass(frozen=True)
class HarmonicValue:
    """H_n^(m) = sum_{j=1}^{n} 1/j^m."""

    n: int
    m: int
    value: Fraction


@dataclass(frozen=True)
class EulerPolyTable:
    """Coefficient rows of E_0..E_max_index, lowest degree first."""

    max_index: int
    rows: tuple[tuple[Fraction, ...], ...]


def pochhammer(alpha: Fraction, k: int) -> Fraction:
    """Rising factorial (alpha)_k = alpha (alpha+1) ... (alpha+k-1), (alpha)_0 = 1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    out = Fraction(1)
    for j in range(k):
        out *= alpha + j
    return out


def pochhammer_mod(alpha: Fraction, k: int, p: int, e: int) -> ResidueClass:
    """(alpha)_k reduced mod p**e without building the exact product."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    m = p**e
    x = reduce_mod(Fraction(alpha), p, e).value
    out = 1
    for j in range(k):
        out = out * (x + j) % m
    return ResidueClass(out, m)


# ---------------------------------------------------------------------------
# harmonic numbers

_harmonic_cache: dict[int, list[Fraction]] = {}


def _harmonic_value(n: int, m: int) -> Fraction:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    vals = _harmonic_cache.setdefault(m, [Fraction(0)])
    while len(vals) <= n:
        j = len(vals)
        vals.append(vals[-1] + Fraction(1, j**m))
    return vals[n]


def harmonic(n: int, m: int = 1) -> HarmonicValue:
    """Generalized harmonic number H_n^(m); H_0 = 0."""
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    return HarmonicValue(n=n, m=m, value=_harmonic_value(n, m))


_altsq_cache: list[Fraction] = [Fraction(0)]


def alternating_reciprocal_squares(n: int) -> Fraction:
    """sum_{k=1}^{n} (-1)^k / k^2."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    while len(_altsq_cache) <= n:
        k = len(_altsq_cache)
        _altsq_cache.append(_altsq_cache[-1] + Fraction((-1) ** k, k**2))
    return _altsq_cache[n]


# ---------------------------------------------------------------------------
# Euler polynomials, exact

_euler_rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]


def euler_poly_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of E_n(x), lowest degree first, length n+1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    while len(_euler_rows) <= n:
        m = len(_euler_rows)
        # acc = sum_{k<m} C(m,k) E_k(x), degree m-1
        acc = [Fraction(0)] * m
        for k in range(m):
            c = math.comb(m, k)
            for i, coef in enumerate(_euler_rows[k]):
                acc[i] += c * coef
        row = [-Fraction(1, 2) * c for c in acc] + [Fraction(1)]
        _euler_rows.append(tuple(row))
    return _euler_rows[n]


def euler_poly_table(max_index: int) -> EulerPolyTable:
    euler_poly_coeffs(max_index)
    return EulerPolyTable(max_index=max_index, rows=tuple(_euler_rows[: max_index + 1]))


def euler_poly_eval(n: int, x: Fraction) -> Fraction:
    """E_n(x) evaluated exactly (Horner)."""
    x = Fraction(x)
    out = Fraction(0)
    for coef in reversed(euler_poly_coeffs(n)):
        out = out * x + coef
    return out


def euler_number(n: int) -> int:
    """Euler number E_n = 2^n E_n(1/2); always an integer."""
    val = 2**n * euler_poly_eval(n, Fraction(1, 2))
    assert val.denominator == 1
    return val.numerator


# ---------------------------------------------------------------------------
# Euler polynomials mod p


@lru_cache(maxsize=4096)
def _euler_eval_mod(n: int, x: int, p: int) -> int:
    # E_m(x) mod p via the Appell recurrence; the Pascal row is grown
    # additively so C(m,k) mod p stays exact even when m >= p.
    inv2 = pow(2, -1, p)
    evals = [1]
    row = [1]  # C(m, 0..m) mod p
    xpow = 1
    for m in range(1, n + 1):
        row.append(0)
        for k in range(m, 0, -1):
            row[k] = (row[k] + row[k - 1]) % p
        xpow = xpow * x % p
        s = 0
        for k in range(m):
            s += row[k] * evals[k]
        evals.append((xpow - inv2 * s) % p)
    return evals[n]


def euler_poly_eval_mod(n: int, x: Fraction, p: int) -> ResidueClass:
    """E_n(x) mod p for odd prime p and p-integral x."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if p == 2:
        raise InverseMissing("E_n(x) mod 2 needs 1/2")
    x = Fraction(x)
    if not is_p_integral(x, p):
        raise NotPAdicIntegral(f"{x} has no residue mod {p}")
    xr = x.numerator * pow(x.denominator, -1, p) % p
    return ResidueClass(_euler_eval_mod(n, xr, p), p)


def euler_number_mod(n: int, p: int) -> ResidueClass:
    """E_n mod p (via 2^n E_n(1/2))."""
    v = euler_poly_eval_mod(n, Fraction(1, 2), p).value
    return ResidueClass(pow(2, n, p) * v % p, p)


# ---------------------------------------------------------------------------
# identity checks

def check_lehmer(p: int) -> bool:
    """Lehmer's congruences for prime p > 3:

    H_{p-1} ≡ 0 (mod p^2),  H_{p-1}^(2) ≡ 0 (mod p),  H_{(p-1)/2}^(2) ≡ 0 (mod p).
    """
    if p <= 3:
        raise ValueError(f"p must be a prime > 3, got {p}")
    ok1 = reduce_mod(_harmonic_value(p - 1, 1), p, 2).value == 0
    ok2 = reduce_mod(_harmonic_value(p - 1, 2), p, 1).value == 0
    ok3 = reduce_mod(_harmonic_value((p - 1) // 2, 2), p, 1).value == 0
    return ok1 and ok2 and ok3


def check_euler_identities(
    n_max: int, m_max: int, sample_points: list[Fraction] | None = None
) -> bool:
    """Classical Euler-polynomial identities, checked exactly:

    * E_{2n}(0) = E_{2n}(1) = 0 for 1 <= n <= n_max//2;
    * reflection E_n(1-x) = (-1)^n E_n(x) on >= n_max+1 sample points
      (enough points to pin down a degree-n_max polynomial);
    * sum_{k=1}^{n} (-1)^k k^m = ((-1)^n/2) (E_m(n+1) + (-1)^n E_m(0))
      for n <= n_max, 1 <= m <= m_max (at m = 0 the k = 0 term of the
      telescoped form contributes 1, so the closed form starts at m = 1).
    """
    if sample_points is None:
        sample_points = [Fraction(j, 2) for j in range(n_max + 2)]
    pts = set(sample_points)
    if len(pts) < n_max + 1:
        raise ValueError(f"need at least {n_max + 1} distinct sample points")

    for n in range(1, n_max // 2 + 1):
        if euler_poly_eval(2 * n, Fraction(0)) != 0:
            return False
        if euler_poly_eval(2 * n, Fraction(1)) != 0:
            return False

    for n in range(n_max + 1):
        sign = (-1) ** n
        for x in sample_points:
            if euler_poly_eval(n, 1 - x) != sign * euler_poly_eval(n, x):
                return False

    for m in range(1, m_max + 1):
        e_m0 = euler_poly_eval(m, Fraction(0))
        acc = Fraction(0)
        for n in range(1, n_max + 1):
            acc += Fraction((-1) ** n) * n**m
            sign = (-1) ** n
            rhs = Fraction(sign, 2) * (euler_poly_eval(m, Fraction(n + 1)) + sign * e_m0)
            if acc != rhs:
                return False
    return True


def check_binomial_identities(n: int) -> bool:
    """Four alternating binomial-sum identities at a given n >= 1, exactly:

    sum (-1)^k / (k^2 C(n,k))      = H_n^(2) + 2 sum (-1)^k / k^2
    sum (-1)^k C(n,k) / k          = -H_n
    sum (-1)^k C(n,k) / k^2        = -(H_n^(2) + H_n^2) / 2
    sum (-1)^k C(n,k) H_k / k      = -H_n^(2)

    (all sums over k = 1..n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s1 = s2 = s3 = s4 = Fraction(0)
    hk = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        c = math.comb(n, k)
        hk += Fraction(1, k)
        s1 += Fraction(sign, k**2 * c)
        s2 += Fraction(sign * c, k)
        s3 += Fraction(sign * c, k**2)
        s4 += Fraction(sign * c, k) * hk
    hn = _harmonic_value(n, 1)
    hn2 = _harmonic_value(n, 2)
    return (
        s1 == hn2 + 2 * alternating_reciprocal_squares(n)
        and s2 == -hn
        and s3 == -(hn2 + hn * hn) / 2
        and s4 == -hn2
    )

"""Truncated hypergeometric supercongruences modulo p^3 and p^4.

The central object is the alternating sum

    S(alpha, M) = sum_{k=0}^{M} (-1)^k (2k+alpha) (alpha)_k^3 / k!^3,

computed term-by-term in residue arithmetic mod p^e (term ratio
-(alpha+k)^3/(k+1)^3, so each step costs a few modular inverses).  The
classical (4k+1)/(6k+1)/(8k+1) families are d * S(1/d, M) for d = 2, 3, 4.
Against it we check:

* five classical mod-p^3 congruences (one per weight/residue-class pair)
  and their mod-p^4 refinements with Euler-polynomial correction terms;
* the general-alpha congruence S(alpha, M) ≡ (-1)^a (alpha+a)
  + (alpha+a)^3 E_{p-3}(alpha) mod p^4 where a = <-alpha>_p, alpha + a = p t,
  with M = p-1 or M = a, plus the tail-vanishing statement that bridges
  the two truncations;
* the (6k+1)(1/2)_k^3/(8^k k!^3) family (full and half truncations) and its
  equivalence with the (8k+1) family for p ≡ 1 (mod 4);
* the five auxiliary Pochhammer-quotient congruences the proofs run on.

Everything is exact: residue pipelines for speed, Fraction oracles for
cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .padic import (
    NotPAdicIntegral,
    ResidueClass,
    decompose,
    legendre,
    reduce_mod,
)
from .records import (
    PreconditionViolated,
    ResidueConditionViolated,
    SkippedWhenAEqualsPMinus1,
    TruncationTooLarge,
    VerificationRecord,
    make_record,
)
from .sequences import (
    alternating_reciprocal_squares,
    euler_number_mod,
    euler_poly_eval_mod,
    harmonic,
    pochhammer,
)
from .wz import DivisionByZeroTerm

__all__ = [
    "TheoremFamily",
    "FAMILIES",
    "LEMMA_FAMILIES",
    "MAO_VARIANTS",
    "sum_main",
    "sum_main_exact",
    "sum_mao",
    "sum_mao_exact",
    "verify_theorem",
    "verify_main1",
    "verify_tail",
    "verify_mao_equiv",
    "verify_lemma",
    "ramanujan_partial",
]


# ---------------------------------------------------------------------------
# sums

def sum_main(alpha: Fraction, M: int, p: int, e: int = 4) -> ResidueClass:
    """sum_{k=0}^{M} (-1)^k (2k+alpha) (alpha)_k^3 / k!^3 mod p^e."""
    alpha = Fraction(alpha)
    if M < 0:
        raise ValueError(f"M must be >= 0, got {M}")
    if M >= p:
        raise TruncationTooLarge(f"M = {M} >= p = {p}: k! not invertible")
    m = p**e
    x = reduce_mod(alpha, p, e).value
    u = 1  # (-1)^k (alpha)_k^3 / k!^3 mod m
    s = x % m
    for k in range(1, M + 1):
        u = -u * pow(x + k - 1, 3, m) * pow(k, -3, m) % m
        s = (s + (2 * k + x) * u) % m
    return ResidueClass(s, m)


def sum_main_exact(alpha: Fraction, M: int) -> Fraction:
    """Same sum as an exact rational; the small-p cross-check oracle."""
    alpha = Fraction(alpha)
    total = Fraction(0)
    for k in range(M + 1):
        sign = -1 if k % 2 else 1
        total += (
            sign
            * (2 * k + alpha)
            * pochhammer(alpha, k) ** 3
            / Fraction(math.factorial(k)) ** 3
        )
    return total


def sum_mao(M: int, p: int, e: int = 4) -> ResidueClass:
    """sum_{k=0}^{M} (-1)^k (6k+1) (1/2)_k^3 / (k!^3 8^k) mod p^e."""
    if M < 0:
        raise ValueError(f"M must be >= 0, got {M}")
    if M >= p:
        raise TruncationTooLarge(f"M = {M} >= p = {p}: k! not invertible")
    m = p**e
    x = pow(2, -1, m)
    i8 = pow(8, -1, m)
    u = 1
    s = 1
    for k in range(1, M + 1):
        u = -u * pow(x + k - 1, 3, m) * pow(k, -3, m) * i8 % m
        s = (s + (6 * k + 1) * u) % m
    return ResidueClass(s, m)


def sum_mao_exact(M: int) -> Fraction:
    half = Fraction(1, 2)
    total = Fraction(0)
    for k in range(M + 1):
        sign = -1 if k % 2 else 1
        total += (
            sign
            * (6 * k + 1)
            * pochhammer(half, k) ** 3
            / (Fraction(math.factorial(k)) ** 3 * 8**k)
        )
    return total


def ramanujan_partial(N: int) -> float:
    """Float estimate of sum (-1)^k (4k+1) (1/2)_k^3/k!^3 = 2/pi from N terms.

    The raw alternating partial sums converge like 1/sqrt(N), useless as a
    smoke test, so the first N partial sums are collapsed by iterated
    pairwise averaging (Euler's transformation in tableau form), which is
    accurate to ~1e-16 by N = 50.  N = 1 returns the bare first term, 1.0.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    row = []
    s = 0.0
    t = 1.0  # (1/2)_k^3 / k!^3
    for k in range(N):
        s += (1 if k % 2 == 0 else -1) * (4 * k + 1) * t
        row.append(s)
        t *= ((k + 0.5) / (k + 1)) ** 3
    while len(row) > 1:
        row = [(row[i] + row[i + 1]) / 2.0 for i in range(len(row) - 1)]
    return row[0]


# ---------------------------------------------------------------------------
# classical theorem families

def _parity_sign(j: int) -> int:
    return -1 if j % 2 else 1


def _p3_times(p: int, x: int, m: int) -> int:
    # p^3 * X mod p^4 only needs X mod p: p^3*(X mod p) ≡ p^3*X (mod p^4)
    return p**3 * (x % p) % m


def _euler_at(p: int, num: int, den: int) -> int:
    return euler_poly_eval_mod(p - 3, Fraction(num, den), p).value


def _rhs_b2(p: int, m: int) -> int:
    return p * _parity_sign((p - 1) // 2) % m


def _rhs_e2(p: int, m: int) -> int:
    return p % m


def _rhs_f2(p: int, m: int) -> int:
    return p * _parity_sign((p - 1) // 4) % m


def _rhs_sw_e2(p: int, m: int) -> int:
    return -2 * p % m


def _rhs_sw_f2(p: int, m: int) -> int:
    return 3 * p * _parity_sign((3 * p - 1) // 4) % m


def _rhs_e2_mod4(p: int, m: int) -> int:
    x = _euler_at(p, 1, 3) * pow(9, -1, p)
    return (p + _p3_times(p, x, m)) % m


def _rhs_f2_mod4(p: int, m: int) -> int:
    x = _euler_at(p, 1, 4) * pow(16, -1, p)
    return (p * _parity_sign((p - 1) // 4) + _p3_times(p, x, m)) % m


def _rhs_sw_e2_mod4(p: int, m: int) -> int:
    x = 8 * _euler_at(p, 1, 3) * pow(9, -1, p)
    return (-2 * p + _p3_times(p, x, m)) % m


def _rhs_sw_f2_mod4(p: int, m: int) -> int:
    x = 27 * _euler_at(p, 1, 4) * pow(16, -1, p)
    return (3 * p * _parity_sign((3 * p - 1) // 4) + _p3_times(p, x, m)) % m


def _rhs_sun_b2(p: int, m: int) -> int:
    x = euler_number_mod(p - 3, p).value
    return (p * _parity_sign((p - 1) // 2) + _p3_times(p, x, m)) % m


@dataclass(frozen=True)
class TheoremFamily:
    """One (2dk+1)-weighted congruence family.

    The summand weight is 2*weight_d*k + 1, i.e. weight_d times the
    (2k + 1/weight_d) summand of sum_main.
    """

    name: str
    weight_d: int
    modulus_exp: int
    p_mod: int | None
    p_res: int | None
    short_m: Callable[[int], int]
    rhs_mod: Callable[[int, int], int]


FAMILIES: dict[str, TheoremFamily] = {
    f.name: f
    for f in (
        TheoremFamily("B2", 2, 3, None, None, lambda p: (p - 1) // 2, _rhs_b2),
        TheoremFamily("E2", 3, 3, 3, 1, lambda p: (p - 1) // 3, _rhs_e2),
        TheoremFamily("F2", 4, 3, 4, 1, lambda p: (p - 1) // 4, _rhs_f2),
        TheoremFamily("SW_E2", 3, 3, 3, 2, lambda p: (2 * p - 1) // 3, _rhs_sw_e2),
        TheoremFamily("SW_F2", 4, 3, 4, 3, lambda p: (3 * p - 1) // 4, _rhs_sw_f2),
        TheoremFamily("E2_MOD4", 3, 4, 3, 1, lambda p: (p - 1) // 3, _rhs_e2_mod4),
        TheoremFamily("F2_MOD4", 4, 4, 4, 1, lambda p: (p - 1) // 4, _rhs_f2_mod4),
        TheoremFamily(
            "SW_E2_MOD4", 3, 4, 3, 2, lambda p: (2 * p - 1) // 3, _rhs_sw_e2_mod4
        ),
        TheoremFamily(
            "SW_F2_MOD4", 4, 4, 4, 3, lambda p: (3 * p - 1) // 4, _rhs_sw_f2_mod4
        ),
        TheoremFamily("SUN_B2", 2, 4, None, None, lambda p: (p - 1) // 2, _rhs_sun_b2),
    )
}

MAO_VARIANTS = ("MAO_HALF", "SUN_HALF_CONJ", "EQUIV")

LEMMA_FAMILIES = (
    "LEMMA_WZPROD",
    "LEMMA_ALPHAP3",
    "LEMMA_SIGMA1",
    "LEMMA_PROD",
    "LEMMA_SIGMA",
)


def _norm_family(name: str) -> str:
    return name.strip().upper().replace("-", "_")


def verify_theorem(
    family: str, p: int, truncation: str = "short", modulus_exp: int | None = None
) -> VerificationRecord:
    """Check one classical family at one prime.

    truncation "short" uses the family's stated M ((p-1)/2, (p-1)/3,
    (p-1)/4, (2p-1)/3 or (3p-1)/4); "full" uses M = p-1.  modulus_exp may
    lower the comparison modulus (a mod-p^4 family checked mod p^3); raising
    it beyond the family's claim is refused.
    """
    fam = FAMILIES.get(_norm_family(family))
    if fam is None:
        raise ValueError(f"unknown theorem family: {family!r}")
    if truncation not in ("short", "full"):
        raise ValueError(f"truncation must be short|full, got {truncation!r}")
    if fam.p_mod is not None and p % fam.p_mod != fam.p_res:
        raise ResidueConditionViolated(
            f"{fam.name} needs p ≡ {fam.p_res} (mod {fam.p_mod}), got p = {p}"
        )
    if p <= 3:
        raise PreconditionViolated(f"{fam.name} needs p > 3, got p = {p}")
    e = fam.modulus_exp if modulus_exp is None else modulus_exp
    if e not in (3, 4):
        raise ValueError(f"modulus exponent must be 3 or 4, got {e}")
    if e > fam.modulus_exp:
        raise PreconditionViolated(
            f"{fam.name} is only claimed mod p^{fam.modulus_exp}"
        )
    m = p**e
    M = fam.short_m(p) if truncation == "short" else p - 1
    d = fam.weight_d
    lhs = ResidueClass(d * sum_main(Fraction(1, d), M, p, e).value % m, m)
    rhs = ResidueClass(fam.rhs_mod(p, m), m)
    return make_record(fam.name, f"{p}^{e}", lhs, rhs, p=p, truncation=truncation)


# ---------------------------------------------------------------------------
# general-alpha congruence and its tail

def verify_main1(
    alpha: Fraction, p: int, truncation: str = "full"
) -> VerificationRecord:
    """S(alpha, M) ≡ (-1)^a (alpha+a) + (alpha+a)^3 E_{p-3}(alpha) mod p^4,

    with a = <-alpha>_p and M = p-1 ("full") or M = a ("short").
    """
    if truncation not in ("short", "full"):
        raise ValueError(f"truncation must be short|full, got {truncation!r}")
    if p <= 3:
        raise PreconditionViolated(f"needs p > 3, got p = {p}")
    alpha = Fraction(alpha)
    dec = decompose(alpha, p)
    m = p**4
    M = p - 1 if truncation == "full" else dec.a
    lhs = sum_main(alpha, M, p, 4)
    pt = alpha + dec.a  # = p*t, divisible by p
    base = reduce_mod(pt, p, 4).value
    # (pt)^3 ≡ 0 mod p^3, so the Euler factor is only needed mod p
    cube = reduce_mod(pt**3, p, 4).value
    ev = euler_poly_eval_mod(p - 3, alpha, p).value
    rhs = ResidueClass((_parity_sign(dec.a) * base + cube * ev) % m, m)
    family = "MAIN1" if truncation == "full" else "MAIN1_TRUNC"
    return make_record(
        family, f"{p}^4", lhs, rhs, p=p, alpha=alpha, truncation=truncation
    )


def verify_tail(alpha: Fraction, p: int) -> VerificationRecord:
    """sum_{k=a+1}^{p-1} of the S(alpha) summand ≡ 0 mod p^4 (a <= p-2)."""
    if p <= 3:
        raise PreconditionViolated(f"needs p > 3, got p = {p}")
    alpha = Fraction(alpha)
    dec = decompose(alpha, p)
    if dec.a == p - 1:
        raise SkippedWhenAEqualsPMinus1(
            f"<-alpha>_p = p-1 for alpha = {alpha}, p = {p}: tail is empty"
        )
    m = p**4
    x = reduce_mod(alpha, p, 4).value
    u = 1
    s = 0
    for k in range(1, p):
        u = -u * pow(x + k - 1, 3, m) * pow(k, -3, m) % m
        if k > dec.a:
            s = (s + (2 * k + x) * u) % m
    return make_record(
        "TAIL", f"{p}^4", ResidueClass(s, m), ResidueClass(0, m), p=p, alpha=alpha
    )


# ---------------------------------------------------------------------------
# the (6k+1)(1/2)_k^3/8^k family

def verify_mao_equiv(p: int, variant: str) -> VerificationRecord:
    """Full/half truncations of the 8^(-k) family, and its agreement with
    the (8k+1) family at full truncation when p ≡ 1 (mod 4)."""
    v = _norm_family(variant)
    if v not in MAO_VARIANTS:
        raise ValueError(f"variant must be one of {MAO_VARIANTS}, got {variant!r}")
    if p <= 3:
        raise PreconditionViolated(f"needs p > 3, got p = {p}")
    m = p**4
    if v == "EQUIV":
        if p % 4 != 1:
            raise ResidueConditionViolated(f"EQUIV needs p ≡ 1 (mod 4), got p = {p}")
        lhs = sum_mao(p - 1, p, 4)
        rhs = ResidueClass(4 * sum_main(Fraction(1, 4), p - 1, p, 4).value % m, m)
        return make_record("EQUIV", f"{p}^4", lhs, rhs, p=p, truncation="full")
    if v == "MAO_HALF":
        M, trunc = p - 1, "full"
        x = _euler_at(p, 1, 4) * pow(16, -1, p)
    else:  # SUN_HALF_CONJ
        M, trunc = (p - 1) // 2, "short"
        x = legendre(2, p) * euler_number_mod(p - 3, p).value * pow(4, -1, p)
    lhs = sum_mao(M, p, 4)
    rhs = ResidueClass((p * legendre(-2, p) + _p3_times(p, x, m)) % m, m)
    return make_record(v, f"{p}^4", lhs, rhs, p=p, truncation=trunc)


# ---------------------------------------------------------------------------
# auxiliary Pochhammer-quotient congruences

@lru_cache(maxsize=8)
def _poch_prefix(alpha: Fraction, p: int) -> tuple[Fraction, ...]:
    # (alpha)_j for j = 0..2p-1
    out = [Fraction(1)]
    for j in range(2 * p - 1):
        out.append(out[-1] * (alpha + j))
    return tuple(out)


def verify_lemma(family: str, alpha: Fraction, p: int) -> VerificationRecord:
    """The five Pochhammer-quotient congruences mod p^4.

    Families (a = <-alpha>_p, alpha + a = p*t throughout):

    * LEMMA_WZPROD:  (alpha)_{2p-1}/(p-1)!^2, two branches (a = p-1 / a < p-1);
      needs alpha ≢ 0 (mod p).
    * LEMMA_ALPHAP3: (alpha)_p^3/(p-1)!^3 ≡ (alpha+a)^3.
    * LEMMA_SIGMA1:  weighted sum over k = 1..a; needs alpha ≢ 0 (mod p).
    * LEMMA_PROD:    (alpha)_p^2 (alpha)_{p+a} / ((p-1)!^2 (p-a-1)! (alpha)_{a+1}^2).
    * LEMMA_SIGMA:   weighted sum over k = a+2..p-1; needs a <= p-2.

    Nonpositive-integer alphas that zero a denominator Pochhammer raise
    DivisionByZeroTerm.
    """
    fam = _norm_family(family)
    if not fam.startswith("LEMMA_"):
        fam = "LEMMA_" + fam
    if fam not in LEMMA_FAMILIES:
        raise ValueError(f"unknown lemma family: {family!r}")
    if p <= 3:
        raise PreconditionViolated(f"needs p > 3, got p = {p}")
    alpha = Fraction(alpha)
    dec = decompose(alpha, p)
    a, t = dec.a, dec.t
    poch = _poch_prefix(alpha, p)
    fact = math.factorial
    fpm1 = Fraction(fact(p - 1))

    if fam == "LEMMA_WZPROD":
        if a == 0:
            raise PreconditionViolated(f"alpha = {alpha} ≡ 0 (mod {p})")
        lhs = poch[2 * p - 1] / fpm1**2
        if a == p - 1:
            rhs = p * t
        else:
            ha = harmonic(a).value
            rhs = -(p * p * t * (t + 1) / (a + 1)) * (
                1 + 2 * p * ha + p * (t + 2) / (a + 1)
            )
    elif fam == "LEMMA_ALPHAP3":
        lhs = poch[p] ** 3 / fpm1**3
        rhs = (alpha + a) ** 3
    elif fam == "LEMMA_SIGMA1":
        if a == 0:
            raise PreconditionViolated(f"alpha = {alpha} ≡ 0 (mod {p})")
        if poch[a] == 0:
            raise DivisionByZeroTerm(
                f"(alpha)_k = 0 for some k <= {a} at alpha = {alpha}"
            )
        s = Fraction(0)
        for k in range(1, a + 1):
            s += _parity_sign(k) * poch[p + k - 1] / (fact(p - k) * poch[k] ** 2)
        lhs = poch[p] ** 2 / fpm1**2 * s
        rhs = (
            _parity_sign(a + 1)
            * (alpha + a) ** 3
            * (harmonic(a, 2).value + 2 * alternating_reciprocal_squares(a))
        )
    elif fam == "LEMMA_PROD":
        if poch[a + 1] == 0:
            raise DivisionByZeroTerm(
                f"(alpha)_{a + 1} = 0 at alpha = {alpha} (p = {p})"
            )
        lhs = poch[p] ** 2 * poch[p + a] / (fpm1**2 * fact(p - a - 1) * poch[a + 1] ** 2)
        pt = alpha + a
        ha = harmonic(a).value
        ha2 = harmonic(a, 2).value
        rhs = (
            pt
            + p * pt * (t + 1) * ha
            + p**2 * pt * (t + 1) ** 2 / 2 * ha**2
            + p**2 * pt * (t**2 + 4 * t + 1) / 2 * ha2
        )
    else:  # LEMMA_SIGMA
        if a > p - 2:
            raise PreconditionViolated(f"a = p-1 violates a <= p-2 (alpha = {alpha})")
        if poch[p - 1] == 0:
            raise DivisionByZeroTerm(
                f"(alpha)_k = 0 for some k <= {p - 1} at alpha = {alpha}"
            )
        s = Fraction(0)
        for k in range(a + 2, p):
            s += _parity_sign(k) * poch[p + k - 1] / (fact(p - k) * poch[k] ** 2)
        lhs = poch[p] ** 2 / fpm1**2 * s
        sa = _parity_sign(a)
        ha = harmonic(a).value
        ha2 = harmonic(a, 2).value
        rhs = sa * p**2 * t * (t + 1) * (ha - Fraction(sa, a + 1)) + sa * p**3 * t * (
            t + 1
        ) * (
            (t + 1) / 2 * ha**2
            + (3 * t + 1) / 2 * ha2
            - Fraction(2 * sa, a + 1) * ha
            - sa * (t + 2) / (a + 1) ** 2
        )

    return make_record(
        fam,
        f"{p}^4",
        reduce_mod(lhs, p, 4),
        reduce_mod(rhs, p, 4),
        p=p,
        alpha=alpha,
    )

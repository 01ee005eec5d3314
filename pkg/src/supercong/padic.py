"""Exact rationals reduced modulo prime powers.

Rationals are stdlib :class:`fractions.Fraction` values, which are always
stored in lowest terms with positive denominator.  A rational x is a p-adic
integer when p does not divide its denominator; only such values have a
residue mod p**e.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "MAX_EXPONENT",
    "NotPAdicIntegral",
    "ResidueClass",
    "AlphaDecomposition",
    "parse_rational",
    "is_p_integral",
    "reduce_mod",
    "least_nonneg_residue",
    "decompose",
    "legendre",
]

MAX_EXPONENT = 4  # residue arithmetic in this package never leaves p**4

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


class NotPAdicIntegral(ArithmeticError):
    """Raised when a residue is requested for x with p dividing den(x)."""


@dataclass(frozen=True)
class ResidueClass:
    """An integer residue together with its (prime-power) modulus."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} outside [0, {self.modulus})")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class AlphaDecomposition:
    """alpha written against a prime p as alpha + a = p*t.

    a is the least nonnegative residue of -alpha mod p, so 0 <= a <= p-1
    and t is again a p-adic integer.
    """

    alpha: Fraction
    p: int
    a: int
    t: Fraction


def parse_rational(text: str) -> Fraction:
    """Parse a base-10 rational literal "num/den" or "num" (optional leading minus)."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def is_p_integral(x: Fraction, p: int) -> bool:
    """True when x has no p in its denominator."""
    return x.denominator % p != 0


def reduce_mod(x: Fraction, p: int, e: int) -> ResidueClass:
    """Residue of the rational x modulo p**e.

    Computed as num * den^(-1) mod p**e; the denominator inverse exists
    exactly when x is a p-adic integer.
    """
    if not 1 <= e <= MAX_EXPONENT:
        raise ValueError(f"exponent must be in 1..{MAX_EXPONENT}, got {e}")
    x = Fraction(x)
    if not is_p_integral(x, p):
        raise NotPAdicIntegral(f"{x} has no residue mod {p}^{e}")
    m = p**e
    return ResidueClass(x.numerator * pow(x.denominator, -1, m) % m, m)


def least_nonneg_residue(alpha: Fraction, p: int) -> int:
    """The unique r in 0..p-1 with alpha ≡ r (mod p)."""
    return reduce_mod(Fraction(alpha), p, 1).value


def decompose(alpha: Fraction, p: int) -> AlphaDecomposition:
    """Split alpha as alpha + a = p*t with a = least residue of -alpha mod p."""
    alpha = Fraction(alpha)
    a = least_nonneg_residue(-alpha, p)
    t = (alpha + a) / p
    # alpha + a ≡ 0 (mod p) by construction, so t is p-integral
    assert is_p_integral(t, p)
    return AlphaDecomposition(alpha=alpha, p=p, a=a, t=t)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, via Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1

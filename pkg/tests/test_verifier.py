"""Congruence verification: sums, theorem families, lemmas."""

import math
from fractions import Fraction

import pytest

from supercong.padic import NotPAdicIntegral, reduce_mod
from supercong.records import (
    PreconditionViolated,
    ResidueConditionViolated,
    SkippedWhenAEqualsPMinus1,
    TruncationTooLarge,
)
from supercong.sequences import euler_number, euler_poly_eval, pochhammer
from supercong.verifier import (
    FAMILIES,
    sum_main,
    sum_main_exact,
    sum_mao,
    sum_mao_exact,
    ramanujan_partial,
    verify_lemma,
    verify_main1,
    verify_mao_equiv,
    verify_tail,
    verify_theorem,
)
from supercong.wz import DivisionByZeroTerm, telescoped_rhs


def test_sum_main_exact_small():
    assert sum_main_exact(Fraction(1, 3), 0) == Fraction(1, 3)
    assert sum_main_exact(Fraction(1, 3), 2) == Fraction(644, 2187)
    assert 3 * sum_main_exact(Fraction(1, 3), 2) == Fraction(644, 729)
    assert sum_main_exact(Fraction(0), 5) == 0


def test_sum_main_residue_matches_exact():
    for p in (5, 7, 11, 13):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(2)):
            for M in (0, 1, 3, p - 1):
                want = reduce_mod(sum_main_exact(a, M), p, 4).value
                assert sum_main(a, M, p, 4).value == want


def test_sum_main_weight_one_telescopes_to_p():
    # alpha = 1 collapses to sum (-1)^k (2k+1) = p over k < p
    for p in (5, 7, 11, 23):
        assert sum_main(Fraction(1), p - 1, p, 4).value == p


def test_sum_main_validates():
    with pytest.raises(TruncationTooLarge):
        sum_main(Fraction(1, 2), 7, 7, 4)
    with pytest.raises(ValueError):
        sum_main(Fraction(1, 2), -1, 7, 4)
    with pytest.raises(NotPAdicIntegral):
        sum_main(Fraction(1, 5), 2, 5, 4)


def test_scaling_identity_per_summand():
    # d * S(1/d) reproduces the (2dk+1)-weighted series term by term
    for d in (2, 3, 4):
        a = Fraction(1, d)
        for M in (0, 1, 4):
            direct = sum(
                Fraction(-1) ** k
                * (2 * d * k + 1)
                * pochhammer(a, k) ** 3
                / math.factorial(k) ** 3
                for k in range(M + 1)
            )
            assert d * sum_main_exact(a, M) == direct


def test_sum_mao_matches_exact():
    for p in (5, 7, 13):
        for M in (0, 2, p - 1):
            want = reduce_mod(sum_mao_exact(M), p, 4).value
            assert sum_mao(M, p, 4).value == want


def test_golden_short_truncation_instance():
    # p = 7: three-term weighted sum is 644/729 and misses the closed form
    # by exactly -5 * 7^4 / 729
    lhs = 3 * sum_main_exact(Fraction(1, 3), 2)
    assert lhs == Fraction(644, 729)
    rhs = 7 + Fraction(7**3, 9) * euler_poly_eval(4, Fraction(1, 3))
    assert rhs == Fraction(12649, 729)
    assert lhs - rhs == Fraction(-5 * 7**4, 729)


def test_golden_weight_four_p5():
    # p = 5, (4k+1) weights: short sum 435/512, defect -17 * 5^3 / 512
    lhs = 2 * sum_main_exact(Fraction(1, 2), 2)
    assert lhs == Fraction(435, 512)
    assert lhs - 5 == Fraction(-2125, 512)
    assert 2125 == 17 * 5**3
    # full sum still matches mod 5^3 but the mod-5^4 defect needs E_2 = -1
    full = 2 * sum_main_exact(Fraction(1, 2), 4)
    assert full == Fraction(1678635, 2097152)
    rhs4 = 5 * (-1) ** 2 + 5**3 * euler_number(2)
    d = full - rhs4
    assert d.numerator % 5**4 == 0 and d.denominator % 5 != 0


def test_every_family_passes_first_prime():
    first = {
        "B2": 5, "E2": 7, "F2": 5, "SW_E2": 5, "SW_F2": 7,
        "E2_MOD4": 7, "F2_MOD4": 5, "SW_E2_MOD4": 5, "SW_F2_MOD4": 7,
        "SUN_B2": 5,
    }
    assert set(first) == set(FAMILIES)
    for fam, p in first.items():
        for tr in ("short", "full"):
            r = verify_theorem(fam, p, tr)
            assert r.passed, (fam, p, tr)
            assert r.lhs == r.rhs
            assert r.family == fam and r.p == p and r.truncation == tr


def test_verify_theorem_record_fields():
    r = verify_theorem("E2_MOD4", 7, "short")
    assert r.passed is True
    assert r.modulus == "7^4"
    assert int(r.lhs) == int(r.rhs)


def test_verify_theorem_name_normalization():
    assert verify_theorem("e2-mod4", 7).passed
    assert verify_theorem("sun_b2", 5).passed


def test_verify_theorem_residue_condition():
    with pytest.raises(ResidueConditionViolated):
        verify_theorem("E2_MOD4", 5)  # needs p ≡ 1 (mod 3)
    with pytest.raises(ResidueConditionViolated):
        verify_theorem("F2_MOD4", 7)  # needs p ≡ 1 (mod 4)
    with pytest.raises(ResidueConditionViolated):
        verify_theorem("SW_F2_MOD4", 5)  # needs p ≡ 3 (mod 4)


def test_verify_theorem_small_p_rejected():
    with pytest.raises(PreconditionViolated):
        verify_theorem("B2", 3)
    with pytest.raises(PreconditionViolated):
        verify_theorem("B2", 2)


def test_modulus_exponent_loosening_only():
    # a p^4 family may be rechecked mod p^3; a p^3 family cannot claim p^4
    assert verify_theorem("E2_MOD4", 7, "short", modulus_exp=3).passed
    assert verify_theorem("E2_MOD4", 7, "short", modulus_exp=3).modulus == "7^3"
    with pytest.raises(PreconditionViolated):
        verify_theorem("B2", 5, "short", modulus_exp=4)
    with pytest.raises(ValueError):
        verify_theorem("B2", 5, "short", modulus_exp=2)


def test_mod_p3_weakening_of_p4_families():
    for fam in ("E2_MOD4", "SUN_B2", "SW_E2_MOD4"):
        f = FAMILIES[fam]
        for p in (5, 7, 11, 13, 17, 19):
            if f.p_mod is not None and p % f.p_mod != f.p_res:
                continue
            if p == 3:
                continue
            assert verify_theorem(fam, p, "full", modulus_exp=3).passed


def test_p_cubed_times_residue_truncation():
    # p^3 * (x mod p) ≡ p^3 * x (mod p^4): the closed forms only ever need
    # their Euler factor mod p
    for p in (5, 7, 13):
        for x in (0, 1, 7, 123456, -5):
            assert (p**3 * (x % p) - p**3 * x) % p**4 == 0


def test_verify_main1_full_and_short():
    for p in (5, 7, 13):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(5, 6), Fraction(3)):
            assert verify_main1(a, p, "full").passed
            assert verify_main1(a, p, "short").passed


def test_verify_main1_alpha_zero_trivial():
    r = verify_main1(Fraction(0), 7, "full")
    assert r.passed and int(r.lhs) == 0 and int(r.rhs) == 0


def test_verify_main1_records():
    r = verify_main1(Fraction(1, 3), 7, "short")
    assert r.family == "MAIN1_TRUNC" and r.alpha == Fraction(1, 3)
    r = verify_main1(Fraction(1, 3), 7, "full")
    assert r.family == "MAIN1"


def test_truncation_equivalence():
    # dropping the tail block does not change the sum mod p^4
    for p in (5, 7, 13):
        for alpha in (Fraction(1, 2), Fraction(2, 3), Fraction(1, 4)):
            from supercong.padic import decompose

            a = decompose(alpha, p).a
            assert (
                sum_main(alpha, a, p, 4).value
                == sum_main(alpha, p - 1, p, 4).value
            )


def test_verify_tail():
    assert verify_tail(Fraction(1, 3), 7).passed
    assert verify_tail(Fraction(1, 4), 13).passed
    with pytest.raises(SkippedWhenAEqualsPMinus1):
        verify_tail(Fraction(1), 7)
    with pytest.raises(SkippedWhenAEqualsPMinus1):
        verify_tail(Fraction(1, 6), 5)


def test_sum_matches_telescoped_closed_form():
    # cross-oracle: residue pipeline vs exact rational certificate sum
    for p in (5, 7, 11):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)):
            lhs = sum_main(a, p - 1, p, 4).value
            rhs = reduce_mod(telescoped_rhs(p, a), p, 4).value
            assert lhs == rhs


def test_verify_mao_variants():
    for p in (5, 7, 11, 13):
        assert verify_mao_equiv(p, "MAO_HALF").passed
        assert verify_mao_equiv(p, "SUN_HALF_CONJ").passed
    assert verify_mao_equiv(13, "EQUIV").passed
    with pytest.raises(ResidueConditionViolated):
        verify_mao_equiv(7, "EQUIV")  # needs p ≡ 1 (mod 4)


def test_mao_p5_closed_form_exact():
    # full (6k+1) sum at p = 5 against 5*(-2|5) + (5^3/16) E_2(1/4), exactly
    lhs = sum_mao_exact(4)
    assert lhs == Fraction(7733766915, 8589934592)
    rhs = -5 + Fraction(125, 16) * euler_poly_eval(2, Fraction(1, 4))
    d = lhs - rhs
    assert d.numerator % 5**4 == 0 and d.denominator % 5 != 0


def test_equiv_identity_p13():
    # p ≡ 1 (mod 4): the (6k+1) full sum equals 4 * S(1/4) mod p^4
    assert (
        sum_mao(12, 13, 4).value
        == (4 * sum_main(Fraction(1, 4), 12, 13, 4).value) % 13**4
    )


def test_verify_lemma_examples():
    r = verify_lemma("LEMMA_WZPROD", Fraction(1), 5)
    assert r.passed and int(r.lhs) == 5  # 630 mod 625
    assert verify_lemma("LEMMA_WZPROD", Fraction(1, 3), 7).passed
    assert verify_lemma("LEMMA_ALPHAP3", Fraction(1, 3), 7).passed
    assert verify_lemma("LEMMA_SIGMA1", Fraction(1, 2), 11).passed
    assert verify_lemma("LEMMA_PROD", Fraction(1, 2), 11).passed
    assert verify_lemma("LEMMA_SIGMA", Fraction(1, 2), 11).passed


def test_verify_lemma_sweep():
    alphas = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4))
    for fam in ("LEMMA_WZPROD", "LEMMA_ALPHAP3", "LEMMA_SIGMA1",
                "LEMMA_PROD", "LEMMA_SIGMA"):
        for p in (5, 7, 11, 13, 17):
            for a in alphas:
                try:
                    assert verify_lemma(fam, a, p).passed, (fam, a, p)
                except (PreconditionViolated, DivisionByZeroTerm):
                    pass


def test_verify_lemma_preconditions():
    with pytest.raises(PreconditionViolated):
        verify_lemma("LEMMA_SIGMA", Fraction(1), 7)  # a = p-1 > p-2
    with pytest.raises(PreconditionViolated):
        verify_lemma("LEMMA_WZPROD", Fraction(5, 6), 5)  # alpha ≡ 0 (mod 5)
    with pytest.raises(DivisionByZeroTerm):
        verify_lemma("LEMMA_PROD", Fraction(-1), 7)  # (alpha)_{a+1} = 0
    with pytest.raises(ValueError):
        verify_lemma("NOPE", Fraction(1, 2), 7)


def test_alphap3_all_alpha_including_zero_mod_p():
    # this cube identity has no residue restriction on alpha
    assert verify_lemma("LEMMA_ALPHAP3", Fraction(5, 6), 5).passed
    assert verify_lemma("LEMMA_ALPHAP3", Fraction(-2), 7).passed


def test_ramanujan_partial():
    assert ramanujan_partial(1) == 1.0
    assert abs(ramanujan_partial(50) - 2 / math.pi) < 1e-6
    # estimates improve monotonically enough to cross thresholds
    assert abs(ramanujan_partial(20) - 2 / math.pi) < 1e-6
    assert abs(ramanujan_partial(10) - 2 / math.pi) < 1e-3
    with pytest.raises(ValueError):
        ramanujan_partial(0)

"""Rational certificate pair: pointwise values, pair relation, telescoping."""

from fractions import Fraction

import pytest

from supercong.wz import (
    DivisionByZeroTerm,
    WZPoint,
    check_pair,
    check_telescoped,
    eval_F,
    eval_G,
    sample_alphas,
    telescoped_rhs,
)


def test_point_values():
    assert eval_F(WZPoint(0, 0, Fraction(1, 2))) == Fraction(1, 2)
    assert eval_F(WZPoint(1, 0, Fraction(1, 2))) == Fraction(-5, 16)
    assert eval_G(WZPoint(1, 0, Fraction(1, 2))) == Fraction(-1, 4)
    assert eval_G(WZPoint(1, 1, Fraction(2, 3))) == Fraction(2, 3)


def test_f_vanishes_below_diagonal():
    # 1/(1)_m = 0 for m < 0 kills k > n
    assert eval_F(WZPoint(2, 5, Fraction(1, 3))) == 0
    assert eval_G(WZPoint(2, 5, Fraction(1, 3))) == 0


def test_g_vanishes_at_n_zero():
    for k in range(4):
        assert eval_G(WZPoint(0, k, Fraction(1, 2))) == 0


def test_f_at_k_zero_is_series_summand():
    # F(n, 0) = (-1)^n (2n + a) (a)_n^3 / n!^3
    from supercong.sequences import pochhammer
    import math

    for a in (Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)):
        for n in range(6):
            want = (
                Fraction(-1) ** n
                * (2 * n + a)
                * pochhammer(a, n) ** 3
                / math.factorial(n) ** 3
            )
            assert eval_F(WZPoint(n, 0, a)) == want


def test_pole_raises():
    with pytest.raises(DivisionByZeroTerm):
        eval_F(WZPoint(3, 2, Fraction(-1)))  # (alpha)_k = 0 at alpha = -1, k = 2
    with pytest.raises(DivisionByZeroTerm):
        eval_G(WZPoint(3, 2, Fraction(-1)))


def test_pair_relation_small_grid():
    assert check_pair(5, 5, [Fraction(1, 2), Fraction(1, 3)])
    assert check_pair(4, 6, [Fraction(-2, 5)])


def test_telescoped_small():
    for N in (1, 2, 3, 10):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(5, 7)):
            assert check_telescoped(N, a)


def test_telescoped_even_length():
    # regression: the correction-sum sign depends on the parity of N
    assert check_telescoped(2, Fraction(1))
    lhs = sum(eval_F(WZPoint(k, 0, Fraction(1))) for k in range(2))
    assert lhs == Fraction(-2)
    assert telescoped_rhs(2, Fraction(1)) == Fraction(-2)


def test_telescoped_rhs_matches_partial_sums():
    for a in (Fraction(1, 4), Fraction(2, 3)):
        acc = Fraction(0)
        for N in range(1, 9):
            acc += eval_F(WZPoint(N - 1, 0, a))
            assert telescoped_rhs(N, a) == acc


def test_sample_alphas_deterministic_and_pole_free():
    a1 = sample_alphas(12, seed=3, k_max=30)
    a2 = sample_alphas(12, seed=3, k_max=30)
    assert a1 == a2
    assert len(set(a1)) == 12
    for a in a1:
        # no nonpositive integers: those put zeros in (alpha)_k
        assert not (a.denominator == 1 and a <= 0)
    assert sample_alphas(5, seed=0) != sample_alphas(5, seed=1)

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from sympy import primerange

from oracles import legendre_euler, mod_of, neg_res, two_squares_brute
from padic_hyper.errors import OrderTooSmall
from padic_hyper.registry import Verdict, check_case
from padic_hyper.special import (
    CM_IDS,
    QSeries,
    ahlgren_ono_check,
    binomial_sum,
    cm_congruence_check,
    dflst_check,
    eta_product_ap,
    eta_product_series,
    euler_factor_power,
)

F = Fraction


def _naive_eta(order: int, second_power: int = 4) -> list[int]:
    """q prod (1-q^2n)^4 (1-q^4n)^second_power by repeated binomial multiplication."""
    c = [0] * (order + 1)
    c[0] = 1
    factors = [(2 * n, 4) for n in range(1, order // 2 + 1)] + [(4 * n, second_power) for n in range(1, order // 4 + 1)]
    for deg, power in factors:
        for _ in range(power):
            nxt = c[:]
            for i in range(deg, order + 1):
                nxt[i] -= c[i - deg]
            c = nxt
    return [0] + c[:order]


def test_eta_expansion_matches_naive_product():
    assert list(eta_product_series(60).coeffs) == _naive_eta(60)


def test_eta_expansion_is_stable_under_order_increase():
    low = eta_product_series(50).coeffs
    for order in (60, 80, 120):
        assert eta_product_series(order).coeffs[:51] == low


def test_eta_first_coefficients():
    s = eta_product_series(12)
    assert [s[n] for n in (1, 3, 5, 7, 9, 11)] == [1, -4, -2, 24, -11, -44]
    assert all(s[n] == 0 for n in range(0, 13, 2))


def test_eta_coefficients_are_multiplicative():
    s = eta_product_series(160)
    assert s[15] == s[3] * s[5]
    assert s[21] == s[3] * s[7]
    # Hecke recursion at a good prime: a(p^2) = a(p)^2 - p^3.
    for p in (3, 5, 7, 11):
        assert s[p * p] == s[p] ** 2 - p**3


def test_eta_order_below_prime_is_rejected():
    with pytest.raises(OrderTooSmall):
        eta_product_ap(53, 50)


def test_exponent_two_on_second_factor_does_not_fit():
    """With (1-q^4n)^2 the expansion is not a Hecke eigenform, so the congruence fails."""
    wrong = _naive_eta(60, second_power=2)
    misses = 0
    for p in primerange(5, 48):
        lhs = check_case("eq-1.3-ahlgren-ono", p).lhs
        if int(lhs) != wrong[p] % (p * p):
            misses += 1
    assert misses > 0


def test_qseries_algebra():
    a = euler_factor_power(1, 3, 30)
    b = euler_factor_power(2, 1, 30)
    c = euler_factor_power(3, 2, 30)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * QSeries.one(30) == a


def test_euler_factor_is_pentagonal_at_step_one():
    s = euler_factor_power(1, 1, 40)
    expected = [0] * 41
    for k in range(-6, 7):
        g = k * (3 * k - 1) // 2
        if 0 <= g <= 40:
            expected[g] += (-1) ** k
    assert list(s.coeffs) == expected


def test_ahlgren_ono_and_kilbourn_examples():
    assert ahlgren_ono_check(5, 2).verdict is Verdict.HOLDS
    assert ahlgren_ono_check(7, 3).verdict is Verdict.HOLDS
    assert ahlgren_ono_check(3, 3).verdict is Verdict.CONDITION_NOT_MET
    with pytest.raises(ValueError):
        ahlgren_ono_check(5, 4)


def test_dflst_examples():
    assert dflst_check(5).verdict is Verdict.HOLDS
    assert dflst_check(13).verdict is Verdict.HOLDS
    assert dflst_check(7).verdict is Verdict.CONDITION_NOT_MET


def test_cm_examples():
    assert cm_congruence_check("eq-12.16-sun-48", 7).verdict is Verdict.HOLDS
    assert cm_congruence_check("eq-12.4-legendre-sqrt-3", 13).verdict is Verdict.HOLDS
    assert cm_congruence_check("eq-2.26-quarter-cm", 7).verdict is Verdict.CONDITION_NOT_MET


def test_sun48_right_side_from_brute_force_pair():
    for p in primerange(7, 200):
        if p % 3 != 1:
            continue
        (a,) = {x for x, _ in two_squares_brute(p, 3) if x % 3 == 1}
        m = p * p
        lhs = sum(F(comb(2 * k, k) * comb(4 * k, 2 * k), 48**k) for k in range(p))
        rhs = 2 * a - F(p, 2 * a)
        assert mod_of(lhs, m) == mod_of(rhs, m)


def test_cm_ids_cover_the_cornacchia_family():
    assert "eq-12.16-sun-48" in CM_IDS and "eq-12.4-legendre-sqrt-3" in CM_IDS


def _sides(theorem_id: str, p: int) -> tuple[int, int]:
    res = check_case(theorem_id, p)
    assert res.verdict is Verdict.HOLDS
    return int(res.lhs), int(res.rhs)


def _cm_primes(hi: int = 200):
    return [p for p in primerange(7, hi) if p % 3 == 1]


def test_four_thirds_sign_tracks_the_residue_of_minus_quarter():
    """Dropping (-1)^<-1/4>_p leaves a form that holds exactly when <-1/4>_p is even."""
    for p in _cm_primes():
        lhs, rhs = _sides("eq-12.12-four-thirds", p)
        literal = rhs if neg_res(F(1, 4), p) % 2 == 0 else (-rhs) % (p * p)
        assert (lhs == literal) == (neg_res(F(1, 4), p) % 2 == 0)


def test_four_thirds_agrees_with_the_minus_third_gamma_form():
    """The reflection z -> 1-z maps -1/3 to 4/3 and costs the sign (-1)^<-1/4>_p."""
    for p in _cm_primes():
        a, _ = _sides("eq-12.8-goursat-minus-third", p)
        b, _ = _sides("eq-12.12-four-thirds", p)
        sign = (-1) ** neg_res(F(1, 4), p)
        assert b == sign * a % (p * p)


def test_quarter_at_quarter_needs_half_not_two():
    for p in _cm_primes():
        if p % 4 != 3:
            continue
        lhs, rhs = _sides("eq-12.9-quarter-at-quarter", p)
        assert lhs != 4 * rhs % (p * p)


def test_minus_third_literal_sign_fails():
    """(sqrt(-3)/p) with the factor -3 for p = 3 mod 4 does not match the series."""
    misses = 0
    for p in _cm_primes():
        lhs, rhs = _sides("eq-12.10-minus-third-cm", p)
        (pair,) = [
            (x, y)
            for x, y in two_squares_brute(p, 3)
            if ((x % 2 == 0 and x > 0) or (y % 2 == 0 and y > 0)) and (x + y) % 4 == 1
        ]
        a, b = pair
        s = a * pow(b, -1, p) % p
        base = rhs * legendre_euler(a, p)
        leg_s = legendre_euler(s, p)
        literal = leg_s * base if p % 4 == 1 else -3 * leg_s * base
        if lhs != literal % (p * p):
            misses += 1
    assert misses > 0


def test_binomial_sum_needs_negative_ratio():
    misses = 0
    for p in _cm_primes():
        lhs, rhs = _sides("eq-12.17-binomial-144", p)
        plus = binomial_sum(p, p * p, lambda k: comb(2 * k, k) ** 2 * comb(4 * k, 2 * k), F(1, 144))
        if plus != rhs:
            misses += 1
    assert misses > 0

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import exact_series, gamma_oracle, mod_of
from padic_hyper.core import context, embed, legendre_symbol
from padic_hyper.gamma import ExponentSpec, gamma_int, zpow
from padic_hyper.hyper import hyper_sum

PRIMES = st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 29, 31])


@st.composite
def p_integral(draw, p: int, lo: int = -200, hi: int = 200):
    den = draw(st.integers(1, 60).filter(lambda d: d % p))
    return Fraction(draw(st.integers(lo, hi)), den)


@st.composite
def prime_and_rational(draw):
    p = draw(PRIMES)
    return p, draw(p_integral(p))


@given(prime_and_rational())
def test_embedding_is_a_ring_map(pr):
    p, x = pr
    ctx = context(p)
    y = x * 3 - Fraction(1, 2 if p != 2 else 3)
    assert (embed(x, ctx, 2) * embed(y, ctx, 2)).value == embed(x * y, ctx, 2).value
    assert (embed(x, ctx, 2) + embed(y, ctx, 2)).value == embed(x + y, ctx, 2).value


@given(prime_and_rational())
def test_gamma_functional_equation(pr):
    p, x = pr
    m = p * p
    factor = -mod_of(x, m) if x.numerator % p else -1
    assert gamma_int(x + 1, p) == factor * gamma_int(x, p) % m


@given(prime_and_rational())
def test_gamma_matches_defining_product(pr):
    p, x = pr
    assert gamma_int(x, p, 2) == gamma_oracle(x, p, 2)


@given(PRIMES, st.integers(1, 10**6), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_zpow_is_additive_in_the_exponent(p, zr, a1, s1, a2, s2):
    ctx = context(p)
    z = zr if zr % p else zr + 1
    e1, e2 = ExponentSpec(a1, Fraction(s1, 2 if p != 2 else 1)), ExponentSpec(a2, Fraction(s2, 3 if p != 3 else 1))
    lhs = zpow(z, e1 + e2, ctx).value
    rhs = zpow(z, e1, ctx).value * zpow(z, e2, ctx).value % (p * p)
    assert lhs == rhs


@given(PRIMES, st.integers(-10**4, 10**4))
def test_legendre_is_multiplicative(p, a):
    ctx = context(p)
    b = a + 7
    assert legendre_symbol(a * b, ctx) == legendre_symbol(a, ctx) * legendre_symbol(b, ctx)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([5, 7, 11, 13]),
    st.integers(0, 8),
    st.lists(st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(5, 6), Fraction(1)]), min_size=1, max_size=2),
    st.integers(-9, 9),
)
def test_terminating_sum_equals_exact_value(p, n, rest, zi):
    upper = [Fraction(-n)] + rest
    lower = [Fraction(1)] * len(rest)
    z = Fraction(zi)
    exact = exact_series(upper, lower, z, n)
    got = hyper_sum(upper, lower, z, n, p, 2)
    if exact.denominator % p == 0:
        return
    assert got.to_residue(2) == mod_of(exact, p * p)

"""The Morita p-adic gamma function, exponent specs and derivative identities."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import (
    PrimeContext,
    RationalLike,
    Residue,
    as_rational,
    harmonic_mod_p,
    residue_int,
)
from .errors import NotAUnit, NotPIntegral

_TABLES: dict[tuple[int, int], "GammaTable"] = {}
_TABLES_LOCK = threading.Lock()


@dataclass(frozen=True)
class GammaTable:
    """Gamma_p(n) mod p^k for every n in [0, p^k)."""

    p: int
    k: int
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @staticmethod
    def build(p: int, k: int) -> "GammaTable":
        m = p**k
        vals = [0] * m
        g = 1
        vals[0] = 1
        for n in range(m - 1):
            # Gamma_p(n+1) = -n Gamma_p(n) if p does not divide n, else -Gamma_p(n)
            g = (-g if n % p == 0 else -n * g) % m
            vals[n + 1] = g
        return GammaTable(p, k, tuple(vals))


def gamma_table(p: int, k: int) -> GammaTable:
    """Memoized table for (p, k); built once, then shared read-only."""
    key = (p, k)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(key)
            if table is None:
                table = GammaTable.build(p, k)
                _TABLES[key] = table
    return table


def gamma_int(alpha: Fraction, p: int, k: int = 2) -> int:
    """Gamma_p(alpha) mod p^k as a plain int (hot-path variant of :func:`gamma_p`)."""
    table = gamma_table(p, k)
    return table.values[residue_int(alpha, p, table.modulus)]


def gamma_p(alpha: RationalLike, ctx: PrimeContext, k: int = 2) -> Residue:
    """Gamma_p(alpha) mod p^k, read from the table at the residue of alpha mod p^k."""
    if k not in (1, 2, 3):
        raise ValueError("precision exponent must be 1, 2 or 3")
    return Residue(gamma_int(as_rational(alpha), ctx.p, k), ctx.p**k)


def gamma_reflection_check(alpha: RationalLike, ctx: PrimeContext) -> bool:
    """Gamma_p(x) Gamma_p(1-x) = (-1)^(<-x>_p - 1) mod p^2."""
    a = as_rational(alpha)
    p, m = ctx.p, ctx.p2
    lhs = gamma_int(a, p) * gamma_int(1 - a, p) % m
    e = residue_int(-a, p, p) - 1
    rhs = (-1) ** (e % 2) % m
    return lhs == rhs


@dataclass(frozen=True)
class ExponentSpec:
    """The p-adic exponent ``a + s*(p-1)`` with ``a`` an integer and ``s`` p-integral."""

    a: int
    s: Fraction = Fraction(0)

    def __add__(self, other: "ExponentSpec") -> "ExponentSpec":
        return ExponentSpec(self.a + other.a, self.s + other.s)

    def __neg__(self) -> "ExponentSpec":
        return ExponentSpec(-self.a, -self.s)

    def __sub__(self, other: "ExponentSpec") -> "ExponentSpec":
        return self + (-other)

    def scale(self, n: int) -> "ExponentSpec":
        return ExponentSpec(n * self.a, n * self.s)


def neg_lambda(alpha: RationalLike, ctx: PrimeContext) -> ExponentSpec:
    """Exponent spec of -lambda_p(alpha) = <-alpha>_p - (alpha + <-alpha>_p)(p-1)/p."""
    a = as_rational(alpha)
    r = residue_int(-a, ctx.p, ctx.p)
    return ExponentSpec(r, -(a + r) / ctx.p)


def one_minus_lambda(alpha: RationalLike, ctx: PrimeContext, mult: int = 1) -> ExponentSpec:
    """Exponent spec of 1 - mult*lambda_p(alpha)."""
    return ExponentSpec(1) + neg_lambda(alpha, ctx).scale(mult)


def lambda_p2(alpha: RationalLike, ctx: PrimeContext) -> int:
    """Integer exponent agreeing with lambda_p(alpha) for powers of units mod p^2."""
    a = as_rational(alpha)
    p = ctx.p
    r1 = residue_int(-a, p, p)
    r2 = residue_int(-a, p, ctx.p2)
    return (r1 - r2) // p * (p - 1) - r1


def zpow_int(z: int, e: ExponentSpec, p: int) -> int:
    """``z**(a + s(p-1))`` mod p^2 for an integer unit residue ``z``."""
    m = p * p
    if z % p == 0:
        raise NotAUnit(f"{z} is not a unit mod {p}")
    base = pow(z, e.a, m)
    if e.s == 0:
        return base
    w = (pow(z, p - 1, m) - 1) % m
    return base * (1 + residue_int(e.s, p, m) * w) % m


def zpow(z: Union[RationalLike, Residue], e: ExponentSpec, ctx: PrimeContext) -> Residue:
    """z^(a + s(p-1)) mod p^2 = z^a (1 + s(z^(p-1) - 1)) mod p^2."""
    if isinstance(z, Residue):
        zi = z.value % ctx.p2
    else:
        zr = as_rational(z)
        if zr.numerator % ctx.p == 0:
            raise NotAUnit(f"{zr} is not a {ctx.p}-adic unit")
        try:
            zi = residue_int(zr, ctx.p, ctx.p2)
        except NotPIntegral as exc:
            raise NotAUnit(f"{zr} is not a {ctx.p}-adic unit") from exc
    if e.s.denominator % ctx.p == 0:
        raise NotPIntegral(f"exponent multiplier {e.s} is not {ctx.p}-integral")
    return Residue(zpow_int(zi, e, ctx.p), ctx.p2)


def gauss_mult_check(x: RationalLike, m: int, ctx: PrimeContext) -> bool:
    """prod_{k<m} Gamma_p(x+k/m) = m^(-lambda_p(mx)) Gamma_p(mx) prod_{k<m} Gamma_p(k/m) mod p^2."""
    xr = as_rational(x)
    p, mod = ctx.p, ctx.p2
    if m % p == 0:
        raise NotAUnit(f"{m} is divisible by {p}")
    lhs = 1
    const = 1
    for k in range(m):
        lhs = lhs * gamma_int(xr + Fraction(k, m), p) % mod
        const = const * gamma_int(Fraction(k, m), p) % mod
    mx = m * xr
    rhs = zpow_int(m % mod, neg_lambda(mx, ctx), p) * gamma_int(mx, p) % mod * const % mod
    return lhs == rhs


def gamma_derivative_at_zero(ctx: PrimeContext) -> int:
    """Gamma_p'(0) mod p, taken as the difference quotient (Gamma_p(p) - Gamma_p(0))/p."""
    p = ctx.p
    diff = (gamma_int(Fraction(p), p, 2) - 1) % ctx.p2
    return diff // p % p


def gamma_log_derivative(alpha: RationalLike, ctx: PrimeContext) -> Residue:
    """Gamma_p'(x)/Gamma_p(x) mod p, as Gamma_p'(0) + H_{p - <-x>_p - 1}."""
    a = as_rational(alpha)
    p = ctx.p
    r = residue_int(-a, p, p)
    return Residue((gamma_derivative_at_zero(ctx) + harmonic_mod_p(p - r - 1, ctx).value) % p, p)


def gamma_log_derivative_oracle(alpha: RationalLike, ctx: PrimeContext) -> Residue:
    """Difference quotient (Gamma_p(x+p) - Gamma_p(x)) / (p Gamma_p(x)) mod p."""
    a = as_rational(alpha)
    p, m = ctx.p, ctx.p2
    g0 = gamma_int(a, p)
    g1 = gamma_int(a + p, p)
    diff = (g1 - g0) % m
    return Residue(diff // p * pow(g0, -1, p) % p, p)

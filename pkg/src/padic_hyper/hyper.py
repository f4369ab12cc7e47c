"""Pochhammer symbols, truncated hypergeometric series with valuation tracking,
an exact rational oracle for terminating series, Legendre polynomials and
coefficientwise polynomial congruences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import (
    PadicApprox,
    PrimeContext,
    RationalLike,
    Residue,
    as_rational,
    residue_int,
    split_unit,
)
from .errors import (
    DegreeOverflow,
    LowerParameterPole,
    NonTerminating,
    NotPIntegral,
    PrecisionLoss,
)


@dataclass(frozen=True)
class ZPoly:
    """A polynomial argument in the formal variable z, coefficients in increasing degree."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs: RationalLike) -> "ZPoly":
        return ZPoly(tuple(as_rational(c) for c in coeffs))

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d


IDENTITY = ZPoly.of(0, 1)


@dataclass(frozen=True)
class SeriesSpec:
    """An (m+1)F_m series: upper and lower parameters, argument and truncation index.

    The lower list does not include the k! denominator, so a 2F1 with lower
    parameter 1 is ``SeriesSpec((a, b), (1,), z, n)``.
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Union[Fraction, ZPoly]
    trunc: int

    @staticmethod
    def of(
        upper: Sequence[RationalLike],
        lower: Sequence[RationalLike],
        z: Union[RationalLike, ZPoly],
        trunc: int,
    ) -> "SeriesSpec":
        zz = z if isinstance(z, ZPoly) else as_rational(z)
        spec = SeriesSpec(
            tuple(as_rational(a) for a in upper),
            tuple(as_rational(b) for b in lower),
            zz,
            trunc,
        )
        if len(spec.upper) != len(spec.lower) + 1:
            raise ValueError("an (m+1)F_m series needs one more upper than lower parameter")
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        return spec


def pochhammer(alpha: RationalLike, k: int, ctx: PrimeContext, m: int = 2) -> PadicApprox:
    """(alpha)_k = alpha (alpha+1) ... (alpha+k-1) with exact valuation, unit mod p^m."""
    a = as_rational(alpha)
    p = ctx.p
    if a.denominator % p == 0:
        raise NotPIntegral(f"{a} is not {p}-integral")
    mod = p**m
    num, den = a.numerator, a.denominator
    v = 0
    u = 1
    for j in range(k):
        f = num + j * den
        if f == 0:
            return PadicApprox.zero(p)
        w, f = split_unit(f, p)
        v += w
        u = u * f % mod
    u = u * pow(pow(den, k, mod), -1, mod) % mod
    return PadicApprox(p, v, u, m)


def _terminating_index(upper: Sequence[Fraction]) -> Optional[int]:
    """Smallest n with some upper parameter equal to -n, if any."""
    ns = [-a.numerator for a in upper if a.denominator == 1 and a <= 0]
    return min(ns) if ns else None


def guard_bound(lower: Sequence[Fraction], n: int, p: int) -> int:
    """Default guard exponent: per lower parameter ceil((n+1)/p)+1, plus v_p(n!)."""
    per = -(-(n + 1) // p) + 1
    fact = 0
    q = p
    while q <= n:
        fact += n // q
        q *= p
    return per * len(lower) + fact


def _check_integral(params: Sequence[Fraction], p: int) -> None:
    for a in params:
        if a.denominator % p == 0:
            raise NotPIntegral(f"parameter {a} is not {p}-integral")


@lru_cache(maxsize=16384)
def _scaled_coefficients(
    ups: tuple[tuple[int, int], ...],
    lows: tuple[tuple[int, int], ...],
    n: int,
    p: int,
    G: int,
    K: int,
) -> Optional[tuple[int, ...]]:
    """Term coefficients c_j with c_j = p^G * term_j / z^j mod p^K.

    Returns None when some coefficient has valuation below -G; callers then
    fall back to the path that accounts for the valuation of z.
    """
    M = p**K
    out = [p**G % M]
    N = 1
    D = 1
    v = 0
    for j in range(n):
        num = 1
        for a, d in ups:
            f = a + j * d
            while f % p == 0:
                f //= p
                v += 1
            num *= f
        w, den = split_unit(j + 1, p)
        v -= w
        for b, d in lows:
            f = b + j * d
            while f % p == 0:
                f //= p
                v -= 1
            den *= f
        e = v + G
        if e < 0:
            return None
        N = N * num % M
        D = D * den % M
        out.append(N * pow(D, -1, M) * pow(p, e, M) % M if e < K else 0)
    return tuple(out)


def _prepare(upper: Sequence[Fraction], lower: Sequence[Fraction], n: int):
    """Integer parameter ratios with the constant denominators folded into z."""
    ups = tuple((a.numerator, a.denominator) for a in upper)
    lows = tuple((b.numerator, b.denominator) for b in lower)
    for b, d in lows:
        # a lower parameter -m with m < n makes a term infinite
        if d == 1 and b <= 0 and -b < n:
            raise LowerParameterPole(f"lower parameter {b} vanishes in the sum")
    return ups, lows


def hyper_sum(
    upper: Sequence[Fraction],
    lower: Sequence[Fraction],
    z: Fraction,
    n: int,
    p: int,
    k: int = 2,
    guard: Optional[int] = None,
) -> PadicApprox:
    """Truncated sum of terms 0..n as a PadicApprox known to absolute precision p^k.

    Coefficients depend only on the parameters, so they are cached and the
    sum at a given z is a Horner evaluation over the common scale p^guard.
    Every factor is an integer ratio, which keeps the coefficient recurrence in
    plain integer arithmetic.
    """
    _check_integral(upper, p)
    _check_integral(lower, p)
    if z.denominator % p == 0:
        raise NotPIntegral(f"argument {z} is not {p}-integral")
    stop = _terminating_index(upper)
    if stop is not None:
        n = min(n, stop)
    if z == 0:
        n = 0
    G = guard_bound(lower, n, p) if guard is None else guard
    K = k + G
    M = p**K
    ups, lows = _prepare(upper, lower, n)
    # each term j picks up z * prod(lower dens) / prod(upper dens)
    scale_num = z.numerator
    scale_den = z.denominator
    for _, d in lows:
        scale_num *= d
    for _, d in ups:
        scale_den *= d
    coeffs = _scaled_coefficients(ups, lows, n, p, G, K)
    if coeffs is not None:
        w = scale_num * pow(scale_den, -1, M) % M
        X = 0
        for c in reversed(coeffs):
            X = (X * w + c) % M
        return PadicApprox.from_parts(p, -G, X, K)
    return _hyper_sum_tracked(ups, lows, z, n, p, G, K)


def _hyper_sum_tracked(
    ups: tuple[tuple[int, int], ...],
    lows: tuple[tuple[int, int], ...],
    z: Fraction,
    n: int,
    p: int,
    G: int,
    K: int,
) -> PadicApprox:
    """Slow path: terms carry the valuation of z so p | z can offset the guard."""
    M = p**K
    if z != 0:
        vz, zn = split_unit(z.numerator, p)
    else:
        vz, zn = 0, 0
    cnum = zn % M
    cden = z.denominator % M
    for _, d in lows:
        cnum = cnum * d % M
    for _, d in ups:
        cden = cden * d % M
    N = 1
    D = 1
    v = 0
    A = p**G % M
    for j in range(n):
        num = cnum
        for a, d in ups:
            f = a + j * d
            while f % p == 0:
                f //= p
                v += 1
            num = num * f
        w, f = split_unit(j + 1, p)
        v -= w
        den = cden * f
        for b, d in lows:
            f = b + j * d
            while f % p == 0:
                f //= p
                v -= 1
            den = den * f
        v += vz
        N = N * num % M
        den %= M
        D = D * den % M
        e = v + G
        if e < 0:
            raise PrecisionLoss(f"term {j + 1} has valuation {v} below guard -{G}")
        A = (A * den + (N * pow(p, e, M) if e < K else 0)) % M
    X = A * pow(D, -1, M) % M
    return PadicApprox.from_parts(p, -G, X, K)


def truncated_hyper(
    spec: SeriesSpec, ctx: PrimeContext, k: int = 2, guard: Optional[int] = None
) -> PadicApprox:
    """Sum of the first trunc+1 terms of the series at a numeric argument."""
    if isinstance(spec.z, ZPoly):
        raise TypeError("use series_poly for a polynomial argument")
    return hyper_sum(spec.upper, spec.lower, spec.z, spec.trunc, ctx.p, k, guard)


def hyper_residue(
    upper: Sequence[RationalLike],
    lower: Sequence[RationalLike],
    z: RationalLike,
    n: int,
    ctx: PrimeContext,
    k: int = 2,
) -> PadicApprox:
    """Convenience wrapper around :func:`hyper_sum` taking loose rationals."""
    return hyper_sum(
        [as_rational(a) for a in upper],
        [as_rational(b) for b in lower],
        as_rational(z),
        n,
        ctx.p,
        k,
    )


def exact_terminating_hyper(spec: SeriesSpec) -> Fraction:
    """Exact rational value of a terminating series (the truncation is the stop index)."""
    if isinstance(spec.z, ZPoly):
        raise TypeError("exact evaluation needs a numeric argument")
    stop = _terminating_index(spec.upper)
    if stop is None or stop > spec.trunc:
        raise NonTerminating("no upper parameter is a nonpositive integer within the truncation")
    for b in spec.lower:
        if b.denominator == 1 and b <= 0 and -b < stop:
            raise LowerParameterPole(f"lower parameter {b} vanishes in the sum")
    total = Fraction(0)
    term = Fraction(1)
    for j in range(stop + 1):
        total += term
        num = Fraction(1)
        for a in spec.upper:
            num *= a + j
        den = Fraction(j + 1)
        for b in spec.lower:
            den *= b + j
        if num == 0:
            break
        term = term * num * spec.z / den
    return total


def legendre_poly(n: int, x: RationalLike, ctx: PrimeContext) -> Residue:
    """P_n(x) mod p^2 from the terminating 2F1[-n, n+1; 1 | (1-x)/2]."""
    xr = as_rational(x)
    y = (1 - xr) / 2
    val = hyper_sum([Fraction(-n), Fraction(n + 1)], [Fraction(1)], y, n, ctx.p, 2)
    return Residue(val.to_residue(2), ctx.p2)


def term_coefficients(
    upper: Sequence[Fraction], lower: Sequence[Fraction], n: int, p: int, k: int = 2
) -> list[int]:
    """Coefficients c_0..c_n of z^j in the truncated series, reduced mod p^k.

    Raises PrecisionLoss when a coefficient is not p-integral.
    """
    _check_integral(upper, p)
    _check_integral(lower, p)
    mod = p**k
    out = [1 % mod]
    v = 0
    N = Fraction(1)
    for j in range(n):
        num = Fraction(1)
        for a in upper:
            num *= a + j
        if num == 0:
            out.extend([0] * (n - j))
            break
        den = Fraction(j + 1)
        for b in lower:
            den *= b + j
        if den == 0:
            raise LowerParameterPole(f"lower parameter vanishes at index {j}")
        N = N * num / den
        c = N
        vn, un = split_unit(c.numerator, p)
        vd, ud = split_unit(c.denominator, p)
        v = vn - vd
        if v < 0:
            raise PrecisionLoss(f"coefficient of z^{j + 1} has valuation {v}")
        out.append(un * pow(p, v, mod) * pow(ud, -1, mod) % mod)
    return out


def _poly_mul(a: list[int], b: list[int], mod: int, cap: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] = (out[i + j] + x * y) % mod
    return out


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def series_poly(spec: SeriesSpec, ctx: PrimeContext, k: int = 2, cap: Optional[int] = None) -> list[int]:
    """Expand the truncated series at a polynomial argument into z-coefficients mod p^k."""
    p = ctx.p
    mod = p**k
    cap = 2 * p - 2 if cap is None else cap
    arg = spec.z if isinstance(spec.z, ZPoly) else ZPoly((spec.z,))
    coeffs = term_coefficients(spec.upper, spec.lower, spec.trunc, p, k)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if (len(coeffs) - 1) * arg.degree > cap:
        raise DegreeOverflow(f"expansion degree exceeds {cap}")
    argc = [residue_int(c, p, mod) for c in arg.coeffs[: arg.degree + 1]]
    acc = [coeffs[-1]]
    for c in reversed(coeffs[:-1]):
        acc = _poly_mul(acc, argc, mod, cap)
        acc[0] = (acc[0] + c) % mod
    return _trim(acc)


@dataclass(frozen=True)
class PolySide:
    """One side of a polynomial congruence: ``scale * series(z)**power``."""

    spec: SeriesSpec
    power: int = 1
    scale: Fraction = Fraction(1)


def poly_side_coeffs(side: Union[SeriesSpec, PolySide], ctx: PrimeContext, k: int = 2) -> list[int]:
    """Coefficient list mod p^k of one side of a polynomial congruence."""
    if isinstance(side, SeriesSpec):
        side = PolySide(side)
    p = ctx.p
    mod = p**k
    cap = 2 * p - 2
    base = series_poly(side.spec, ctx, k, cap)
    out = [1]
    for _ in range(side.power):
        out = _poly_mul(out, base, mod, cap)
    if side.power >= 2 and (len(base) - 1) * side.power > cap:
        raise DegreeOverflow(f"expansion degree exceeds {cap}")
    s = residue_int(side.scale, p, mod)
    return _trim([c * s % mod for c in out])


def polynomial_congruence_check(
    lhs: Union[SeriesSpec, PolySide], rhs: Union[SeriesSpec, PolySide], ctx: PrimeContext, k: int = 2
) -> bool:
    """True iff both sides agree coefficientwise modulo p^k."""
    return poly_side_coeffs(lhs, ctx, k) == poly_side_coeffs(rhs, ctx, k)

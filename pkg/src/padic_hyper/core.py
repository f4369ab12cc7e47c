"""Residue arithmetic modulo p^k, valuation-tracked p-adic numbers and
integer algorithms (square roots, Cornacchia, harmonic numbers)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from sympy import isprime
from sympy.ntheory import sqrt_mod
from sympy.solvers.diophantine.diophantine import cornacchia as _sympy_cornacchia

from .errors import (
    DenominatorDivisible,
    ModulusMismatch,
    NotAResidue,
    NotAUnit,
    NotPIntegral,
    NotRepresentable,
    PrimeOutOfRange,
)

PRational = Fraction
RationalLike = Union[Fraction, int, str]

DEFAULT_MAX_PRIME = 10**6


def max_prime() -> int:
    """Largest prime accepted by :class:`PrimeContext` (``PADIC_MAX_PRIME`` overrides)."""
    raw = os.environ.get("PADIC_MAX_PRIME")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_PRIME
    return int(raw)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, a Fraction or an ``"r/d"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def split_unit(n: int, p: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``n = p**v * u`` and ``p`` not dividing ``u``."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class PrimeContext:
    """A fixed odd prime with its derived moduli."""

    p: int
    p2: int = field(init=False)
    p3: int = field(init=False)
    p_phi: int = field(init=False)

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, int) or p < 3 or not isprime(p):
            raise PrimeOutOfRange(f"{p!r} is not an odd prime")
        if p > max_prime():
            raise PrimeOutOfRange(f"{p} exceeds the prime cap {max_prime()}")
        object.__setattr__(self, "p2", p * p)
        object.__setattr__(self, "p3", p * p * p)
        object.__setattr__(self, "p_phi", p * (p - 1))

    def modulus(self, k: int) -> int:
        return self.p**k

    def is_integral(self, r: Fraction) -> bool:
        return r.denominator % self.p != 0


@lru_cache(maxsize=None)
def context(p: int) -> PrimeContext:
    """Shared, memoized :class:`PrimeContext` for ``p``."""
    return PrimeContext(p)


@dataclass(frozen=True)
class Residue:
    """An element of Z/mZ stored as its least nonnegative representative."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: Union["Residue", int]) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"moduli {self.modulus} and {other.modulus} differ")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["Residue", int]) -> "Residue":
        return Residue((self.value + self._coerce(other)) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Union["Residue", int]) -> "Residue":
        return Residue((self.value - self._coerce(other)) % self.modulus, self.modulus)

    def __rsub__(self, other: int) -> "Residue":
        return Residue((other - self.value) % self.modulus, self.modulus)

    def __mul__(self, other: Union["Residue", int]) -> "Residue":
        return Residue(self.value * self._coerce(other) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus, self.modulus)

    def __pow__(self, e: int) -> "Residue":
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        try:
            return Residue(pow(self.value, -1, self.modulus), self.modulus)
        except ValueError as exc:
            raise NotAUnit(f"{self.value} is not invertible mod {self.modulus}") from exc

    def __truediv__(self, other: Union["Residue", int]) -> "Residue":
        if isinstance(other, int):
            other = Residue(other, self.modulus)
        return self * other.inverse()

    def __int__(self) -> int:
        return self.value

    def signed(self) -> int:
        """Representative in the symmetric range around 0."""
        v = self.value
        return v - self.modulus if v > self.modulus // 2 else v


def embed(r: RationalLike, ctx: PrimeContext, k: int) -> Residue:
    """Image of a p-integral rational in Z/p^kZ."""
    r = as_rational(r)
    if r.denominator % ctx.p == 0:
        raise NotPIntegral(f"{r} is not {ctx.p}-integral")
    m = ctx.p**k
    return Residue(r.numerator * pow(r.denominator, -1, m) % m, m)


def residue_int(r: Fraction, p: int, m: int) -> int:
    """Fast path of :func:`embed`: ``r mod m`` as an int, ``m`` a power of ``p``."""
    d = r.denominator
    if d == 1:
        return r.numerator % m
    if d % p == 0:
        raise NotPIntegral(f"{r} is not {p}-integral")
    return r.numerator * pow(d, -1, m) % m


def least_nonneg_residue(r: RationalLike, ctx: PrimeContext, k: int = 1) -> int:
    """The integer n in [0, p^k) congruent to r modulo p^k."""
    return residue_int(as_rational(r), ctx.p, ctx.p**k)


def neg_residue(r: Fraction, p: int) -> int:
    """Shorthand for the least nonnegative residue of -r modulo p."""
    return residue_int(-r, p, p)


def legendre_symbol(a: int, ctx: PrimeContext) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    p = ctx.p
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def sqrt_lift(a: int, ctx: PrimeContext, k: int, seed: Optional[int] = None) -> Residue:
    """Square root of a quadratic residue ``a`` modulo p^k.

    The root is found modulo p and lifted by Hensel's lemma. With a seed the
    root congruent to the seed modulo p is returned, otherwise the smaller of
    the two roots.
    """
    p = ctx.p
    if legendre_symbol(a, ctx) != 1:
        raise NotAResidue(f"{a} is not a quadratic residue mod {p}")
    root = sqrt_mod(a % p, p)
    m = p
    for _ in range(1, k):
        m *= p
        # Newton step: r <- r - (r^2 - a) / (2r)
        root = (root - (root * root - a) * pow(2 * root, -1, m)) % m
    m = p**k
    other = (-root) % m
    if seed is not None:
        if (root - seed) % p == 0:
            return Residue(root, m)
        if (other - seed) % p == 0:
            return Residue(other, m)
        raise NotAResidue(f"seed {seed} is not a square root of {a} mod {p}")
    return Residue(min(root, other), m)


CORNACCHIA_RULES = ("a1mod4", "a1mod3", "even_sum1mod4")


def _cornacchia_pairs(p: int, d: int) -> list[tuple[int, int]]:
    """Nonnegative solutions of x^2 + d*y^2 = p."""
    sols = _sympy_cornacchia(1, d, p)
    return sorted((abs(x), abs(y)) for x, y in (sols or set()))


def _normalize(x: int, y: int, d: int, rule: str) -> list[tuple[int, int]]:
    candidates = {(sx * x, sy * y) for sx in (1, -1) for sy in (1, -1)}
    if rule == "a1mod4":
        if d != 1:
            raise ValueError("rule a1mod4 applies to d = 1")
        swapped = {(b, a) for a, b in candidates}
        ok = [(a, b) for a, b in candidates | swapped if a % 4 == 1 and b > 0]
    elif rule == "a1mod3":
        ok = [(a, b) for a, b in candidates if a % 3 == 1 and b > 0]
    elif rule == "even_sum1mod4":
        ok = [
            (a, b)
            for a, b in candidates
            if ((a > 0 and a % 2 == 0) or (b > 0 and b % 2 == 0)) and (a + b) % 4 == 1
        ]
    else:
        raise ValueError(f"unknown normalization rule {rule!r}")
    return sorted(set(ok))


def cornacchia(ctx: PrimeContext, d: int, rule: str) -> tuple[int, int]:
    """Write p = a^2 + d*b^2 with the sign/swap convention named by ``rule``.

    Rules: ``"a1mod4"`` (d=1, a = 1 mod 4, b > 0), ``"a1mod3"`` (d=3,
    a = 1 mod 3, b > 0) and ``"even_sum1mod4"`` (d=3, one of a, b is a
    positive even integer and a + b = 1 mod 4).
    """
    p = ctx.p
    if d == 1 and p % 4 != 1:
        raise NotRepresentable(f"{p} is not 1 mod 4")
    if d == 3 and p % 3 != 1:
        raise NotRepresentable(f"{p} is not 1 mod 3")
    if d not in (1, 3):
        raise ValueError("d must be 1 or 3")
    pairs = _cornacchia_pairs(p, d)
    if not pairs:
        raise NotRepresentable(f"{p} is not of the form a^2 + {d}b^2")
    found: set[tuple[int, int]] = set()
    for x, y in pairs:
        found.update(_normalize(x, y, d, rule))
    if len(found) != 1:
        raise NotRepresentable(f"normalization {rule} is not unique for p={p}: {sorted(found)}")
    return found.pop()


def harmonic_mod_p(n: int, ctx: PrimeContext) -> Residue:
    """H_n = 1 + 1/2 + ... + 1/n modulo p, for 0 <= n < p."""
    p = ctx.p
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= p:
        raise DenominatorDivisible(f"H_{n} has a denominator divisible by {p}")
    return Residue(sum(pow(j, -1, p) for j in range(1, n + 1)) % p, p)


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic number ``p**valuation * unit`` with the unit known mod ``p**precision``.

    ``exact_zero`` marks a value known to be exactly 0. A value with
    ``precision == 0`` is only known to be divisible by ``p**valuation``;
    its unit is stored as 0.
    """

    p: int
    valuation: int
    unit: int
    precision: int
    exact_zero: bool = False

    @staticmethod
    def zero(p: int) -> "PadicApprox":
        return PadicApprox(p, 0, 0, 0, True)

    @staticmethod
    def zero_mod(p: int, n: int) -> "PadicApprox":
        """A value known only to be divisible by p^n."""
        return PadicApprox(p, n, 0, 0, False)

    @staticmethod
    def from_rational(r: RationalLike, p: int, m: int) -> "PadicApprox":
        r = as_rational(r)
        if r == 0:
            return PadicApprox.zero(p)
        a, un = split_unit(r.numerator, p)
        b, ud = split_unit(r.denominator, p)
        mod = p**m
        return PadicApprox(p, a - b, un * pow(ud, -1, mod) % mod, m)

    @staticmethod
    def from_parts(p: int, valuation: int, unit: int, precision: int) -> "PadicApprox":
        """Normalize ``p**valuation * unit`` where ``unit`` may itself be divisible by p."""
        mod = p**precision
        unit %= mod
        if unit == 0:
            return PadicApprox.zero_mod(p, valuation + precision)
        w, u = split_unit(unit, p)
        return PadicApprox(p, valuation + w, u % p ** (precision - w), precision - w)

    @property
    def absolute_precision(self) -> float:
        if self.exact_zero:
            return float("inf")
        return self.valuation + self.precision

    def is_zero_mod(self, k: int) -> bool:
        """True when the value is known to be divisible by p^k."""
        if self.exact_zero:
            return True
        if self.precision == 0:
            if self.valuation < k:
                raise ValueError("value not known to enough precision")
            return True
        return self.valuation >= k

    def __mul__(self, other: "PadicApprox") -> "PadicApprox":
        if self.exact_zero or other.exact_zero:
            return PadicApprox.zero(self.p)
        prec = min(self.precision, other.precision)
        v = self.valuation + other.valuation
        if prec == 0:
            return PadicApprox.zero_mod(self.p, v)
        mod = self.p**prec
        return PadicApprox(self.p, v, self.unit * other.unit % mod, prec)

    def inverse(self) -> "PadicApprox":
        if self.exact_zero or self.precision == 0:
            raise ZeroDivisionError("inverse of a value not known to be nonzero")
        mod = self.p**self.precision
        return PadicApprox(self.p, -self.valuation, pow(self.unit, -1, mod), self.precision)

    def __truediv__(self, other: "PadicApprox") -> "PadicApprox":
        return self * other.inverse()

    def __neg__(self) -> "PadicApprox":
        if self.exact_zero or self.precision == 0:
            return self
        return PadicApprox(self.p, self.valuation, -self.unit % self.p**self.precision, self.precision)

    def __add__(self, other: "PadicApprox") -> "PadicApprox":
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        p = self.p
        n = int(min(self.absolute_precision, other.absolute_precision))
        v = min(self.valuation, other.valuation)
        if n <= v:
            return PadicApprox.zero_mod(p, n)
        s = self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)
        return PadicApprox.from_parts(p, v, s, n - v)

    def __sub__(self, other: "PadicApprox") -> "PadicApprox":
        return self + (-other)

    def to_residue(self, k: int) -> int:
        """The value modulo p^k as an int; requires a p-integral value known to p^k."""
        mod = self.p**k
        if self.exact_zero:
            return 0
        if self.absolute_precision < k:
            from .errors import PrecisionLoss

            raise PrecisionLoss(f"value known only modulo p^{self.valuation + self.precision}")
        if self.valuation >= k:
            return 0
        if self.valuation < 0:
            raise NotPIntegral(f"value has negative valuation {self.valuation}")
        return self.unit * self.p**self.valuation % mod

    def render(self) -> str:
        """Short human-readable form, e.g. ``"0"``, ``"17"`` or ``"3*p^-2"``."""
        if self.exact_zero:
            return "0"
        if self.precision == 0:
            return f"O(p^{self.valuation})"
        if self.valuation == 0:
            return str(self.unit)
        return f"{self.unit}*p^{self.valuation}"

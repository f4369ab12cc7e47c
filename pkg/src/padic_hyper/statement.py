"""Building blocks for encoding a congruence: conditions, side evaluators, z policies."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

from .core import (
    RationalLike,
    as_rational,
    context,
    legendre_symbol,
    residue_int,
)
from .gamma import ExponentSpec, gamma_int, neg_lambda, one_minus_lambda, zpow_int
from .hyper import PolySide, SeriesSpec, ZPoly, hyper_sum, poly_side_coeffs, pochhammer

Params = tuple[Fraction, ...]
SideValue = Union[int, tuple[int, ...]]


@dataclass(frozen=True)
class Met:
    """The hypotheses hold; ``branch`` names the case split that applies."""

    branch: str = ""


@dataclass(frozen=True)
class Unmet:
    """The hypotheses fail; ``reason`` names the first failing one."""

    reason: str


Outcome = Union[Met, Unmet]


class Ev:
    """Arithmetic mod p^k for one side of one case.

    Each side gets its own instance, so left and right evaluations share no
    state beyond the read-only gamma tables and coefficient caches.
    """

    def __init__(self, p: int, k: int = 2):
        self.p = p
        self.k = k
        self.M = p**k
        self.ctx = context(p)

    def r(self, x: RationalLike) -> int:
        """Residue of a p-integral rational mod p^k."""
        return residue_int(as_rational(x), self.p, self.M)

    def nr(self, x: RationalLike) -> int:
        """Least nonnegative residue of -x mod p."""
        return residue_int(-as_rational(x), self.p, self.p)

    def g(self, x: RationalLike) -> int:
        return gamma_int(as_rational(x), self.p, self.k)

    def gq(self, num: Sequence[RationalLike], den: Sequence[RationalLike]) -> int:
        """prod Gamma_p(num) / prod Gamma_p(den) mod p^k."""
        top = 1
        for x in num:
            top = top * self.g(x) % self.M
        bot = 1
        for x in den:
            bot = bot * self.g(x) % self.M
        return top * pow(bot, -1, self.M) % self.M

    def mul(self, *xs: int) -> int:
        out = 1
        for x in xs:
            out = out * x % self.M
        return out

    def div(self, a: int, b: int) -> int:
        return a * pow(b, -1, self.M) % self.M

    def sign(self, e: int) -> int:
        return 1 if e % 2 == 0 else self.M - 1

    def leg(self, a: int) -> int:
        return legendre_symbol(a, self.ctx) % self.M

    def F(
        self,
        upper: Sequence[RationalLike],
        lower: Sequence[RationalLike],
        z: RationalLike,
        n: Optional[int] = None,
    ) -> int:
        """Truncated series (default truncation p-1) as a residue mod p^k."""
        return self.Fa(upper, lower, z, n).to_residue(self.k)

    def Fa(
        self,
        upper: Sequence[RationalLike],
        lower: Sequence[RationalLike],
        z: RationalLike,
        n: Optional[int] = None,
        guard: Optional[int] = None,
    ):
        """Truncated series as a PadicApprox, for sides that rescale by powers of p."""
        return hyper_sum(
            [as_rational(a) for a in upper],
            [as_rational(b) for b in lower],
            as_rational(z),
            self.p - 1 if n is None else n,
            self.p,
            self.k,
            guard,
        )

    def pw(self, z: RationalLike, e: ExponentSpec) -> int:
        """z^(a + s(p-1)) mod p^2 for a unit z."""
        return zpow_int(self.r(z) % (self.p * self.p), e, self.p)

    def oml(self, x: RationalLike, mult: int = 1) -> ExponentSpec:
        """Exponent 1 - mult*lambda_p(x)."""
        return one_minus_lambda(x, self.ctx, mult)

    def nl(self, x: RationalLike) -> ExponentSpec:
        """Exponent -lambda_p(x)."""
        return neg_lambda(x, self.ctx)

    def poly(self, side: Union[SeriesSpec, PolySide]) -> tuple[int, ...]:
        return tuple(poly_side_coeffs(side, self.ctx, self.k))


@lru_cache(maxsize=65536)
def _poch_valuation(x: Fraction, p: int) -> int:
    val = pochhammer(x, p - 1, context(p), 1)
    return 10**9 if val.exact_zero else val.valuation


def poch_ok(x: RationalLike, p: int) -> bool:
    """(x)_{p-1} is not divisible by p^2."""
    return _poch_valuation(as_rational(x), p) < 2


def first_bad_poch(xs: Iterable[RationalLike], p: int, label: str) -> Optional[Unmet]:
    for x in xs:
        if not poch_ok(x, p):
            return Unmet(f"({as_rational(x)})_(p-1) = 0 mod p^2 [{label}]")
    return None


def is_unit(x: RationalLike, p: int) -> bool:
    r = as_rational(x)
    return r.numerator % p != 0 and r.denominator % p != 0


ZRule = Callable[[Fraction, int], Optional[str]]


def z_any(z: Fraction, p: int) -> Optional[str]:
    return None


def z_units(*exprs: tuple[str, Callable[[Fraction], Fraction]]) -> ZRule:
    """A z policy requiring each named expression in z to be a p-adic unit."""

    def rule(z: Fraction, p: int) -> Optional[str]:
        for name, f in exprs:
            if not is_unit(f(z), p):
                return f"{name} is not a unit"
        return None

    return rule


Condition = Callable[[int, Params, Optional[Fraction]], Outcome]
Side = Callable[[Ev, Params, Optional[Fraction], str], SideValue]
Pool = Callable[[int], Iterable[Params]]


@dataclass(frozen=True)
class TheoremStatement:
    """One registered congruence.

    ``condition`` sees only the prime, parameters and z. ``lhs`` and ``rhs``
    each receive a fresh :class:`Ev` and the branch chosen by the condition.
    """

    id: str
    anchor: str
    params: tuple[str, ...]
    condition: Condition
    lhs: Side
    rhs: Side
    modulus_exp: int = 2
    mode: str = "numeric"
    z_rule: Optional[ZRule] = None
    pool: Optional[Pool] = None
    min_prime: int = 3
    max_prime: Optional[int] = None
    notes: str = ""
    tags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def uses_z(self) -> bool:
        return self.z_rule is not None


__all__ = [
    "Ev",
    "Met",
    "Unmet",
    "Outcome",
    "Params",
    "SideValue",
    "TheoremStatement",
    "ZPoly",
    "SeriesSpec",
    "PolySide",
    "poch_ok",
    "first_bad_poch",
    "is_unit",
    "z_any",
    "z_units",
]

"""Modular-form coefficients, CM special values and the Cornacchia-based checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr
from functools import lru_cache
from math import comb

from .core import PadicApprox, context, cornacchia, sqrt_lift
from .errors import NotRepresentable, OrderTooSmall
from .pools import fixed_pool
from .statement import Ev, Met, Outcome, Params, TheoremStatement, Unmet

HALF = Fr(1, 2)
QUARTER = Fr(1, 4)
THREE_QUARTERS = Fr(3, 4)


@dataclass(frozen=True)
class QSeries:
    """Exact integer q-expansion c(0) + c(1) q + ... + c(N) q^N."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def one(order: int) -> "QSeries":
        return QSeries((1,) + (0,) * order)

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, x in enumerate(self.coeffs[: n + 1]):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs[: n + 1 - i]):
                out[i + j] += x * y
        return QSeries(tuple(out))

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k, keeping the order."""
        n = self.order
        return QSeries((0,) * k + self.coeffs[: n + 1 - k])

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def euler_factor_power(step: int, power: int, order: int) -> QSeries:
    """prod_{n>=1} (1 - q^(step*n))^power truncated at q^order."""
    acc = [1] + [0] * order
    for n in range(1, order // step + 1):
        deg = step * n
        for _ in range(power):
            # multiply in place by (1 - q^deg)
            for i in range(order, deg - 1, -1):
                acc[i] -= acc[i - deg]
    return QSeries(tuple(acc))


@lru_cache(maxsize=16)
def eta_product_series(order: int) -> QSeries:
    """eta(2z)^4 eta(4z)^4 = q * prod (1-q^(2n))^4 (1-q^(4n))^4 up to q^order.

    The weight 4 newform of level 8; with exponent 2 on the second factor the
    q-exponent would not be integral.
    """
    body = euler_factor_power(2, 4, order) * euler_factor_power(4, 4, order)
    return body.shift(1)


def eta_product_ap(p: int, order: int) -> int:
    """The q^p coefficient of the eta product, from an expansion to q^order."""
    if order < p:
        raise OrderTooSmall(f"expansion order {order} is below {p}")
    return eta_product_series(order)[p]


# ---------------------------------------------------------------- statements

STATEMENTS: list[TheoremStatement] = []


def _register(st: TheoremStatement) -> TheoremStatement:
    STATEMENTS.append(st)
    return st


def _ao_lhs(ev: Ev, t: Params, z, br: str) -> int:
    return ev.F([HALF] * 4, [1, 1, 1], 1)


def _ao_rhs(ev: Ev, t: Params, z, br: str) -> int:
    return eta_product_ap(ev.p, max(50, ev.p)) % ev.M


_register(
    TheoremStatement(
        id="eq-1.3-ahlgren-ono",
        anchor="4F3[1/2,1/2,1/2,1/2;1,1,1|1] = a(p) mod p^2, a(p) from q prod (1-q^2n)^4(1-q^4n)^4",
        params=(),
        condition=lambda p, t, z: Met(),
        lhs=_ao_lhs,
        rhs=_ao_rhs,
        pool=fixed_pool([[]]),
    )
)

_register(
    TheoremStatement(
        id="eq-1.3-kilbourn",
        anchor="4F3[1/2,1/2,1/2,1/2;1,1,1|1] = a(p) mod p^3",
        params=(),
        condition=lambda p, t, z: Met(),
        lhs=_ao_lhs,
        rhs=_ao_rhs,
        modulus_exp=3,
        pool=fixed_pool([[]]),
        min_prime=5,
        max_prime=100,
    )
)


def _dflst_cond(p: int, t: Params, z) -> Outcome:
    return Met() if p % 4 == 1 else Unmet("p = 1 mod 4")


def _dflst_rhs(ev: Ev, t: Params, z, br: str) -> int:
    tail = ev.Fa([1, 1, 1], [Fr(3, 2), Fr(3, 2)], -1)
    scaled = PadicApprox.from_rational(ev.p**2, ev.p, ev.k) * tail
    return scaled.to_residue(ev.k)


_register(
    TheoremStatement(
        id="thm-13.1-dflst",
        anchor="2F1[1/2,1/2;1|-1] = p^2 3F2[1,1,1;3/2,3/2|-1] for p = 1 mod 4",
        params=(),
        condition=_dflst_cond,
        lhs=lambda ev, t, z, br: ev.F([HALF, HALF], [1], -1),
        rhs=_dflst_rhs,
        pool=fixed_pool([[]]),
    )
)


# ---------------------------------------------------------------- Cornacchia-based right sides


def _gaussian_pair(p: int) -> tuple[int, int, int]:
    """(a, b, i) with p = a^2 + b^2, a = 1 mod 4, i^2 = -1 mod p^2 and i = a/b mod p."""
    ctx = context(p)
    a, b = cornacchia(ctx, 1, "a1mod4")
    i = sqrt_lift(-1, ctx, 2, seed=a * pow(b, -1, p) % p)
    return a, b, i.value


def _eisenstein_pair(p: int) -> tuple[int, int, int]:
    """(a, b, s) with p = a^2 + 3b^2, one of a, b positive even, a+b = 1 mod 4,
    s^2 = -3 mod p^2 and s = a/b mod p."""
    ctx = context(p)
    a, b = cornacchia(ctx, 3, "even_sum1mod4")
    s = sqrt_lift(-3, ctx, 2, seed=a * pow(b, -1, p) % p)
    return a, b, s.value


def _cvh_cond(p: int, t: Params, z) -> Outcome:
    if p % 4 != 1:
        return Unmet("p = 1 mod 4")
    return Met()


def _cvh_rhs(ev: Ev, t: Params, z, br: str) -> int:
    a, b, i = _gaussian_pair(ev.p)
    return ev.mul(ev.sign((ev.p - 1) // 4), (a + b * i) % ev.M)


_register(
    TheoremStatement(
        id="eq-2.25-cvh",
        anchor="2F1[1/2,1/2;1|-1] = (-1)^((p-1)/4)(a+b sqrt(-1)) with p = a^2+b^2, a = 1 mod 4",
        params=(),
        condition=_cvh_cond,
        lhs=lambda ev, t, z, br: ev.F([HALF, HALF], [1], -1),
        rhs=_cvh_rhs,
        pool=fixed_pool([[]]),
    )
)


def _p1mod3(p: int, t: Params, z) -> Outcome:
    if p % 3 != 1:
        return Unmet("p = 1 mod 3")
    try:
        cornacchia(context(p), 3, "even_sum1mod4")
    except NotRepresentable as exc:
        return Unmet(str(exc))
    return Met("p=1 mod 4" if p % 4 == 1 else "p=3 mod 4")


def _goursat_gamma(ev: Ev) -> int:
    """Gamma(4/3) / (Gamma(3/2) Gamma(5/6))."""
    return ev.gq([Fr(4, 3)], [Fr(3, 2), Fr(5, 6)])


def _cm(
    id: str, anchor: str, lhs, rhs, condition=_p1mod3, notes: str = ""
) -> TheoremStatement:
    return _register(
        TheoremStatement(
            id=id,
            anchor=anchor,
            params=(),
            condition=condition,
            lhs=lhs,
            rhs=rhs,
            pool=fixed_pool([[]]),
            min_prime=5,
            notes=notes,
            tags=("cm",),
        )
    )


def _legendre_sqrt3_lhs(ev: Ev, t: Params, z, br: str) -> int:
    from .hyper import legendre_poly

    _, _, s = _eisenstein_pair(ev.p)
    return legendre_poly((ev.p - 1) // 2, s, ev.ctx).value


def _a_plus_b_s(ev: Ev) -> int:
    a, b, s = _eisenstein_pair(ev.p)
    return (a + b * s) % ev.M


def _a_s_minus_3b(ev: Ev) -> int:
    a, b, s = _eisenstein_pair(ev.p)
    return (a * s - 3 * b) % ev.M


_cm(
    "eq-12.4-legendre-sqrt-3",
    "P_((p-1)/2)(sqrt(-3)) = a + b sqrt(-3) with p = a^2+3b^2 normalized",
    _legendre_sqrt3_lhs,
    lambda ev, t, z, br: _a_plus_b_s(ev),
)


def _quarter_at_4_cases(ev: Ev, t: Params, z, br: str) -> int:
    return _a_plus_b_s(ev) if ev.p % 4 == 1 else _a_s_minus_3b(ev)


_cm(
    "eq-12.5-quarter-at-4",
    "2F1[1/4,1/4;1|4] = a + b sqrt(-3) or a sqrt(-3) - 3b by p mod 4",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], 4),
    _quarter_at_4_cases,
)

_cm(
    "eq-12.6-quarter-inversion-at-4",
    "2F1[1/4,1/4;1|4] = 4^(-lambda(1/4)) 2F1[1/4,1/4;1|1/4]",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], 4),
    lambda ev, t, z, br: ev.mul(ev.pw(4, ev.nl(QUARTER)), ev.F([QUARTER, QUARTER], [1], QUARTER)),
)

_cm(
    "eq-12.7-quarter-pfaff-at-4",
    "2F1[1/4,1/4;1|4] = (-3)^(-lambda(1/4)) 2F1[1/4,3/4;1|4/3]",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], 4),
    lambda ev, t, z, br: ev.mul(
        ev.pw(-3, ev.nl(QUARTER)), ev.F([QUARTER, THREE_QUARTERS], [1], Fr(4, 3))
    ),
)


def _goursat_rhs(ev: Ev, t: Params, z, br: str) -> int:
    return ev.mul(ev.M - ev.leg(2), ev.div(3, 2), _goursat_gamma(ev))


_cm(
    "eq-12.8-goursat-minus-third",
    "2F1[1/4,3/4;1|-1/3] = -(2/p) 3Gamma(4/3)/(2Gamma(3/2)Gamma(5/6))",
    lambda ev, t, z, br: ev.F([QUARTER, THREE_QUARTERS], [1], Fr(-1, 3)),
    _goursat_rhs,
)


def _quarter_at_quarter_cases(ev: Ev, t: Params, z, br: str) -> int:
    if ev.p % 4 == 1:
        return ev.mul(ev.leg(2), _a_plus_b_s(ev))
    return ev.mul(ev.leg(2), ev.div(_a_s_minus_3b(ev), 2))


_cm(
    "eq-12.9-quarter-at-quarter",
    "2F1[1/4,1/4;1|1/4] = (2/p)(a + b sqrt(-3)) or (2/p)(a sqrt(-3) - 3b)/2 by p mod 4",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], QUARTER),
    _quarter_at_quarter_cases,
    notes="for p = 3 mod 4 the factor is 1/2; a factor 2 fails at every such prime",
)


def _minus_third_rhs(ev: Ev, t: Params, z, br: str) -> int:
    a, _, _ = _eisenstein_pair(ev.p)
    return ev.mul(ev.leg(a), _a_plus_b_s(ev))


_cm(
    "eq-12.10-minus-third-cm",
    "2F1[1/4,3/4;1|-1/3] = (a/p)(a + b sqrt(-3))",
    lambda ev, t, z, br: ev.F([QUARTER, THREE_QUARTERS], [1], Fr(-1, 3)),
    _minus_third_rhs,
    notes="the sign is (a/p) for both classes of p mod 4; (sqrt(-3)/p) and the factor 3 fail",
)

_cm(
    "eq-12.12-four-thirds",
    "2F1[1/4,3/4;1|4/3] = -(-1)^<-1/4>_p (2/p) 3Gamma(4/3)/(2Gamma(3/2)Gamma(5/6))",
    lambda ev, t, z, br: ev.F([QUARTER, THREE_QUARTERS], [1], Fr(4, 3)),
    lambda ev, t, z, br: ev.mul(ev.sign(ev.nr(QUARTER)), _goursat_rhs(ev, t, z, br)),
    notes="the sign (-1)^<-1/4>_p comes from the reflection z -> 1-z; without it odd <-1/4>_p fails",
)

_cm(
    "eq-12.13-quarter-at-4-gamma",
    "2F1[1/4,1/4;1|4] = -(2/p) 3^(1-lambda(1/4)) Gamma(4/3)/(2Gamma(3/2)Gamma(5/6))",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], 4),
    lambda ev, t, z, br: ev.mul(
        ev.M - ev.leg(2), ev.pw(3, ev.oml(QUARTER)), ev.div(1, 2), _goursat_gamma(ev)
    ),
)

_cm(
    "eq-12.14-quarter-at-quarter-gamma",
    "2F1[1/4,1/4;1|1/4] = -(2/p) (3/4)^(1-lambda(1/4)) 2Gamma(4/3)/(Gamma(3/2)Gamma(5/6))",
    lambda ev, t, z, br: ev.F([QUARTER, QUARTER], [1], QUARTER),
    lambda ev, t, z, br: ev.mul(
        ev.M - ev.leg(2), ev.pw(Fr(3, 4), ev.oml(QUARTER)), 2, _goursat_gamma(ev)
    ),
)


def _goursat_square(ev: Ev, t: Params, z, br: str) -> int:
    return ev.mul(ev.div(9, 4), pow(_goursat_gamma(ev), 2, ev.M))


_cm(
    "eq-12.15-3f2-minus-16-9",
    "3F2[1/4,3/4,1/2;1,1|-16/9] = 9Gamma(4/3)^2/(4Gamma(3/2)^2Gamma(5/6)^2)",
    lambda ev, t, z, br: ev.F([QUARTER, THREE_QUARTERS, HALF], [1, 1], Fr(-16, 9)),
    _goursat_square,
)


def binomial_sum(p: int, mod: int, weight, ratio: Fr) -> int:
    """sum_{k<p} weight(k) ratio^k mod ``mod`` from exact integer binomials."""
    r = ratio.numerator * pow(ratio.denominator, -1, mod) % mod
    total = 0
    power = 1
    for k in range(p):
        total = (total + weight(k) * power) % mod
        power = power * r % mod
    return total


def _central_times_quartic(k: int) -> int:
    return comb(2 * k, k) * comb(4 * k, 2 * k)


def _sun48_lhs(ev: Ev, t: Params, z, br: str) -> int:
    return binomial_sum(ev.p, ev.M, _central_times_quartic, Fr(1, 48))


def _sun48_rhs(ev: Ev, t: Params, z, br: str) -> int:
    a, _ = cornacchia(ev.ctx, 3, "a1mod3")
    return (2 * a - ev.div(ev.p % ev.M, (2 * a) % ev.M)) % ev.M


_cm(
    "eq-12.16-sun-48",
    "sum C(2k,k)C(4k,2k)/48^k = 2a - p/(2a) with p = a^2+3b^2, a = 1 mod 3",
    _sun48_lhs,
    _sun48_rhs,
)


def _binomial_144_lhs(ev: Ev, t: Params, z, br: str) -> int:
    return binomial_sum(
        ev.p, ev.M, lambda k: comb(2 * k, k) ** 2 * comb(4 * k, 2 * k), Fr(-1, 144)
    )


_cm(
    "eq-12.17-binomial-144",
    "sum C(2k,k)^2 C(4k,2k)/(-144)^k = 9Gamma(4/3)^2/(4Gamma(3/2)^2Gamma(5/6)^2)",
    _binomial_144_lhs,
    _goursat_square,
    notes="alternating sign: the sum equals the 3F2 at -16/9 termwise",
)


CM_IDS = tuple(st.id for st in STATEMENTS if "cm" in st.tags)


# ---------------------------------------------------------------- convenience entry points


def ahlgren_ono_check(p: int, strength: int = 2):
    """Compare the 4F3 sum with a(p) mod p^strength (strength 3 needs 5 <= p <= 100)."""
    from .registry import check_case

    if strength not in (2, 3):
        raise ValueError("strength must be 2 or 3")
    return check_case("eq-1.3-ahlgren-ono" if strength == 2 else "eq-1.3-kilbourn", p)


def cm_congruence_check(theorem_id: str, p: int):
    """Run one of the Cornacchia-based special-value congruences at p."""
    from .registry import check_case

    return check_case(theorem_id, p)


def dflst_check(p: int):
    from .registry import check_case

    return check_case("thm-13.1-dflst", p)

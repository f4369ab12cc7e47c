"""Encodings of the hypergeometric congruences: conditions and both sides.

Notation inside each encoding: parameters are ``x, y, w, u, v`` in the order
listed in ``params``; ``a, b, c, d, e`` are the least nonnegative residues of
their negatives mod p. Series are truncated at p-1 unless stated otherwise.
"""

from __future__ import annotations

from fractions import Fraction as Fr
from typing import Optional

from .hyper import PolySide, SeriesSpec, ZPoly
from .pools import (
    DEFAULT_POOL,
    POOL_ARITY4,
    POOL_ARITY5,
    chain_pools,
    fixed_pool,
    product_pool,
    ratio_pool,
)
from .statement import (
    Ev,
    Met,
    Outcome,
    Params,
    TheoremStatement,
    Unmet,
    first_bad_poch,
    z_any,
    z_units,
)

HALF = Fr(1, 2)


def _nr(x: Fr, p: int) -> int:
    """Least nonnegative residue of -x mod p (x assumed p-integral)."""
    return (-x.numerator * pow(x.denominator, -1, p)) % p


def _ok(branch: str = "") -> Met:
    return Met(branch)


def _off_p(x: Fr, p: int) -> Optional[Unmet]:
    """Hypothesis p does not divide x; the Gamma_p reductions behind several
    well-poised and Kummer-type closed forms need Gamma_p(x+1) = -x Gamma_p(x)."""
    return Unmet("<-x> >= 1") if _nr(x, p) == 0 else None


def _even(n: int) -> bool:
    return n % 2 == 0


def _ratio_equal(x: Fr, a: int, y: Fr, b: int) -> bool:
    """<-x>_p / x = <-y>_p / y, cross-multiplied so zero parameters are handled."""
    return a * y == b * x


STATEMENTS: list[TheoremStatement] = []


def register(st: TheoremStatement) -> TheoremStatement:
    STATEMENTS.append(st)
    return st


def _pool(arity: int):
    if arity <= 3:
        return product_pool(DEFAULT_POOL, arity)
    if arity == 4:
        return product_pool(POOL_ARITY4, arity)
    return product_pool(POOL_ARITY5, arity)


# ---------------------------------------------------------------- 2F1 at 1


def _gauss_cond(p: int, t: Params, z) -> Outcome:
    x, y = t
    a, b = _nr(x, p), _nr(y, p)
    return _ok("sum<p" if a + b < p else "sum>=p")


def _gauss_lhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y = t
    return ev.F([x, y], [1], 1)


def _gauss_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y = t
    q = ev.gq([1 - x - y], [1 - x, 1 - y])
    if br == "sum<p":
        return -q % ev.M
    a, b = ev.nr(x), ev.nr(y)
    return ev.mul(ev.r(x + y + a + b - ev.p), q)


register(
    TheoremStatement(
        id="thm-1.2-gauss",
        anchor="2F1[x,y;1|1] as a gamma quotient, split on <-x>+<-y> < p",
        params=("x", "y"),
        condition=_gauss_cond,
        lhs=_gauss_lhs,
        rhs=_gauss_rhs,
        pool=_pool(2),
    )
)

_MORTENSON = {Fr(1, 2): -1, Fr(1, 3): -3, Fr(1, 4): -2, Fr(1, 6): -1}


def _mortenson_cond(p: int, t: Params, z) -> Outcome:
    if p < 5:
        return Unmet("p >= 5")
    if t[0] not in _MORTENSON:
        return Unmet("x in {1/2, 1/3, 1/4, 1/6}")
    return _ok()


register(
    TheoremStatement(
        id="eq-1.5-mortenson",
        anchor="2F1[x,1-x;1|1] equals a Legendre symbol for x in {1/2,1/3,1/4,1/6}",
        params=("x",),
        condition=_mortenson_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], 1),
        rhs=lambda ev, t, z, br: ev.leg(_MORTENSON[t[0]]),
        pool=fixed_pool([["1/2"], ["1/3"], ["1/4"], ["1/6"], ["1/5"]]),
        min_prime=5,
    )
)

register(
    TheoremStatement(
        id="eq-1.6-sun",
        anchor="2F1[x,1-x;1|1] = (-1)^<-x>",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], 1),
        rhs=lambda ev, t, z, br: ev.sign(ev.nr(t[0])),
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="eq-1.7-sun",
        anchor="2F1[x,1-x;1|z] = (-1)^<-x> 2F1[x,1-x;1|1-z]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], z),
        rhs=lambda ev, t, z, br: ev.mul(ev.sign(ev.nr(t[0])), ev.F([t[0], 1 - t[0]], [1], 1 - z)),
        z_rule=z_any,
        pool=_pool(1),
    )
)


def _sun_poly_rhs(ev: Ev, t: Params, z, br: str):
    x = t[0]
    spec = SeriesSpec.of([x, 1 - x], [1], ZPoly.of(1, -1), ev.p - 1)
    return ev.poly(PolySide(spec, 1, Fr((-1) ** (ev.nr(x) % 2))))


register(
    TheoremStatement(
        id="eq-1.7-sun-poly",
        anchor="2F1[x,1-x;1|z] = (-1)^<-x> 2F1[x,1-x;1|1-z] coefficientwise in z",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.poly(SeriesSpec.of([t[0], 1 - t[0]], [1], ZPoly.of(0, 1), ev.p - 1)),
        rhs=_sun_poly_rhs,
        mode="polynomial",
        pool=_pool(1),
    )
)

# ---------------------------------------------------------------- quadratic 2F1


def _a_even(p: int, t: Params, z) -> Outcome:
    return _ok() if _even(_nr(t[0], p)) else Unmet("<-x>_p even")


def _a_even_off_p(p: int, t: Params, z) -> Outcome:
    return _off_p(t[0], p) or _a_even(p, t, z)


def _four_z_one_minus_z(z: Fr) -> Fr:
    return 4 * z * (1 - z)


register(
    TheoremStatement(
        id="thm-2.1",
        anchor="2F1[x,1-x;1|z] = 2F1[x/2,1/2-x/2;1|4z(1-z)] for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], z),
        rhs=lambda ev, t, z, br: ev.F([t[0] / 2, HALF - t[0] / 2], [1], _four_z_one_minus_z(z)),
        z_rule=z_any,
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="thm-2.1-poly",
        anchor="2F1[x,1-x;1|z] = 2F1[x/2,1/2-x/2;1|4z(1-z)] coefficientwise for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: ev.poly(SeriesSpec.of([t[0], 1 - t[0]], [1], ZPoly.of(0, 1), ev.p - 1)),
        rhs=lambda ev, t, z, br: ev.poly(
            SeriesSpec.of([t[0] / 2, HALF - t[0] / 2], [1], ZPoly.of(0, 4, -4), ev.p - 1)
        ),
        mode="polynomial",
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="thm-2.2",
        anchor="2F1[x,1-x;1|z]^2 = 3F2[x,1-x,1/2;1,1|4z(1-z)]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: pow(ev.F([t[0], 1 - t[0]], [1], z), 2, ev.M),
        rhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0], HALF], [1, 1], _four_z_one_minus_z(z)),
        z_rule=z_any,
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="thm-2.2-poly",
        anchor="2F1[x,1-x;1|z]^2 = 3F2[x,1-x,1/2;1,1|4z(1-z)] coefficientwise",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.poly(
            PolySide(SeriesSpec.of([t[0], 1 - t[0]], [1], ZPoly.of(0, 1), ev.p - 1), 2)
        ),
        rhs=lambda ev, t, z, br: ev.poly(
            SeriesSpec.of([t[0], 1 - t[0], HALF], [1, 1], ZPoly.of(0, 4, -4), ev.p - 1)
        ),
        mode="polynomial",
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="cor-2.3",
        anchor="2F1[x/2,1/2-x/2;1|z]^2 = 3F2[x,1-x,1/2;1,1|z] for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: pow(ev.F([t[0] / 2, HALF - t[0] / 2], [1], z), 2, ev.M),
        rhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0], HALF], [1, 1], z),
        z_rule=z_any,
        pool=_pool(1),
    )
)


def _inv_diff_lhs(ev: Ev, t: Params, z, br: str) -> int:
    """2F1[x,x;1|z] - z^(1-lambda) 2F1[x,x;1|1/z]."""
    x = t[0]
    return (ev.F([x, x], [1], z) - ev.mul(ev.pw(z, ev.oml(x)), ev.F([x, x], [1], 1 / z))) % ev.M


_Z_Z1 = z_units(("z", lambda z: z), ("z-1", lambda z: z - 1))

register(
    TheoremStatement(
        id="thm-2.4",
        anchor="2F1[x,x;1|z] - z^(1-lambda)2F1[x,x;1|1/z] = (1-z)^(1-lambda)2F1[x,1-x;1|z/(z-1)]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=_inv_diff_lhs,
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 - z, ev.oml(t[0])), ev.F([t[0], 1 - t[0]], [1], z / (z - 1))
        ),
        z_rule=_Z_Z1,
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="thm-2.5",
        anchor="2F1[x,x;1|z] - z^(1-lambda)2F1[x,x;1|1/z] = (1-z)^(1-lambda)2F1[x/2,1/2-x/2;1|-4z/(1-z)^2]",
        params=("x",),
        condition=_a_even,
        lhs=_inv_diff_lhs,
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 - z, ev.oml(t[0])),
            ev.F([t[0] / 2, HALF - t[0] / 2], [1], -4 * z / (1 - z) ** 2),
        ),
        z_rule=_Z_Z1,
        pool=_pool(1),
    )
)


def _inv_sum_lhs(ev: Ev, t: Params, z, br: str) -> int:
    x = t[0]
    return (ev.F([x, x], [1], z) + ev.mul(ev.pw(z, ev.oml(x)), ev.F([x, x], [1], 1 / z))) % ev.M


register(
    TheoremStatement(
        id="thm-2.6-quad-4z-over-1pz2",
        anchor="2F1[x,x;1|z] + z^(1-lambda)2F1[x,x;1|1/z] = (1+z)^(1-lambda)2F1[x/2,1/2+x/2;1|4z/(1+z)^2]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=_inv_sum_lhs,
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 + z, ev.oml(t[0])),
            ev.F([t[0] / 2, HALF + t[0] / 2], [1], 4 * z / (1 + z) ** 2),
        ),
        z_rule=z_units(("z", lambda z: z), ("z+1", lambda z: z + 1)),
        pool=_pool(1),
    )
)


def _half_pfaff_sum(ev: Ev, x: Fr, z: Fr, prefactor: int) -> int:
    """2F1[x,1/2;1|z] + prefactor * 2F1[x,1/2;1|z/(z-1)]."""
    return (ev.F([x, HALF], [1], z) + ev.mul(prefactor, ev.F([x, HALF], [1], z / (z - 1)))) % ev.M


register(
    TheoremStatement(
        id="thm-2.7",
        anchor="2F1[x,1/2;1|z] + (1-z)^(1-lambda)2F1[x,1/2;1|z/(z-1)] = 2(1-z/2)^(1-lambda)2F1[x/2,1/2+x/2;1|z^2/(z-2)^2]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: _half_pfaff_sum(ev, t[0], z, ev.pw(1 - z, ev.oml(t[0]))),
        rhs=lambda ev, t, z, br: ev.mul(
            2,
            ev.pw(1 - z / 2, ev.oml(t[0])),
            ev.F([t[0] / 2, HALF + t[0] / 2], [1], z * z / (z - 2) ** 2),
        ),
        z_rule=z_units(("z-1", lambda z: z - 1), ("z-2", lambda z: z - 2)),
        pool=_pool(1),
    )
)


def _square_inv_lhs(sign: int):
    def side(ev: Ev, t: Params, z, br: str) -> int:
        x = t[0]
        z2 = z * z
        tail = ev.mul(ev.pw(z, ev.oml(x, 2)), ev.F([x, x], [1], 1 / z2))
        return (ev.F([x, x], [1], z2) + sign * tail) % ev.M

    return side


register(
    TheoremStatement(
        id="thm-2.8",
        anchor="2F1[x,x;1|z^2] + z^(1-2lambda)2F1[x,x;1|1/z^2] = (1+z)^(1-2lambda)2F1[x,1/2;1|4z/(1+z)^2]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=_square_inv_lhs(1),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 + z, ev.oml(t[0], 2)), ev.F([t[0], HALF], [1], 4 * z / (1 + z) ** 2)
        ),
        z_rule=z_units(("z(1+z)", lambda z: z * (1 + z))),
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="eq-2.22-companion",
        anchor="2F1[x,x;1|z^2] - z^(1-2lambda)2F1[x,x;1|1/z^2] = (1-z)^(1-2lambda)2F1[x,1/2;1|-4z/(1-z)^2]",
        params=("x",),
        condition=lambda p, t, z: _ok(),
        lhs=_square_inv_lhs(-1),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 - z, ev.oml(t[0], 2)), ev.F([t[0], HALF], [1], -4 * z / (1 - z) ** 2)
        ),
        # only z and 1-z need to be units; 1+z and 1+z^2 may vanish mod p
        z_rule=z_units(("z", lambda z: z), ("1-z", lambda z: 1 - z)),
        pool=_pool(1),
        notes="swept with z and 1-z units only; 1+z and 1+z^2 may be divisible by p",
    )
)

register(
    TheoremStatement(
        id="thm-2.9",
        anchor="2F1[x,1/2;1|z] + (1-z)^<-x>2F1[x,1/2;1|z/(z-1)] = 2(1-z)^(<-x>/2)2F1[x/2,1/2-x/2;1|z^2/(4z-4)]",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: _half_pfaff_sum(ev, t[0], z, pow(ev.r(1 - z), ev.nr(t[0]), ev.M)),
        rhs=lambda ev, t, z, br: ev.mul(
            2,
            pow(ev.r(1 - z), ev.nr(t[0]) // 2, ev.M),
            ev.F([t[0] / 2, HALF - t[0] / 2], [1], z * z / (4 * z - 4)),
        ),
        z_rule=z_units(("z-1", lambda z: z - 1)),
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="eq-2.24-liu",
        anchor="2F1[x,1-x;1|1/2] = -Gamma(1/2)/(Gamma(1-x/2)Gamma(1/2+x/2)) for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], HALF),
        rhs=lambda ev, t, z, br: -ev.gq([HALF], [1 - t[0] / 2, HALF + t[0] / 2]) % ev.M,
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="eq-2.24-liu-middle",
        anchor="2F1[x,1-x;1|1/2] = 2F1[x/2,1/2-x/2;1|1] for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0]], [1], HALF),
        rhs=lambda ev, t, z, br: ev.F([t[0] / 2, HALF - t[0] / 2], [1], 1),
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="cor-2.27",
        anchor="2F1[x,x;1|-1] = -2Gamma(1+x/2)/(Gamma(1+x)Gamma(1-x/2)) for <-x> even",
        params=("x",),
        condition=_a_even_off_p,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[0]], [1], -1),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.M - 2, ev.gq([1 + t[0] / 2], [1 + t[0], 1 - t[0] / 2])
        ),
        pool=_pool(1),
    )
)

register(
    TheoremStatement(
        id="eq-9.4",
        anchor="2F1[x,1/2;1|2] = (-1)^(1+<-x>/2)Gamma(1/2)/(Gamma(1/2+x/2)Gamma(1-x/2)) for <-x> even",
        params=("x",),
        condition=_a_even,
        lhs=lambda ev, t, z, br: ev.F([t[0], HALF], [1], 2),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.sign(1 + ev.nr(t[0]) // 2), ev.gq([HALF], [HALF + t[0] / 2, 1 - t[0] / 2])
        ),
        pool=_pool(1),
    )
)


def _p1mod4(p: int, t: Params, z) -> Outcome:
    return _ok() if p % 4 == 1 else Unmet("p = 1 mod 4")


def _quarter_gamma(ev: Ev) -> int:
    """Gamma(1/2)/Gamma(3/4)^2."""
    return ev.gq([HALF], [Fr(3, 4), Fr(3, 4)])


register(
    TheoremStatement(
        id="eq-9.5-half-at-2",
        anchor="2F1[1/2,1/2;1|2] = (-1)^((p+3)/4)Gamma(1/2)/Gamma(3/4)^2 for p = 1 mod 4",
        params=(),
        condition=_p1mod4,
        lhs=lambda ev, t, z, br: ev.F([HALF, HALF], [1], 2),
        rhs=lambda ev, t, z, br: ev.mul(ev.sign((ev.p + 3) // 4), _quarter_gamma(ev)),
        pool=fixed_pool([[]]),
    )
)

register(
    TheoremStatement(
        id="eq-2.26-quarter-cm",
        anchor="2F1[1/4,1/4;1|-8] = (-1)^((p+3)/4)Gamma(1/2)/Gamma(3/4)^2 for p = 1 mod 4",
        params=(),
        condition=_p1mod4,
        lhs=lambda ev, t, z, br: ev.F([Fr(1, 4), Fr(1, 4)], [1], -8),
        rhs=lambda ev, t, z, br: ev.mul(ev.sign((ev.p + 3) // 4), _quarter_gamma(ev)),
        pool=fixed_pool([[]]),
    )
)


register(
    TheoremStatement(
        id="eq-9.6-eight-ninths",
        anchor="2F1[1/4,3/4;1|8/9] = -(6/p)Gamma(1/2)/Gamma(3/4)^2 for p = 1 mod 4",
        params=(),
        condition=_p1mod4,
        lhs=lambda ev, t, z, br: ev.F([Fr(1, 4), Fr(3, 4)], [1], Fr(8, 9)),
        rhs=lambda ev, t, z, br: ev.mul(ev.M - ev.leg(6), _quarter_gamma(ev)),
        pool=fixed_pool([[]]),
    )
)


def _eight_ninths_sum(ev: Ev, t: Params, z, br: str) -> int:
    e = ev.oml(HALF)
    inner = (ev.F([HALF, HALF], [1], 2) + ev.mul(ev.pw(2, e), ev.F([HALF, HALF], [1], HALF))) % ev.M
    return ev.div(inner, ev.pw(3, e))


register(
    TheoremStatement(
        id="eq-9.6-eight-ninths-sum",
        anchor="2F1[1/4,3/4;1|8/9] = 3^-(1-lambda(1/2))(2F1[1/2,1/2;1|2] + 2^(1-lambda(1/2))2F1[1/2,1/2;1|1/2])",
        params=(),
        condition=_p1mod4,
        lhs=lambda ev, t, z, br: ev.F([Fr(1, 4), Fr(3, 4)], [1], Fr(8, 9)),
        rhs=_eight_ninths_sum,
        pool=fixed_pool([[]]),
    )
)

register(
    TheoremStatement(
        id="eq-9.8-thirty-two-81sts",
        anchor="3F2[1/4,3/4,1/2;1,1|32/81] = Gamma(1/2)^2/Gamma(3/4)^4 for p = 1 mod 4",
        params=(),
        condition=_p1mod4,
        lhs=lambda ev, t, z, br: ev.F([Fr(1, 4), Fr(3, 4), HALF], [1, 1], Fr(32, 81)),
        rhs=lambda ev, t, z, br: ev.gq([HALF, HALF], [Fr(3, 4)] * 4),
        pool=fixed_pool([[]]),
    )
)

# ---------------------------------------------------------------- complete Gauss, Pfaff, Watson


def _gauss_complete_cond(p: int, t: Params, z) -> Outcome:
    x, y, w = t
    a, b, c = _nr(x, p), _nr(y, p), _nr(w, p)
    if c == 0:
        return Unmet("w is a unit")
    if a > c or b > c:
        return Unmet("<-x>, <-y> <= <-w>")
    return _ok("sum<=c" if a + b <= c else "sum>c")


def _gauss_quotient(ev: Ev, x: Fr, y: Fr, w: Fr) -> int:
    return ev.gq([w, w - x - y], [w - x, w - y])


def _gauss_complete_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w = t
    q = _gauss_quotient(ev, x, y, w)
    if br == "sum<=c":
        return q
    a, b, c = ev.nr(x), ev.nr(y), ev.nr(w)
    return ev.mul(ev.r(w + c - x - a - y - b), q)


register(
    TheoremStatement(
        id="thm-4.1",
        anchor="2F1[x,y;w|1] truncated at <-w> as a gamma quotient, split on <-x>+<-y> <= <-w>",
        params=("x", "y", "w"),
        condition=_gauss_complete_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[1]], [t[2]], 1, ev.nr(t[2])),
        rhs=_gauss_complete_rhs,
        pool=_pool(3),
    )
)


def _pfaff_cond(p: int, t: Params, z) -> Outcome:
    x, y, w = t
    a, b, c = _nr(x, p), _nr(y, p), _nr(w, p)
    if b == 0 or c == 0:
        return Unmet("y and w are units")
    if a + b > c:
        return Unmet("<-x>+<-y> <= <-w>")
    return _ok()


def _pfaff_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w = t
    n = ev.nr(1 - w + x + y)  # <w-x-y-1>_p
    return ev.mul(_gauss_quotient(ev, x, y, w), ev.F([x, y], [x + y - w + 1], 1 - z, n))


register(
    TheoremStatement(
        id="thm-4.2",
        anchor="2F1[x,y;w|z] truncated at <-w> = gamma quotient * 2F1[x,y;x+y-w+1|1-z] truncated at <w-x-y-1>",
        params=("x", "y", "w"),
        condition=_pfaff_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[1]], [t[2]], z, ev.nr(t[2])),
        rhs=_pfaff_rhs,
        z_rule=z_any,
        pool=_pool(3),
    )
)


def _watson_cond(p: int, t: Params, z) -> Outcome:
    x, y, w = t
    a, c = _nr(x, p), _nr(w, p)
    if not (_even(a) and _even(c)):
        return Unmet("<-x> and <-w> even")
    if a + c >= p:
        return Unmet("<-x>+<-w> < p")
    # Read as <-y>_p < p/2; the literal <y>_p reading fails numerically.
    if 2 * _nr(y, p) >= p:
        return Unmet("<-y>_p < p/2")
    bad = first_bad_poch([2 * y], p, "2y")
    return bad or _ok()


def _watson_lhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w = t
    n = (ev.p - 1 + ev.nr(x) + ev.nr(w)) // 2
    return ev.F([x, y, w], [2 * y, (x + w + 1) / 2], 1, n)


def _watson_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w = t
    s = (x + w) / 2
    return ev.gq(
        [HALF, HALF + y, HALF + s, HALF + y - s],
        [HALF + x / 2, HALF + w / 2, HALF + y - x / 2, HALF + y - w / 2],
    )


register(
    TheoremStatement(
        id="eq-4.10-watson",
        anchor="3F2[x,y,w;2y,(x+w+1)/2|1] truncated at (p-1+<-x>+<-w>)/2 as a gamma quotient",
        params=("x", "y", "w"),
        condition=_watson_cond,
        lhs=_watson_lhs,
        rhs=_watson_rhs,
        pool=_pool(3),
    )
)

# ---------------------------------------------------------------- Legendre polynomials


def _legendre_at(ev: Ev, n: int, z: Fr) -> int:
    from .hyper import legendre_poly

    return legendre_poly(n, 1 - 2 * z, ev.ctx).value % ev.M


register(
    TheoremStatement(
        id="eq-5.2-legendre-half",
        anchor="2F1[1/2,1/2;1|z] = P_((p-1)/2)(1-2z)",
        params=(),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.F([HALF, HALF], [1], z),
        rhs=lambda ev, t, z, br: _legendre_at(ev, (ev.p - 1) // 2, z),
        z_rule=z_any,
        pool=fixed_pool([[]]),
    )
)

register(
    TheoremStatement(
        id="eq-5.3-legendre-square",
        anchor="3F2[1/2,1/2,1/2;1,1|4z(1-z)] = P_((p-1)/2)(1-2z)^2",
        params=(),
        condition=lambda p, t, z: _ok(),
        lhs=lambda ev, t, z, br: ev.F([HALF, HALF, HALF], [1, 1], _four_z_one_minus_z(z)),
        rhs=lambda ev, t, z, br: pow(_legendre_at(ev, (ev.p - 1) // 2, z), 2, ev.M),
        z_rule=z_any,
        pool=fixed_pool([[]]),
    )
)

register(
    TheoremStatement(
        id="thm-5.1-quarter-legendre",
        anchor="2F1[1/4,1/4;1|4z(1-z)] = P_((p-1)/2)(1-2z) or P_((3p-1)/2)(1-2z) by p mod 4",
        params=(),
        condition=lambda p, t, z: _ok("p=1 mod 4" if p % 4 == 1 else "p=3 mod 4"),
        lhs=lambda ev, t, z, br: ev.F([Fr(1, 4), Fr(1, 4)], [1], _four_z_one_minus_z(z)),
        rhs=lambda ev, t, z, br: _legendre_at(
            ev, (ev.p - 1) // 2 if ev.p % 4 == 1 else (3 * ev.p - 1) // 2, z
        ),
        z_rule=z_any,
        pool=fixed_pool([[]]),
    )
)

# ---------------------------------------------------------------- 3F2 and 4F3


def _watson_half_cond(p: int, t: Params, z) -> Outcome:
    x, y = t
    b = _nr(y, p)
    if 2 * b >= p:
        return Unmet("<-y>_p < p/2")
    bad = first_bad_poch([2 * y], p, "2y")
    if bad:
        return bad
    return _ok("even" if _even(_nr(x, p)) else "odd")


def _watson_half_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y = t
    if br == "odd":
        return 0
    q = ev.gq(
        [HALF, HALF + y, y],
        [HALF + x / 2, 1 - x / 2, HALF + y - x / 2, y + x / 2],
    )
    return -q % ev.M


register(
    TheoremStatement(
        id="thm-2.10-watson",
        anchor="3F2[x,1-x,y;1,2y|1]: gamma quotient for <-x> even, 0 for <-x> odd",
        params=("x", "y"),
        condition=_watson_half_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], 1 - t[0], t[1]], [1, 2 * t[1]], 1),
        rhs=_watson_half_rhs,
        pool=_pool(2),
    )
)


def _dixon_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y = t
    bad = first_bad_poch([x - y + 1], p, "x-y+1")
    if bad:
        return bad
    a, b = _nr(x, p), _nr(y, p)
    if _even(a):
        if a <= b and 2 * b < p - a:
            return _ok("even")
        return Unmet("<-x> even: <-x> <= <-y> < (p-<-x>)/2")
    if max(2 * a, p - a) <= 2 * b and 2 * b < p + a:
        return _ok("odd-zero")
    if a <= b and 2 * b < p - a:
        return _ok("odd")
    return Unmet("<-x> odd: no branch applies")


def _dixon_quotient(ev: Ev, x: Fr, y: Fr) -> int:
    return ev.gq(
        [1 + x / 2, 1 + x - y, 1 - x / 2 - y],
        [1 + x, 1 - x / 2, 1 - y, 1 + x / 2 - y],
    )


def _dixon_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y = t
    if br == "odd-zero":
        return 0
    q = _dixon_quotient(ev, x, y)
    if br == "even":
        return ev.mul(ev.M - 2, q)
    return ev.mul(-ev.r(x + ev.nr(x)) % ev.M, q)


register(
    TheoremStatement(
        id="thm-2.11",
        anchor="3F2[x,x,y;1,x-y+1|1] in three branches on the parity of <-x>",
        params=("x", "y"),
        condition=_dixon_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[0], t[1]], [1, t[0] - t[1] + 1], 1),
        rhs=_dixon_rhs,
        pool=_pool(2),
    )
)


def _saal_cond(p: int, t: Params, z) -> Outcome:
    x, y, w = t
    a, b, c = _nr(x, p), _nr(y, p), _nr(w, p)
    if max(a, b) > c:
        return Unmet("max(<-x>,<-y>) <= <-w>")
    bad = first_bad_poch([w], p, "w")
    if bad:
        return bad
    if a + b < c:
        return _ok("sum<c")
    if a + b > p:
        return _ok("sum>p")
    return Unmet("<-x>+<-y> < <-w> or > p")


def _saal_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w = t
    if br == "sum>p":
        return 0
    q = ev.gq([1 + x - w, 1 + y - w, 1 - x - y], [1 - x, 1 - y, 1 - w, 1 + x + y - w])
    return -q % ev.M


register(
    TheoremStatement(
        id="thm-2.12",
        anchor="3F2[x,y,w-x-y;1,w|1]: gamma quotient or 0",
        params=("x", "y", "w"),
        condition=_saal_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[1], t[2] - t[0] - t[1]], [1, t[2]], 1),
        rhs=_saal_rhs,
        pool=_pool(3),
    )
)


def _thomae_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u = t
    a, b, c, d = (_nr(s, p) for s in t)
    if max(a, b, c) > d:
        return Unmet("max(<-x>,<-y>,<-w>) <= <-u>")
    if a + b + c >= p + d:
        return Unmet("<-x>+<-y>+<-w> < p+<-u>")
    if b + c < d:
        return Unmet("<-y>+<-w> >= <-u>")
    return first_bad_poch([u, 1 + u - y - w], p, "u, 1+u-y-w") or _ok()


def _thomae_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u = t
    q = ev.gq([u, 1 + u - x - y - w], [u - x, 1 + u - y - w])
    return ev.mul(q, ev.F([x, 1 - y, 1 - w], [1, 1 + u - y - w], 1))


register(
    TheoremStatement(
        id="thm-2.13",
        anchor="3F2[x,y,w;1,u|1] = gamma quotient * 3F2[x,1-y,1-w;1,1+u-y-w|1]",
        params=("x", "y", "w", "u"),
        condition=_thomae_cond,
        lhs=lambda ev, t, z, br: ev.F([t[0], t[1], t[2]], [1, t[3]], 1),
        rhs=_thomae_rhs,
        pool=_pool(4),
    )
)


def _whipple3_cond(p: int, t: Params, z) -> Outcome:
    x, y = t
    a, b = _nr(x, p), _nr(y, p)
    if a > b:
        return Unmet("<-x> <= <-y>")
    if p + a <= 2 * b:
        return Unmet("p+<-x> > 2<-y>")
    return first_bad_poch([x - y + 1], p, "x-y+1") or _ok()


def _whipple3_lhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y = t
    up, lo = [x, x, y], [1, x - y + 1]
    tail = ev.mul(ev.pw(-z, ev.oml(x)), ev.F(up, lo, 1 / z))
    return (ev.F(up, lo, z) + tail) % ev.M


register(
    TheoremStatement(
        id="thm-2.14",
        anchor="3F2[x,x,y;1,x-y+1|z] + (-z)^(1-lambda)3F2[..|1/z] = (1-z)^(1-lambda)3F2[1-y,x/2,x/2+1/2;1,x-y+1|-4z/(1-z)^2]",
        params=("x", "y"),
        condition=_whipple3_cond,
        lhs=_whipple3_lhs,
        rhs=lambda ev, t, z, br: ev.mul(
            ev.pw(1 - z, ev.oml(t[0])),
            ev.F([1 - t[1], t[0] / 2, t[0] / 2 + HALF], [1, t[0] - t[1] + 1], -4 * z / (1 - z) ** 2),
        ),
        z_rule=_Z_Z1,
        pool=_pool(2),
    )
)


def _rho(t: Params) -> Fr:
    x, y, w, u, v = t
    return u + v - x - y - w


def _four_f_three_common(p: int, t: Params) -> Optional[Unmet]:
    a, b, c, d, e = (_nr(s, p) for s in t)
    if not (a <= min(d, e) and b <= d and c <= e):
        return Unmet("<-x> <= min(<-u>,<-v>), <-y> <= <-u>, <-w> <= <-v>")
    return None


def _whipple4_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u, v = t
    a, b, c, d, e = (_nr(s, p) for s in t)
    bad = _four_f_three_common(p, t)
    if bad:
        return bad
    if a + b + c > d + e:
        return Unmet("<-x>+<-y>+<-w> <= <-u>+<-v>")
    if b + c < max(d, e):
        return Unmet("<-y>+<-w> >= max(<-u>,<-v>)")
    return (
        first_bad_poch([u, v, 1 + u - y - w, 1 + v - y - w], p, "u, v, 1+u-y-w, 1+v-y-w") or _ok()
    )


def _whipple4_lhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u, v = t
    return ev.F([_rho(t), x, y, w], [1, u, v], 1)


def _whipple4_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u, v = t
    r = _rho(t)
    q = ev.gq([y + w - u, y + w - v, u, v], [u - r, v - r, u - x, v - x])
    return ev.mul(q, ev.F([r, x, 1 - y, 1 - w], [1, 1 + u - y - w, 1 + v - y - w], 1))


register(
    TheoremStatement(
        id="thm-2.15",
        anchor="4F3[r,x,y,w;1,u,v|1] with r = u+v-x-y-w equals a gamma quotient times 4F3[r,x,1-y,1-w;1,1+u-y-w,1+v-y-w|1]",
        params=("x", "y", "w", "u", "v"),
        condition=_whipple4_cond,
        lhs=_whipple4_lhs,
        rhs=_whipple4_rhs,
        pool=_pool(5),
    )
)


def _whipple4_zero_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u, v = t
    a, b, c, d, e = (_nr(s, p) for s in t)
    if a == 0:
        return Unmet("x is a unit")
    bad = _four_f_three_common(p, t)
    if bad:
        return bad
    if a + b + c < p + max(d, e):
        return Unmet("<-x>+<-y>+<-w> >= p+max(<-u>,<-v>)")
    return first_bad_poch([u, v], p, "u, v") or _ok()


register(
    TheoremStatement(
        id="thm-2.16",
        anchor="4F3[r,x,y,w;1,u,v|1] with r = u+v-x-y-w vanishes",
        params=("x", "y", "w", "u", "v"),
        condition=_whipple4_zero_cond,
        lhs=_whipple4_lhs,
        rhs=lambda ev, t, z, br: 0,
        pool=_pool(5),
    )
)

# ---------------------------------------------------------------- 7F6 family


def _well_poised_7f6(ev: Ev, t: Params) -> int:
    x, y, w, u, v = t
    return ev.F(
        [x, x, 1 + x / 2, y, w, u, v],
        [1, x / 2, x - y + 1, x - w + 1, x - u + 1, x - v + 1],
        1,
    )


def _gw(ev: Ev, x: Fr, y: Fr, w: Fr, u: Fr) -> int:
    return ev.gq(
        [x - y + 1, x - w + 1, x - u + 1, x - y - w - u + 1],
        [x + 1, x - y - w + 1, x - y - u + 1, x - w - u + 1],
    )


def _balanced_4f3(ev: Ev, t: Params) -> int:
    x, y, w, u, v = t
    return ev.F([1 - v, y, w, u], [1, x - v + 1, y + w + u - x], 1)


def _poch_five(t: Params) -> list[Fr]:
    x, y, w, u, v = t
    return [x - y + 1, x - w + 1, x - u + 1, x - v + 1, y + w + u - x]


def _w7a_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u, v = t
    a, b, c, d, e = (_nr(s, p) for s in t)
    if not (b < a <= min(c, d, e)):
        return Unmet("<-y> < <-x> <= min(<-w>,<-u>,<-v>)")
    if p + a <= max(c + e, d + e, b + c + d):
        return Unmet("p+<-x> > max(<-w>+<-v>, <-u>+<-v>, <-y>+<-w>+<-u>)")
    if not _ratio_equal(x, a, y, b):
        return Unmet("<-x>/x = <-y>/y")
    return first_bad_poch(_poch_five(t), p, "five lower-type parameters") or _ok()


def _w7a_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u, v = t
    a, b = ev.nr(x), ev.nr(y)
    factor = ev.div(a % ev.M, (a - b) % ev.M)
    return ev.mul(factor, _gw(ev, x, y, w, u), _balanced_4f3(ev, t))


_WORKED_7F6 = [["2/3", "1/12", "3/4", "3/4", "3/4"]]

register(
    TheoremStatement(
        id="thm-2.17",
        anchor="well-poised 7F6 = <-x>/(<-x>-<-y>) * gamma quotient * balanced 4F3, with <-x>/x = <-y>/y",
        params=("x", "y", "w", "u", "v"),
        condition=_w7a_cond,
        lhs=lambda ev, t, z, br: _well_poised_7f6(ev, t),
        rhs=_w7a_rhs,
        pool=chain_pools(fixed_pool(_WORKED_7F6), ratio_pool(POOL_ARITY5, 3), _pool(5)),
    )
)


def _w7b_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u, v = t
    a, b, c, d, e = (_nr(s, p) for s in t)
    if a > min(b, c, d, e):
        return Unmet("<-x> <= min(<-y>,<-w>,<-u>,<-v>)")
    if p + a <= max(b + c, b + d, b + e, c + d):
        return Unmet("p+<-x> > pairwise sums")
    if 2 * p - 1 + a > b + c + d + e:
        return Unmet("2p-1+<-x> <= <-y>+<-w>+<-u>+<-v>")
    return first_bad_poch(_poch_five(t)[:4], p, "four lower parameters") or _ok()


register(
    TheoremStatement(
        id="thm-2.18",
        anchor="well-poised 7F6 vanishes",
        params=("x", "y", "w", "u", "v"),
        condition=_w7b_cond,
        lhs=lambda ev, t, z, br: _well_poised_7f6(ev, t),
        rhs=lambda ev, t, z, br: 0,
        pool=_pool(5),
    )
)


def _w7c_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y, w, u, v = t
    a, b, c, d, e = (_nr(s, p) for s in t)
    if a > min(b, c, d, e):
        return Unmet("<-x> <= min(<-y>,<-w>,<-u>,<-v>)")
    if p + a <= max(b + c + d, min(b, c, d) + e):
        return Unmet("p+<-x> > max(<-y>+<-w>+<-u>, min(<-y>,<-w>,<-u>)+<-v>)")
    return first_bad_poch(_poch_five(t), p, "five lower-type parameters") or _ok()


register(
    TheoremStatement(
        id="thm-2.19",
        anchor="well-poised 7F6 = (x+<-x>) * gamma quotient * balanced 4F3",
        params=("x", "y", "w", "u", "v"),
        condition=_w7c_cond,
        lhs=lambda ev, t, z, br: _well_poised_7f6(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.r(t[0] + ev.nr(t[0])), _gw(ev, *t[:4]), _balanced_4f3(ev, t)
        ),
        pool=_pool(5),
    )
)


def _closing(t: Params) -> Params:
    """Append v = x+1-y-w-u, which makes the 7F6 summable."""
    x, y, w, u = t
    return (x, y, w, u, x + 1 - y - w - u)


def _dougall_quotient(ev: Ev, y: Fr, w: Fr, u: Fr) -> int:
    return ev.gq([1 - y - w, 1 - y - u, 1 - w - u], [1 - y, 1 - w, 1 - u, 1 - y - w - u])


def _w7d_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u = t
    full = _closing(t)
    if full[4].denominator % p == 0:
        return Unmet("x+1-y-w-u is p-integral")
    a, b, c, d = (_nr(s, p) for s in t)
    if not (b < a <= min(c, d)):
        return Unmet("<-y> < <-x> <= min(<-w>,<-u>)")
    if b + c + d >= p:
        return Unmet("<-y>+<-w>+<-u> < p")
    if not _ratio_equal(x, a, y, b):
        return Unmet("<-x>/x = <-y>/y")
    return first_bad_poch([x - y + 1, x - w + 1, x - u + 1, y + w + u], p, "four parameters") or _ok()


def _w7d_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u = t
    factor = ev.div(-ev.r(x) % ev.M, ev.r(x - y))
    return ev.mul(factor, _dougall_quotient(ev, y, w, u), _gw(ev, x, y, w, u))


register(
    TheoremStatement(
        id="thm-2.20",
        anchor="well-poised 7F6 with v = x+1-y-w-u equals -x/(x-y) times gamma quotients",
        params=("x", "y", "w", "u"),
        condition=_w7d_cond,
        lhs=lambda ev, t, z, br: _well_poised_7f6(ev, _closing(t)),
        rhs=_w7d_rhs,
        pool=chain_pools(ratio_pool(POOL_ARITY4, 2), _pool(4)),
    )
)


def _w7e_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y, w, u = t
    full = _closing(t)
    if full[4].denominator % p == 0:
        return Unmet("x+1-y-w-u is p-integral")
    a, b, c, d, e = (_nr(s, p) for s in full)
    if a > min(b, c, d, e):
        return Unmet("<-x> <= min(<-y>,<-w>,<-u>,<-v>)")
    if b + c + d >= p:
        return Unmet("<-y>+<-w>+<-u> < p")
    return first_bad_poch([x - y + 1, x - w + 1, x - u + 1, y + w + u], p, "four parameters") or _ok()


def _w7e_rhs(ev: Ev, t: Params, z, br: str) -> int:
    x, y, w, u = t
    factor = -ev.r(x + ev.nr(x)) % ev.M
    return ev.mul(factor, _dougall_quotient(ev, y, w, u), _gw(ev, x, y, w, u))


register(
    TheoremStatement(
        id="thm-2.21",
        anchor="well-poised 7F6 with v = x+1-y-w-u equals -(x+<-x>) times gamma quotients",
        params=("x", "y", "w", "u"),
        condition=_w7e_cond,
        lhs=lambda ev, t, z, br: _well_poised_7f6(ev, _closing(t)),
        rhs=_w7e_rhs,
        pool=_pool(4),
        notes="v is computed from x, y, w, u before <-v> enters the hypotheses",
    )
)

# ---------------------------------------------------------------- 5F4, 6F5, 4F3 at -1


def _well_poised_5f4(ev: Ev, t: Params) -> int:
    x, y, w = t
    return ev.F([x, x, 1 + x / 2, y, w], [1, x / 2, x - y + 1, x - w + 1], 1)


def _r5(ev: Ev, x: Fr, y: Fr, w: Fr) -> int:
    return ev.gq([1 + x - y, 1 + x - w, 1 - y - w], [1 + x, 1 - y, 1 - w, 1 + x - y - w])


def _f54a_cond(p: int, t: Params, z) -> Outcome:
    x, y, w = t
    a, b, c = (_nr(s, p) for s in t)
    if not (b < a <= c and 2 * c < p + a):
        return Unmet("<-y> < <-x> <= <-w> < (p+<-x>)/2")
    if b + c >= p:
        return Unmet("<-y>+<-w> < p")
    if not _ratio_equal(x, a, y, b):
        return Unmet("<-x>/x = <-y>/y")
    return first_bad_poch([x - y + 1, x - w + 1], p, "x-y+1, x-w+1") or _ok()


register(
    TheoremStatement(
        id="thm-5f4-a",
        anchor="well-poised 5F4 = -x/(x-y) * gamma quotient, with <-x>/x = <-y>/y",
        params=("x", "y", "w"),
        condition=_f54a_cond,
        lhs=lambda ev, t, z, br: _well_poised_5f4(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.div(-ev.r(t[0]) % ev.M, ev.r(t[0] - t[1])), _r5(ev, *t)
        ),
        pool=chain_pools(ratio_pool(DEFAULT_POOL, 1), _pool(3)),
    )
)


def _f54b_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y, w = t
    a, b, c = (_nr(s, p) for s in t)
    if a > min(b, c):
        return Unmet("<-x> <= min(<-y>,<-w>)")
    bad = first_bad_poch([x - y + 1, x - w + 1], p, "x-y+1, x-w+1")
    if bad:
        return bad
    if p <= b + c < p + a:
        return _ok("zero")
    if b + c < p:
        return _ok("quotient")
    return Unmet("<-y>+<-w> < p+<-x>")


register(
    TheoremStatement(
        id="thm-5f4-b",
        anchor="well-poised 5F4 = -(x+<-x>) * gamma quotient, or 0",
        params=("x", "y", "w"),
        condition=_f54b_cond,
        lhs=lambda ev, t, z, br: _well_poised_5f4(ev, t),
        rhs=lambda ev, t, z, br: 0
        if br == "zero"
        else ev.mul(-ev.r(t[0] + ev.nr(t[0])) % ev.M, _r5(ev, *t)),
        pool=_pool(3),
    )
)


def _well_poised_6f5(ev: Ev, t: Params) -> int:
    x, y, w, u = t
    return ev.F([x, x, x / 2 + 1, y, w, u], [1, x / 2, x - y + 1, x - w + 1, x - u + 1], -1)


def _h6(ev: Ev, t: Params) -> int:
    x, y, w, u = t
    q = ev.gq([x - y + 1, x - w + 1], [x + 1, x - y - w + 1])
    return ev.mul(q, ev.F([1 - u, y, w], [1, x - u + 1], 1))


def _f65a_cond(p: int, t: Params, z) -> Outcome:
    x, y, w, u = t
    a, b, c, d = (_nr(s, p) for s in t)
    if not (b < a <= min(c, d)):
        return Unmet("<-y> < <-x> <= min(<-w>,<-u>)")
    if p + a <= c + d:
        return Unmet("p+<-x> > <-w>+<-u>")
    if not _ratio_equal(x, a, y, b):
        return Unmet("<-x>/x = <-y>/y")
    return first_bad_poch([x - y + 1, x - w + 1, x - u + 1], p, "three parameters") or _ok()


register(
    TheoremStatement(
        id="thm-6f5-a",
        anchor="well-poised 6F5 at -1 = x/(x-y) * gamma quotient * 3F2[1-u,y,w;1,x-u+1|1]",
        params=("x", "y", "w", "u"),
        condition=_f65a_cond,
        lhs=lambda ev, t, z, br: _well_poised_6f5(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(ev.div(ev.r(t[0]), ev.r(t[0] - t[1])), _h6(ev, t)),
        pool=chain_pools(ratio_pool(POOL_ARITY4, 2), _pool(4)),
    )
)


def _f65b_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y, w, u = t
    a, b, c, d = (_nr(s, p) for s in t)
    if a > min(b, c, d):
        return Unmet("<-x> <= min(<-y>,<-w>,<-u>)")
    if p + a <= max(b + c, b + d, c + d):
        return Unmet("p+<-x> > pairwise sums")
    return first_bad_poch([x - y + 1, x - w + 1, x - u + 1], p, "three parameters") or _ok()


register(
    TheoremStatement(
        id="thm-6f5-b",
        anchor="well-poised 6F5 at -1 = (x+<-x>) * gamma quotient * 3F2[1-u,y,w;1,x-u+1|1]",
        params=("x", "y", "w", "u"),
        condition=_f65b_cond,
        lhs=lambda ev, t, z, br: _well_poised_6f5(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(ev.r(t[0] + ev.nr(t[0])), _h6(ev, t)),
        pool=_pool(4),
    )
)


def _well_poised_4f3(ev: Ev, t: Params) -> int:
    x, y = t
    return ev.F([x, x, x / 2 + 1, y], [1, x / 2, x - y + 1], -1)


def _q43(ev: Ev, x: Fr, y: Fr) -> int:
    return ev.gq([x - y + 1], [x + 1, 1 - y])


def _f43a_cond(p: int, t: Params, z) -> Outcome:
    x, y = t
    a, b = _nr(x, p), _nr(y, p)
    if not b < a:
        return Unmet("<-y> < <-x>")
    if not _ratio_equal(x, a, y, b):
        return Unmet("<-x>/x = <-y>/y")
    return first_bad_poch([x - y + 1], p, "x-y+1") or _ok()


def _f43b_cond(p: int, t: Params, z) -> Outcome:
    off = _off_p(t[0], p)
    if off:
        return off
    x, y = t
    a, b = _nr(x, p), _nr(y, p)
    if not (a <= b and 2 * b <= p + a - 1):
        return Unmet("<-x> <= <-y> <= (p+<-x>-1)/2")
    return first_bad_poch([x - y + 1], p, "x-y+1") or _ok()


register(
    TheoremStatement(
        id="eq-2.59-4f3-minus1-a",
        anchor="well-poised 4F3 at -1 = -x/(x-y) Gamma(x-y+1)/(Gamma(x+1)Gamma(1-y)), with <-x>/x = <-y>/y",
        params=("x", "y"),
        condition=_f43a_cond,
        lhs=lambda ev, t, z, br: _well_poised_4f3(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(
            ev.div(-ev.r(t[0]) % ev.M, ev.r(t[0] - t[1])), _q43(ev, *t)
        ),
        pool=chain_pools(ratio_pool(DEFAULT_POOL, 0), _pool(2)),
    )
)

register(
    TheoremStatement(
        id="eq-2.60-4f3-minus1-b",
        anchor="well-poised 4F3 at -1 = -(x+<-x>) Gamma(x-y+1)/(Gamma(x+1)Gamma(1-y))",
        params=("x", "y"),
        condition=_f43b_cond,
        lhs=lambda ev, t, z, br: _well_poised_4f3(ev, t),
        rhs=lambda ev, t, z, br: ev.mul(-ev.r(t[0] + ev.nr(t[0])) % ev.M, _q43(ev, *t)),
        pool=_pool(2),
    )
)

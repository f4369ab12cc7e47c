"""Parameter pools used by sweeps."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

Params = tuple[Fraction, ...]

DEFAULT_DENOMINATORS = (2, 3, 4, 5, 6, 8, 12)


def fractions_with_denominators(dens: Sequence[int], include_one: bool = True) -> tuple[Fraction, ...]:
    """Reduced fractions r/d in (0, 1) for each d, optionally with 1 appended."""
    seen: list[Fraction] = []
    for d in dens:
        for r in range(1, d):
            x = Fraction(r, d)
            if x.denominator == d and x not in seen:
                seen.append(x)
    if include_one:
        seen.append(Fraction(1))
    return tuple(seen)


DEFAULT_POOL = fractions_with_denominators(DEFAULT_DENOMINATORS)

# Arity 4 and 5 products of the full pool are too large for desk-scale sweeps.
POOL_ARITY4 = tuple(
    Fraction(s)
    for s in ("1/2", "1/3", "2/3", "1/4", "3/4", "1/6", "5/6", "1/12", "5/12", "7/12", "11/12")
)
POOL_ARITY5 = tuple(Fraction(s) for s in ("1/2", "1/3", "2/3", "1/4", "3/4", "1/6", "5/6"))


def parse_pool(spec: str) -> tuple[Fraction, ...]:
    """Pool from a CLI string: ``default``, ``dens:2,3,4`` or a comma list of fractions."""
    spec = spec.strip()
    if spec in ("", "default"):
        return DEFAULT_POOL
    if spec.startswith("dens:"):
        dens = [int(d) for d in spec[5:].split(",") if d.strip()]
        return fractions_with_denominators(dens)
    return tuple(Fraction(s.strip()) for s in spec.split(",") if s.strip())


def product_pool(values: Sequence[Fraction], arity: int) -> Callable[[int], Iterable[Params]]:
    vals = tuple(values)

    def gen(p: int) -> Iterable[Params]:
        if arity == 0:
            return [()]
        return product(vals, repeat=arity)

    return gen


def fixed_pool(tuples: Sequence[Sequence[Fraction | str]]) -> Callable[[int], Iterable[Params]]:
    fixed = [tuple(Fraction(x) for x in t) for t in tuples]

    def gen(p: int) -> Iterable[Params]:
        return list(fixed)

    return gen


def ratio_pairs(bases: Sequence[Fraction], max_mult: int = 11) -> list[tuple[Fraction, Fraction]]:
    """Pairs (s*y, y) with s >= 2 and s*y <= 1; for small p-residues these satisfy
    the proportionality condition <-x>_p / x = <-y>_p / y."""
    out = []
    for y in bases:
        for s in range(2, max_mult + 1):
            x = s * y
            if x <= 1:
                out.append((x, y))
    return out


def ratio_pool(
    rest: Sequence[Fraction], rest_arity: int, bases: Sequence[Fraction] = DEFAULT_POOL
) -> Callable[[int], Iterable[Params]]:
    """Tuples (x, y, *rest) with x = s*y, plus the plain product of the rest pool."""
    pairs = ratio_pairs([b for b in bases if b < 1])

    def gen(p: int) -> Iterable[Params]:
        for x, y in pairs:
            for tail in product(rest, repeat=rest_arity):
                yield (x, y) + tuple(tail)

    return gen


def chain_pools(*gens: Callable[[int], Iterable[Params]]) -> Callable[[int], Iterable[Params]]:
    def gen(p: int) -> Iterable[Params]:
        seen = set()
        for g in gens:
            for t in g(p):
                if t not in seen:
                    seen.add(t)
                    yield t

    return gen

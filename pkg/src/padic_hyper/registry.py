"""Theorem registry: lookup, single-case checks and deterministic sweeps."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from sympy import primerange

from .core import RationalLike, as_rational, context
from .errors import PadicError, UnknownTheorem
from .pools import product_pool
from .statement import Ev, Met, Params, TheoremStatement, Unmet


class Verdict(str, Enum):
    HOLDS = "holds"
    CONDITION_NOT_MET = "condition_not_met"
    FAILS = "fails"
    ERROR = "error"


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one (theorem, prime, parameters, z) instance.

    ``detail`` holds the branch for HOLDS/FAILS, the failed hypothesis for
    CONDITION_NOT_MET and the error kind for ERROR. FAILS carries both sides.
    """

    theorem: str
    p: int
    params: Params
    z: Optional[Fraction]
    verdict: Verdict
    detail: str = ""
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    modulus: int = 0
    duration_ms: float = field(default=0.0, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


@dataclass
class SweepReport:
    theorem: str
    prime_range: tuple[int, int]
    pool: str
    cases: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {v.value: 0 for v in Verdict})
    branches: dict[str, int] = field(default_factory=dict)
    failures: list[CaseResult] = field(default_factory=list)
    errors: list[CaseResult] = field(default_factory=list)
    unmet_reasons: dict[str, int] = field(default_factory=dict)
    duration_ms: int = 0

    @property
    def holds(self) -> int:
        return self.counts[Verdict.HOLDS.value]

    @property
    def condition_not_met(self) -> int:
        return self.counts[Verdict.CONDITION_NOT_MET.value]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def add(self, res: CaseResult) -> None:
        self.cases += 1
        self.counts[res.verdict.value] += 1
        if res.verdict is Verdict.HOLDS:
            self.branches[res.detail] = self.branches.get(res.detail, 0) + 1
        elif res.verdict is Verdict.CONDITION_NOT_MET:
            self.unmet_reasons[res.detail] = self.unmet_reasons.get(res.detail, 0) + 1
        elif res.verdict is Verdict.FAILS:
            self.failures.append(res)
        else:
            self.errors.append(res)

    def merge(self, other: "SweepReport") -> None:
        self.cases += other.cases
        for key, n in other.counts.items():
            self.counts[key] += n
        for key, n in other.branches.items():
            self.branches[key] = self.branches.get(key, 0) + n
        for key, n in other.unmet_reasons.items():
            self.unmet_reasons[key] = self.unmet_reasons.get(key, 0) + n
        self.failures.extend(other.failures)
        self.errors.extend(other.errors)


_REGISTRY: dict[str, TheoremStatement] = {}


def _load() -> dict[str, TheoremStatement]:
    if not _REGISTRY:
        from . import special, theorems

        for st in list(theorems.STATEMENTS) + list(special.STATEMENTS):
            if st.id in _REGISTRY:
                raise RuntimeError(f"duplicate theorem id {st.id}")
            _REGISTRY[st.id] = st
    return _REGISTRY


def lookup(theorem_id: str) -> TheoremStatement:
    reg = _load()
    try:
        return reg[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"no theorem registered as {theorem_id!r}") from None


@dataclass(frozen=True)
class TheoremInfo:
    id: str
    anchor: str
    arity: int
    mode: str
    modulus_exp: int
    uses_z: bool


def list_theorems() -> list[TheoremInfo]:
    """Every registered theorem in registration order."""
    return [
        TheoremInfo(st.id, st.anchor, st.arity, st.mode, st.modulus_exp, st.uses_z)
        for st in _load().values()
    ]


def _integral(x: Fraction, p: int) -> bool:
    return x.denominator % p != 0


def _render(value) -> str:
    if isinstance(value, tuple):
        return "[" + ",".join(str(c) for c in value) + "]"
    return str(value)


def check_case(
    theorem_id: str,
    p: int,
    params: Sequence[RationalLike] = (),
    z: Optional[RationalLike] = None,
) -> CaseResult:
    """Evaluate one instance: hypotheses first, then both sides independently."""
    st = lookup(theorem_id)
    t: Params = tuple(as_rational(x) for x in params)
    if len(t) != st.arity:
        raise ValueError(f"{theorem_id} takes {st.arity} parameters, got {len(t)}")
    zr = None if z is None else as_rational(z)
    if st.uses_z and zr is None:
        raise ValueError(f"{theorem_id} needs an argument z")
    k = st.modulus_exp
    mod = p**k

    start = time.perf_counter()

    def result(verdict: Verdict, detail: str = "", lhs=None, rhs=None) -> CaseResult:
        elapsed = (time.perf_counter() - start) * 1000
        return CaseResult(theorem_id, p, t, zr, verdict, detail, lhs, rhs, mod, elapsed)

    if p == 2:
        return result(Verdict.CONDITION_NOT_MET, "p is odd")
    context(p)
    if p < st.min_prime:
        return result(Verdict.CONDITION_NOT_MET, f"p >= {st.min_prime}")
    if st.max_prime is not None and p > st.max_prime:
        return result(Verdict.CONDITION_NOT_MET, f"p <= {st.max_prime}")
    for x in t:
        if not _integral(x, p):
            return result(Verdict.CONDITION_NOT_MET, f"{x} is not {p}-integral")
    if zr is not None:
        if not _integral(zr, p):
            return result(Verdict.CONDITION_NOT_MET, f"z = {zr} is not {p}-integral")
        if st.z_rule is not None:
            why = st.z_rule(zr, p)
            if why:
                return result(Verdict.CONDITION_NOT_MET, why)
    try:
        outcome = st.condition(p, t, zr)
    except PadicError as exc:
        return result(Verdict.ERROR, exc.kind)
    if isinstance(outcome, Unmet):
        return result(Verdict.CONDITION_NOT_MET, outcome.reason)
    branch = outcome.branch if isinstance(outcome, Met) else ""
    try:
        lhs = st.lhs(Ev(p, k), t, zr, branch)
        rhs = st.rhs(Ev(p, k), t, zr, branch)
    except PadicError as exc:
        return result(Verdict.ERROR, exc.kind)
    if lhs == rhs:
        return result(Verdict.HOLDS, branch, _render(lhs), _render(rhs))
    return result(Verdict.FAILS, branch, _render(lhs), _render(rhs))


_SPECIAL_Z = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(0), Fraction(1), Fraction(3))


def sample_z(st: TheoremStatement, p: int, n: int, seed: int) -> list[Fraction]:
    """Deterministic unit z values for one prime: a few small specials, then seeded draws mod p^2."""
    if not st.uses_z or n <= 0:
        return []
    rng = random.Random(f"{seed}:{st.id}:{p}")
    out: list[Fraction] = []
    seen: set[Fraction] = set()

    def ok(z: Fraction) -> bool:
        return z.numerator % p != 0 and z.denominator % p != 0 and st.z_rule(z, p) is None and z not in seen

    for z in _SPECIAL_Z:
        if len(out) >= min(n, 3):
            break
        if ok(z):
            out.append(z)
            seen.add(z)
    attempts = 0
    while len(out) < n and attempts < 50 * n:
        attempts += 1
        z = Fraction(rng.randrange(p * p))
        if ok(z):
            out.append(z)
            seen.add(z)
    return out


PoolArg = Union[None, Sequence[RationalLike], Sequence[Sequence[RationalLike]]]


def _param_tuples(st: TheoremStatement, p: int, pool: PoolArg) -> Iterable[Params]:
    if pool is None:
        gen = st.pool or product_pool((), st.arity)
        source = gen(p)
    elif pool and isinstance(pool[0], (list, tuple)):
        source = [tuple(as_rational(x) for x in t) for t in pool]  # type: ignore[union-attr]
    else:
        source = product_pool([as_rational(x) for x in pool], st.arity)(p)  # type: ignore[arg-type]
    # Tuples that are not p-integral still run, and check_case reports them as unmet.
    yield from source


def _sweep_prime(args) -> SweepReport:
    theorem_id, p, pool, z_samples, seed, describe = args
    st = lookup(theorem_id)
    rep = SweepReport(theorem_id, (p, p), describe)
    zs = sample_z(st, p, z_samples, seed) if st.uses_z else [None]
    for t in _param_tuples(st, p, pool):
        for z in zs:
            rep.add(check_case(theorem_id, p, t, z))
    return rep


def primes_in(lo: int, hi: int) -> list[int]:
    return [q for q in primerange(max(lo, 2), hi + 1)]


def sweep(
    theorem_id: str,
    primes: Union[tuple[int, int], Sequence[int]],
    pool: PoolArg = None,
    z_samples: int = 20,
    seed: int = 0,
    jobs: int = 1,
) -> SweepReport:
    """Run every (prime, parameters, z) case and aggregate the verdicts.

    ``primes`` is an inclusive (lo, hi) range or an explicit list; p = 2 is
    reported as ConditionNotMet. ``pool`` is
    None for the theorem's default pool, a list of values whose ``arity``-fold
    product is used, or a list of explicit parameter tuples. Results are
    reduced in prime order, so the report does not depend on ``jobs``.
    """
    st = lookup(theorem_id)
    if isinstance(primes, tuple) and len(primes) == 2:
        plist = primes_in(*primes)
        rng = (primes[0], primes[1])
    else:
        plist = list(primes)
        rng = (min(plist), max(plist)) if plist else (0, 0)
    describe = "default" if pool is None else ",".join(str(x) for x in pool)
    start = time.perf_counter()
    report = SweepReport(st.id, rng, describe)
    tasks = [(st.id, p, pool, z_samples, seed, describe) for p in plist]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_sweep_prime, tasks))
    else:
        parts = [_sweep_prime(t) for t in tasks]
    for part in parts:
        report.merge(part)
    report.duration_ms = int((time.perf_counter() - start) * 1000)
    return report

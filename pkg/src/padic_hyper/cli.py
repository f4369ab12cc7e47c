"""Command-line front end: ``verify`` sweeps, ``eval`` single values, ``list`` theorems."""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .core import as_rational, context
from .errors import PadicError, UnknownTheorem
from .gamma import gamma_int
from .hyper import hyper_sum
from .pools import parse_pool
from .registry import list_theorems, lookup, sweep
from .report import render_csv, render_json, render_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Options whose values may start with "-" (negative fractions such as "-2,-2").
_VALUE_FLAGS = {"--upper", "--lower", "--z", "--alpha", "--params"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _join_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _fractions(text: str) -> list[Fraction]:
    return [as_rational(s.strip()) for s in text.split(",") if s.strip()]


def _prime_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", text)
    if not m:
        raise UsageError(f"--primes expects lo:hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError("--primes lower bound exceeds upper bound")
    return lo, hi


def _pool(text: Optional[str]):
    """None (theorem default), a value list, or explicit tuples separated by ';'."""
    if text is None:
        return None
    if ";" in text:
        return [tuple(_fractions(chunk)) for chunk in text.split(";") if chunk.strip()]
    return list(parse_pool(text))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padic-hyper", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="sweep registered congruences over primes and parameters")
    v.add_argument("--theorem", required=True, help="theorem id, or 'all'")
    v.add_argument("--primes", default="3:97", help="inclusive prime range lo:hi (default 3:97)")
    v.add_argument(
        "--params",
        default=None,
        help="pool: 'default', 'dens:2,3,4', a comma list, or tuples 'a,b;c,d'",
    )
    v.add_argument("--z-samples", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--strength", type=int, choices=(2, 3), default=None)
    v.add_argument("--no-timing", action="store_true", help="zero all durations for byte-identical output")

    e = sub.add_parser("eval", help="evaluate one truncated series or one Gamma_p value")
    e.add_argument("--series", help="shape such as 2F1 or 3F2")
    e.add_argument("--upper", default="")
    e.add_argument("--lower", default="")
    e.add_argument("--z")
    e.add_argument("--trunc", default="p-1", help="truncation index n, or 'p-1'")
    e.add_argument("--gamma", action="store_true")
    e.add_argument("--alpha")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--prec", type=int, choices=(1, 2, 3), default=2)

    sub.add_parser("list", help="list registered theorems")
    return parser


def _select(theorem: str, strength: Optional[int]) -> list[str]:
    if theorem == "all":
        ids = [t.id for t in list_theorems()]
        if strength is not None:
            ids = [i for i in ids if lookup(i).modulus_exp == strength]
        return ids
    try:
        st = lookup(theorem)
    except UnknownTheorem as exc:
        raise UsageError(str(exc)) from None
    if strength is None or st.modulus_exp == strength:
        return [st.id]
    if st.id == "eq-1.3-ahlgren-ono" and strength == 3:
        return ["eq-1.3-kilbourn"]
    if st.id == "eq-1.3-kilbourn" and strength == 2:
        return ["eq-1.3-ahlgren-ono"]
    raise UsageError(f"{st.id} is a congruence modulo p^{st.modulus_exp}, not p^{strength}")


def cmd_verify(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    primes = _prime_range(args.primes)
    if args.z_samples < 0 or args.jobs < 1:
        raise UsageError("--z-samples must be >= 0 and --jobs >= 1")
    try:
        pool = _pool(args.params)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --params: {exc}") from None
    ids = _select(args.theorem, args.strength)
    reports = [
        sweep(tid, primes, pool=pool, z_samples=args.z_samples, seed=args.seed, jobs=args.jobs)
        for tid in ids
    ]
    timing = not args.no_timing
    if args.format == "json":
        out.write(render_json(reports, single=args.theorem != "all", timing=timing))
    elif args.format == "csv":
        out.write(render_csv(reports, timing=timing))
    else:
        out.write(render_text(reports, timing=timing))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _series_shape(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)F(\d+)", text.strip())
    if not m:
        raise UsageError(f"--series expects a shape such as 2F1, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_eval(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    ctx = context(args.p)
    if args.gamma:
        if args.alpha is None:
            raise UsageError("--gamma needs --alpha")
        out.write(f"{gamma_int(as_rational(args.alpha), ctx.p, args.prec)}\n")
        return EXIT_OK
    if not args.series or args.z is None:
        raise UsageError("eval needs either --gamma or --series with --z")
    n_up, n_low = _series_shape(args.series)
    try:
        upper, lower, z = _fractions(args.upper), _fractions(args.lower), as_rational(args.z)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad fraction: {exc}") from None
    if len(upper) != n_up or len(lower) != n_low:
        raise UsageError(f"{args.series} takes {n_up} upper and {n_low} lower parameters")
    trunc = args.trunc.strip()
    if trunc == "p-1":
        n = ctx.p - 1
    elif trunc.isdigit():
        n = int(trunc)
    else:
        raise UsageError("--trunc expects a nonnegative integer or 'p-1'")
    value = hyper_sum(upper, lower, z, n, ctx.p, args.prec)
    if not value.exact_zero and value.valuation < 0:
        out.write(f"{value.unit % ctx.p**value.precision} valuation={value.valuation}\n")
    else:
        out.write(f"{value.to_residue(args.prec)}\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_values(raw))
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "eval":
            return cmd_eval(args)
        for info in list_theorems():
            z = " z" if info.uses_z else ""
            print(f"{info.id:36s} arity={info.arity} {info.mode} mod p^{info.modulus_exp}{z}  {info.anchor}")
        return EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PadicError as exc:
        print(f"{exc.kind}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

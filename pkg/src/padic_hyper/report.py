"""Serializable sweep reports: per-case records, JSON documents and CSV rows."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Optional, Sequence

from .registry import CaseResult, SweepReport

CSV_COLUMNS = (
    "theorem",
    "prime_lo",
    "prime_hi",
    "cases",
    "holds",
    "condition_not_met",
    "fails",
    "errors",
    "duration_ms",
)


@dataclass(frozen=True)
class ReportRecord:
    """One failing or erroring case in wire form (all numbers as decimal strings)."""

    theorem: str
    p: int
    params: tuple[str, ...]
    z: Optional[str]
    verdict: str
    detail: str
    lhs: Optional[str]
    rhs: Optional[str]
    modulus: str
    duration_ms: int

    @staticmethod
    def from_case(case: CaseResult, timing: bool = True) -> "ReportRecord":
        return ReportRecord(
            theorem=case.theorem,
            p=case.p,
            params=tuple(str(x) for x in case.params),
            z=None if case.z is None else str(case.z),
            verdict=case.verdict.value,
            detail=case.detail,
            lhs=case.lhs,
            rhs=case.rhs,
            modulus=str(case.modulus),
            duration_ms=int(round(case.duration_ms)) if timing else 0,
        )

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["params"] = list(self.params)
        return out

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "ReportRecord":
        params = tuple(str(Fraction(x)) for x in data["params"])
        return ReportRecord(
            theorem=data["theorem"],
            p=int(data["p"]),
            params=params,
            z=data.get("z"),
            verdict=data["verdict"],
            detail=data.get("detail", ""),
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            modulus=str(data["modulus"]),
            duration_ms=int(data["duration_ms"]),
        )

    def render(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def parse(text: str) -> "ReportRecord":
        return ReportRecord.from_dict(json.loads(text))


def report_dict(rep: SweepReport, timing: bool = True) -> dict[str, Any]:
    return {
        "theorem": rep.theorem,
        "prime_range": list(rep.prime_range),
        "pool": rep.pool,
        "cases": rep.cases,
        "holds": rep.holds,
        "condition_not_met": rep.condition_not_met,
        "branches": dict(sorted(rep.branches.items())),
        "fails": [ReportRecord.from_case(c, timing).to_dict() for c in rep.failures],
        "errors": [ReportRecord.from_case(c, timing).to_dict() for c in rep.errors],
        "duration_ms": rep.duration_ms if timing else 0,
    }


def render_json(reports: Sequence[SweepReport], single: bool, timing: bool = True) -> str:
    """One JSON document: a bare report for a single theorem, else ``{"reports": [...]}``."""
    docs = [report_dict(r, timing) for r in reports]
    doc: Any = docs[0] if single and len(docs) == 1 else {"reports": docs}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_csv(reports: Sequence[SweepReport], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.theorem,
                r.prime_range[0],
                r.prime_range[1],
                r.cases,
                r.holds,
                r.condition_not_met,
                len(r.failures),
                len(r.errors),
                r.duration_ms if timing else 0,
            ]
        )
    return buf.getvalue()


def render_text(reports: Sequence[SweepReport], timing: bool = True, limit: int = 10) -> str:
    lines = []
    for r in reports:
        status = "ok" if r.ok else "FAIL"
        took = f" {r.duration_ms}ms" if timing else ""
        lines.append(
            f"{status:4s} {r.theorem} p={r.prime_range[0]}..{r.prime_range[1]} "
            f"cases={r.cases} holds={r.holds} unmet={r.condition_not_met} "
            f"fails={len(r.failures)} errors={len(r.errors)}{took}"
        )
        for c in (r.failures + r.errors)[:limit]:
            params = ",".join(str(x) for x in c.params)
            z = "" if c.z is None else f" z={c.z}"
            lines.append(
                f"     {c.verdict.value} p={c.p} params=({params}){z} "
                f"{c.detail} lhs={c.lhs} rhs={c.rhs} mod={c.modulus}"
            )
    return "\n".join(lines) + "\n"


def load_schema() -> dict[str, Any]:
    """The JSON schema shipped with the package for verify reports."""
    text = resources.files("padic_hyper").joinpath("report.schema.json").read_text()
    return json.loads(text)

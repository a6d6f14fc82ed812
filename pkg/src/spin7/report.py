"""Residual-based verification reports.

Every check in this package reduces to a named residual: the max-abs over
all free components of (left side - right side) of an identity.  An entry
passes iff its residual is at or below its tolerance.  "Not applicable" is
a first-class verdict, used for conditional checks whose hypothesis fails
on the geometry at hand; such entries never count against a report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class CheckEntry:
    check_id: str
    paper_anchor: str
    residual: float
    tolerance: float
    passed: bool | None
    not_applicable: bool = False
    notes: str = ""

    def __post_init__(self):
        if not self.not_applicable:
            if not math.isfinite(self.residual) or self.residual < 0.0:
                raise ValueError(
                    f"entry {self.check_id!r}: residual must be finite and >= 0, "
                    f"got {self.residual!r}"
                )
            if self.passed != (self.residual <= self.tolerance):
                raise ValueError(f"entry {self.check_id!r}: verdict/residual mismatch")

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "paper_anchor": self.paper_anchor,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "not_applicable": self.not_applicable,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckEntry":
        return cls(
            check_id=d["check_id"],
            paper_anchor=d["paper_anchor"],
            residual=d["residual"],
            tolerance=d["tolerance"],
            passed=d["passed"],
            not_applicable=d.get("not_applicable", False),
            notes=d.get("notes", ""),
        )


def entry(check_id: str, anchor: str, residual: float, tol: float, notes: str = "") -> CheckEntry:
    r = float(residual)
    return CheckEntry(check_id, anchor, r, float(tol), r <= tol, False, notes)


def agreement_entry(check_id: str, anchor: str, verdicts: list[bool], tol: float,
                    notes: str = "") -> CheckEntry:
    """Entry asserting that a list of boolean verdicts all agree."""
    agree = len(set(verdicts)) <= 1
    tags = ",".join("pass" if v else "fail" for v in verdicts)
    return entry(check_id, anchor, 0.0 if agree else 1.0, tol,
                 notes=(notes + " " if notes else "") + f"verdicts=[{tags}]")


def na_entry(check_id: str, anchor: str, notes: str = "") -> CheckEntry:
    return CheckEntry(check_id, anchor, 0.0, 0.0, None, True, notes)


@dataclass
class VerificationReport:
    geometry_id: str
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, e: CheckEntry) -> None:
        self.entries.append(e)

    def extend(self, es) -> None:
        self.entries.extend(es)

    @property
    def applicable(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.not_applicable]

    def all_passed(self) -> bool:
        return all(e.passed for e in self.applicable)

    def failed(self) -> list[CheckEntry]:
        return [e for e in self.applicable if not e.passed]

    def max_residual(self) -> float:
        return max((e.residual for e in self.applicable), default=0.0)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "geometry_id": self.geometry_id,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema_version')!r}")
        return cls(d["geometry_id"], [CheckEntry.from_dict(e) for e in d["entries"]])

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def summary_lines(self) -> list[str]:
        lines = []
        for e in self.entries:
            if e.not_applicable:
                verdict = "N/A "
            else:
                verdict = "PASS" if e.passed else "FAIL"
            line = f"{verdict}  {e.check_id:<34} residual={e.residual:.3e} tol={e.tolerance:.1e}"
            if e.notes:
                line += f"  [{e.notes}]"
            lines.append(line)
        n_app = len(self.applicable)
        n_pass = sum(1 for e in self.applicable if e.passed)
        n_na = len(self.entries) - n_app
        lines.append(
            f"{self.geometry_id}: {n_pass}/{n_app} checks passed"
            + (f", {n_na} not applicable" if n_na else "")
        )
        return lines

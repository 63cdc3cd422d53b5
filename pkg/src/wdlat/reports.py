"""Law registry and structured check reports.

Every statement the library can verify on a finite instance is registered
under a stable identifier.  Check functions return Report objects made of
LawResult rows so tests, the CLI and JSON output all consume one shape.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

PASS = "pass"
FAIL = "fail"
# A documented discrepancy: the check fails, the failure is expected and
# recorded, and it does not count against Report.ok().
FINDING = "finding"
# Not evaluated, e.g. a law that needs an operation table the instance
# does not carry.
SKIP = "skip"

_CATALOG: dict[str, str] = {}


def law(law_id: str, description: str) -> str:
    """Register a law identifier with a one line description."""
    if law_id in _CATALOG and _CATALOG[law_id] != description:
        raise ValueError(f"law {law_id!r} registered twice with different text")
    _CATALOG[law_id] = description
    return law_id


def law_catalog() -> dict[str, str]:
    """Mapping of every registered law id to its description."""
    return dict(_CATALOG)


@dataclass(frozen=True)
class LawResult:
    """Outcome of checking a single law on a single instance."""

    law_id: str
    status: str
    witness: tuple | None = None
    note: str = ""

    def as_dict(self) -> dict:
        d: dict = {"law": self.law_id, "status": self.status}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    """Ordered collection of law results for one subject."""

    subject: str
    results: list[LawResult] = field(default_factory=list)

    def add(self, law_id: str, holds: bool, witness: tuple | None = None,
            note: str = "", on_fail: str = FAIL) -> LawResult:
        if law_id not in _CATALOG:
            raise ValueError(f"unregistered law id {law_id!r}")
        status = PASS if holds else on_fail
        result = LawResult(law_id, status, None if holds else witness, note)
        self.results.append(result)
        return result

    def skip(self, law_id: str, note: str) -> LawResult:
        if law_id not in _CATALOG:
            raise ValueError(f"unregistered law id {law_id!r}")
        result = LawResult(law_id, SKIP, None, note)
        self.results.append(result)
        return result

    def extend(self, other: "Report") -> None:
        self.results.extend(other.results)

    def __iter__(self) -> Iterator[LawResult]:
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def __contains__(self, law_id: str) -> bool:
        return any(r.law_id == law_id for r in self.results)

    def __getitem__(self, law_id: str) -> LawResult:
        for r in self.results:
            if r.law_id == law_id:
                return r
        raise KeyError(law_id)

    def ok(self) -> bool:
        """True when no law failed outright.  Findings are tolerated."""
        return all(r.status != FAIL for r in self.results)

    def clean(self) -> bool:
        """True when every law passed, findings included."""
        return all(r.status == PASS for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if r.status == FAIL]

    def findings(self) -> list[LawResult]:
        return [r for r in self.results if r.status == FINDING]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, FINDING: 0, SKIP: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok(),
            "counts": self.counts(),
            "results": [r.as_dict() for r in self.results],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)

    def lines(self) -> list[str]:
        """Plain text rendering, one law per line."""
        out = []
        for r in self.results:
            line = f"{r.status.upper():<8} {r.law_id}"
            if r.witness is not None:
                line += f"  witness={format_witness(r.witness)}"
            if r.note:
                line += f"  [{r.note}]"
            out.append(line)
        return out

    def summary(self) -> str:
        c = self.counts()
        text = f"{self.subject}: {c[PASS]} pass, {c[FAIL]} fail, {c[FINDING]} finding"
        if c[SKIP]:
            text += f", {c[SKIP]} skipped"
        return text


def format_witness(witness: tuple) -> str:
    return "(" + ", ".join(str(w) for w in witness) + ")"

"""Structured results for the verification suites.

A suite produces a SuiteReport holding one CheckRecord per verified identity:
name, reference tag, status, and a witness string when something is nonzero.
Status is one of "pass", "fail", or "expected-nonzero" (for the negative
claims, where a nonzero residue is the asserted outcome and its witness is
recorded).  A report is ok when no record failed; "expected-nonzero" counts
as ok.  Serialization is stable apart from the runtime fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .printer import element_str

SCHEMA = "qsg.report/1"

PASS = "pass"
FAIL = "fail"
EXPECTED_NONZERO = "expected-nonzero"


@dataclass
class CheckRecord:
    name: str
    ref: str
    status: str
    witness: str | None = None
    runtime: float = 0.0

    def as_dict(self, runtimes: bool = True) -> dict:
        out = {"name": self.name, "ref": self.ref, "status": self.status,
               "witness": self.witness}
        if runtimes:
            out["runtime"] = round(self.runtime, 6)
        return out


@dataclass
class SuiteReport:
    suite: str
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, EXPECTED_NONZERO: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def extend(self, other: "SuiteReport"):
        self.records.extend(other.records)
        self.notes.extend(other.notes)

    def as_dict(self, runtimes: bool = True) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "records": [r.as_dict(runtimes) for r in self.records],
            "notes": list(self.notes),
        }

    def to_json(self, runtimes: bool = True) -> str:
        return json.dumps(self.as_dict(runtimes), indent=2)

    def render(self) -> str:
        """Plain-text rendering, one line per check."""
        lines = [f"suite {self.suite}"]
        for r in self.records:
            mark = {PASS: "ok  ", FAIL: "FAIL", EXPECTED_NONZERO: "ok* "}[r.status]
            line = f"  {mark} {r.name} [{r.ref}]"
            if r.witness and r.status != PASS:
                line += f"  witness: {r.witness}"
            lines.append(line)
        for note in self.notes:
            lines.append(f"  note: {note}")
        c = self.counts()
        tail = f"  {c[PASS]} passed, {c[FAIL]} failed"
        if c[EXPECTED_NONZERO]:
            tail += f", {c[EXPECTED_NONZERO]} expected-nonzero"
        lines.append(tail)
        return "\n".join(lines)


class SuiteBuilder:
    """Accumulates timed check records for one suite."""

    def __init__(self, suite: str):
        self.report = SuiteReport(suite)
        self._t0 = time.perf_counter()

    def _push(self, name, ref, status, witness):
        now = time.perf_counter()
        self.report.records.append(
            CheckRecord(name, ref, status, witness, now - self._t0))
        self._t0 = now

    def zero(self, name: str, ref: str, elem, rs) -> bool:
        """Record whether `elem` normalizes to zero under `rs`."""
        nf = rs.normalize(elem)
        ok = not nf.terms
        self._push(name, ref, PASS if ok else FAIL,
                   None if ok else element_str(nf))
        return ok

    def true(self, name: str, ref: str, cond: bool, witness: str | None = None) -> bool:
        self._push(name, ref, PASS if cond else FAIL,
                   None if cond else witness)
        return bool(cond)

    def nonzero(self, name: str, ref: str, elem, rs) -> bool:
        """Negative claim: `elem` must NOT normalize to zero; the witness is kept."""
        nf = rs.normalize(elem)
        ok = bool(nf.terms)
        self._push(name, ref, EXPECTED_NONZERO if ok else FAIL,
                   element_str(nf) if ok else "residue vanished")
        return ok

    def negative(self, name: str, ref: str, is_nonzero: bool, witness: str) -> bool:
        """Negative claim with the nonzero-ness already decided by the caller."""
        self._push(name, ref, EXPECTED_NONZERO if is_nonzero else FAIL, witness)
        return bool(is_nonzero)

    def note(self, text: str):
        self.report.notes.append(text)

    def done(self) -> SuiteReport:
        return self.report

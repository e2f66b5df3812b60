"""Machine-readable check and certificate records.

Certificates serialize to a single canonical JSON document (sorted keys,
compact separators).  The timings block is the only volatile part; everything
else is byte-stable for a fixed configuration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"

STATED = "stated"    # value asserted by the source being verified
DERIVED = "derived"  # value recomputed through an independent route
TRIVIAL = "trivial"  # definitional or degenerate control

INVENTED = "invented"


def jsonable(value):
    """Normalize exact values into stable JSON-friendly structures."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if hasattr(value, "to_lists"):
        return jsonable(value.to_lists())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    expected: object
    actual: object
    provenance: str
    ref: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "expected": jsonable(self.expected),
            "actual": jsonable(self.actual),
            "provenance": self.provenance,
            "paper_ref": self.ref,
        }


def check(name: str, expected, actual, provenance: str, ref: str) -> Check:
    """Build a pass/fail check by comparing normalized values."""
    status = PASS if jsonable(expected) == jsonable(actual) else FAIL
    return Check(name, status, expected, actual, provenance, ref)


def flagged(name: str, expected, actual, provenance: str, ref: str) -> Check:
    """A discrepancy that is reported but does not fail the run."""
    return Check(name, FLAGGED, expected, actual, provenance, ref)


@dataclass
class Certificate:
    suite: str
    tool_version: str
    config: dict
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tool_version": self.tool_version,
            "config": jsonable(self.config),
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
            "status": self.status,
            "timings_ms": jsonable(self.timings_ms),
        }


def canonical_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def strip_volatile(document: dict) -> dict:
    """Certificate content without the timings block, for byte comparisons."""
    return {k: v for k, v in document.items() if k != "timings_ms"}


def render(document: dict) -> str:
    """Human-readable table: one line per check."""
    lines = [f"suite: {document.get('suite', '?')}  status: {document.get('status', '?')}"]
    header = f"{'STATUS':8} {'CHECK':42} EXPECTED vs ACTUAL  [ref]"
    lines.append(header)
    lines.append("-" * len(header))
    for c in document.get("checks", []):
        status = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG"}.get(
            c.get("status", "?"), str(c.get("status", "?")).upper()
        )
        exp = json.dumps(c.get("expected"), sort_keys=True)
        act = json.dumps(c.get("actual"), sort_keys=True)
        lines.append(
            f"{status:8} {c.get('name', '?'):42} {exp} vs {act}  [{c.get('paper_ref', '')}]"
        )
    for note in document.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"

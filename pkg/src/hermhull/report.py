"""Construction reports: per-property verdicts, canonical JSON, schema.

A report's canonical body is deterministic (sorted keys, no timestamps);
wall-clock timings travel in a separate envelope so repeated runs emit
byte-identical bodies.  Field elements inside reports are serialized as
discrete-log exponents with -1 for the zero element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .gf import FieldContext

PASS = "PASS"
FAIL = "FAIL"
PARTIAL = "PARTIAL"

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_STRUCTURAL = "structural"
STATUS_SKIPPED = "skipped"


def elem_to_log(F: FieldContext, x: int) -> int:
    return F.log_of(x)


def vector_to_logs(F: FieldContext, v) -> list[int]:
    return [F.log_of(int(x)) for x in v]


def matrix_to_logs(F: FieldContext, M) -> list[list[int]]:
    return [vector_to_logs(F, row) for row in np.asarray(M)]


def logs_to_vector(F: FieldContext, logs: Sequence[int]) -> np.ndarray:
    out = np.zeros(len(logs), dtype=np.int32)
    for i, e in enumerate(logs):
        out[i] = 0 if e < 0 else F.alpha_pow(e)
    return out


def code_to_json(code) -> dict:
    d = {
        "field": code.field.describe(),
        "n": code.n,
        "k": code.k,
        "generator": matrix_to_logs(code.field, code.gen),
    }
    if code.cached_distance() is not None:
        d["d"] = code.cached_distance()
    return d


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    measured: Any = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.expected is not None:
            out["expected"] = self.expected
        if self.measured is not None:
            out["measured"] = self.measured
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ConstructionReport:
    construction: dict
    field: dict
    code: dict = field(default_factory=dict)
    hull: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    quantum: list[dict] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def check(self, name: str, status: str, expected=None, measured=None, note=""):
        self.checks.append(Check(name, status, expected, measured, note))

    def check_eq(self, name: str, expected, measured, note="") -> bool:
        ok = expected == measured
        self.check(name, STATUS_PASS if ok else STATUS_FAIL, expected, measured, note)
        return ok

    @property
    def verdict(self) -> str:
        if any(c.status == STATUS_FAIL for c in self.checks):
            return FAIL
        if any(c.status == STATUS_SKIPPED for c in self.checks):
            return PARTIAL
        return PASS

    @property
    def first_failure(self) -> Optional[str]:
        for c in self.checks:
            if c.status == STATUS_FAIL:
                return c.name
        return None

    def passed(self) -> bool:
        return self.verdict == PASS

    def to_canonical_dict(self) -> dict:
        body = {
            "schema": "hermhull-report/1",
            "construction": self.construction,
            "field": self.field,
            "code": self.code,
            "hull": self.hull,
            "checks": [c.to_json() for c in self.checks],
            "quantum": self.quantum,
            "verdict": self.verdict,
        }
        if self.first_failure:
            body["first_failure"] = self.first_failure
        return body

    def to_json(self, include_timings: bool = False, indent: Optional[int] = None) -> str:
        body = self.to_canonical_dict()
        if include_timings:
            payload = {"report": body, "timings": self.timings}
        else:
            payload = {"report": body}
        return json.dumps(payload, sort_keys=True, indent=indent,
                          separators=(",", ": ") if indent else (",", ":"))


_CHECK_SCHEMA = {
    "type": "object",
    "required": ["name", "status"],
    "properties": {
        "name": {"type": "string"},
        "status": {"enum": [STATUS_PASS, STATUS_FAIL, STATUS_STRUCTURAL,
                            STATUS_SKIPPED]},
        "expected": {},
        "measured": {},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "hermhull-report/1",
    "type": "object",
    "required": ["report"],
    "properties": {
        "report": {
            "type": "object",
            "required": ["schema", "construction", "field", "code", "hull",
                         "checks", "quantum", "verdict"],
            "properties": {
                "schema": {"const": "hermhull-report/1"},
                "construction": {"type": "object"},
                "field": {
                    "type": "object",
                    "required": ["p", "m", "modulus"],
                    "properties": {
                        "p": {"type": "integer"},
                        "m": {"type": "integer"},
                        "modulus": {"type": "array", "items": {"type": "integer"}},
                    },
                },
                "code": {"type": "object"},
                "hull": {"type": "object"},
                "checks": {"type": "array", "items": _CHECK_SCHEMA},
                "quantum": {"type": "array", "items": {"type": "object"}},
                "verdict": {"enum": [PASS, FAIL, PARTIAL]},
                "first_failure": {"type": "string"},
            },
            "additionalProperties": False,
        },
        "timings": {"type": "object"},
    },
    "additionalProperties": False,
}

"""Machine-readable verification reports.

Every check carries a ``law`` string: a human-readable statement of the
identity being verified, so reports are self-contained.  A witness (the
first violating basis tuple together with its residual) is attached
exactly when a check fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .scalars import Poly, format_scalar


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Poly):
        return format_scalar(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, int):
        return format_scalar(value)
    return value


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "error"
    law: str
    witness: dict | None = None

    def __post_init__(self):
        if (self.status == "fail") != (self.witness is not None):
            raise ValueError("witness must be present exactly when status is 'fail'")

    @property
    def ok(self):
        return self.status == "pass"

    def to_dict(self):
        d = {"name": self.name, "status": self.status, "law": self.law}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        return d


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckResult] = field(default_factory=list)
    runtime_ms: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def has_error(self) -> bool:
        return any(c.status == "error" for c in self.checks)

    def check(self, name: str):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name, ok, law, witness=None):
        self.checks.append(
            CheckResult(name, "pass" if ok else "fail", law, None if ok else witness)
        )

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(
                CheckResult(prefix + c.name, c.status, c.law, c.witness)
            )

    def to_dict(self):
        return {
            "subject": self.subject,
            "passed": self.passed,
            "seed": self.seed,
            "runtime_ms": round(self.runtime_ms, 3),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [f"subject: {self.subject}"]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "error": "ERROR"}[c.status]
            lines.append(f"  [{mark}] {c.name}: {c.law}")
            if c.witness is not None:
                lines.append(f"         witness: {_jsonable(c.witness)}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} ({self.runtime_ms:.1f} ms)")
        return "\n".join(lines)

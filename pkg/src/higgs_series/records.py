"""Verification records and reports emitted by the check functions."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationRecord:
    check: str
    instance: dict
    passed: bool
    detail: str = ""
    seconds: float | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {"check": self.check, "instance": self.instance, "pass": self.passed, "detail": self.detail}

    @classmethod
    def from_json(cls, data: dict) -> VerificationRecord:
        return cls(data["check"], dict(data["instance"]), bool(data["pass"]), data.get("detail", ""))

    def line(self) -> str:
        inst = " ".join(f"{k}={v}" for k, v in self.instance.items())
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"{status}  {self.check:<28} {inst}{tail}"


@dataclass
class VerificationReport:
    records: list[VerificationRecord]
    engine_version: str

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def n_fail(self) -> int:
        return len(self.records) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "engine_version": self.engine_version,
            "summary": {"total": len(self.records), "passed": self.n_pass, "failed": self.n_fail},
            "records": [r.to_json() for r in self.records],
        }
        if timing:
            out["timing"] = [r.seconds for r in self.records]
        return out

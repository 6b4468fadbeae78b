"""Claim reports: per-instance evidence for one universally quantified claim."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

REPORT_VERSION = "report-v1"


@dataclass(frozen=True)
class InstanceRecord:
    input: Any
    expected: Any
    got: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def to_json(self) -> dict:
        return {"input": self.input, "expected": self.expected, "got": self.got,
                "pass": self.passed}


@dataclass
class ClaimReport:
    claim: str
    instances: list[InstanceRecord] = field(default_factory=list)
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def add(self, input, expected, got) -> None:
        self.instances.append(InstanceRecord(input, expected, got))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.instances)

    @property
    def failures(self) -> list[InstanceRecord]:
        return [r for r in self.instances if not r.passed]

    def to_json(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "claim": self.claim,
            "seed": self.seed,
            "params": self.params,
            "instances": [r.to_json() for r in self.instances],
            "pass": self.passed,
        }

    def summary(self) -> str:
        ok = sum(r.passed for r in self.instances)
        return f"{'PASS' if self.passed else 'FAIL'}  {self.claim}  ({ok}/{len(self.instances)})"

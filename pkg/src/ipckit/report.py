"""Verification reports: outcome records for scenario runs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .io import poset_to_obj
from .poset import canonical_code


@dataclass
class Counterexample:
    poset: object
    detail: str

    def to_obj(self):
        return {
            "code": canonical_code(self.poset).decode(),
            "detail": self.detail,
            "poset": poset_to_obj(self.poset),
        }


@dataclass
class VerificationReport:
    scenario: str
    params: dict
    status: str = "pass"              # pass | fail | budget
    instances_checked: int = 0
    counterexamples: list = field(default_factory=list)
    work_units: int = 0

    def to_obj(self):
        return {
            "scenario": self.scenario,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "status": self.status,
            "instances_checked": self.instances_checked,
            "counterexamples": [c.to_obj() for c in self.counterexamples],
            "work_units": self.work_units,
        }

    def to_json(self):
        return json.dumps(self.to_obj(), sort_keys=True, indent=2) + "\n"

    def to_text(self):
        lines = [
            f"scenario: {self.scenario}",
            "params: " + ", ".join(f"{k}={self.params[k]}" for k in sorted(self.params)),
            f"status: {self.status}",
            f"instances checked: {self.instances_checked}",
            f"work units: {self.work_units}",
        ]
        if self.counterexamples:
            lines.append(f"counterexamples ({len(self.counterexamples)}):")
            for c in self.counterexamples:
                lines.append(f"  - {canonical_code(c.poset).decode()}: {c.detail}")
        return "\n".join(lines) + "\n"


def render_report(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown format {fmt!r}")

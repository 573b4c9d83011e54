"""A small result record shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}"

    def __bool__(self) -> bool:
        return self.passed

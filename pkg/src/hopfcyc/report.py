from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Ordered named boolean checks, with at most one witness per failed check."""

    title: str
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def check(self, name: str, passed: bool, witness: Any = None) -> bool:
        if name in self.checks:
            raise KeyError(f"duplicate check {name!r} in report {self.title!r}")
        self.checks[name] = bool(passed)
        if not passed and witness is not None:
            self.witnesses[name] = witness
        return bool(passed)

    def merge(self, other: "Report", prefix: str | None = None) -> None:
        pre = f"{prefix or other.title}/"
        for name, passed in other.checks.items():
            self.check(pre + name, passed, other.witnesses.get(name))
        for k, v in other.data.items():
            self.data[pre + k] = v

    def failures(self) -> list[str]:
        return [n for n, ok in self.checks.items() if not ok]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": dict(self.checks),
            "witnesses": dict(self.witnesses),
            "data": dict(self.data),
        }

    def __str__(self):
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for name, passed in self.checks.items():
            w = self.witnesses.get(name)
            lines.append(f"  [{'ok' if passed else 'FAIL'}] {name}" + (f"  (witness: {w})" if w is not None else ""))
        return "\n".join(lines)

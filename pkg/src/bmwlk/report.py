"""Pass/fail reports shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    params: dict[str, Any]
    passed: bool
    detail: str = ""

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})" if args else self.name


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "", **params) -> bool:
        self.checks.append(Check(name, params, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "info": {k: str(v) for k, v in self.info.items()},
            "checks": [asdict(c) | {"params": {k: str(v) for k, v in c.params.items()}} for c in self.checks],
        }

    def format(self, verbose: bool = True) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)"]
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        for c in self.checks if verbose else self.failures():
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"  {mark} {c.describe()}{extra}")
        return "\n".join(lines)

"""Pass/fail bookkeeping for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    detail: str = ""
    order: int | None = None

    def to_dict(self) -> dict:
        return {"id": self.id, "status": "pass" if self.passed else "fail", "order": self.order, "detail": self.detail}


@dataclass
class Report:
    name: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, id: str, passed: bool, detail: str = "", order: int | None = None) -> bool:
        self.results.append(CheckResult(id, bool(passed), detail, order))
        return bool(passed)

    def extend(self, other: Report) -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def __bool__(self) -> bool:
        return self.passed

    def __len__(self) -> int:
        return len(self.results)

    def __repr__(self) -> str:
        bad = len(self.failures())
        return f"Report({self.name}: {len(self.results) - bad}/{len(self.results)} passed)"

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def failures(results: Iterable[CheckResult]) -> List[CheckResult]:
    return [r for r in results if not r.passed]

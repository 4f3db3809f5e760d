from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Failure:
    n: int
    observed: Any
    expected: Any


@dataclass
class VerificationReport:
    """Outcome of one identity or congruence check.

    ``passed`` is true exactly when ``first_failure`` is None; checks stop
    at the first counterexample.
    """

    name: str
    n_max: int
    first_failure: Failure | None = None
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def __bool__(self) -> bool:
        return self.passed

    def fail(self, n: int, observed, expected) -> VerificationReport:
        if self.first_failure is None:
            self.first_failure = Failure(n, observed, expected)
        return self

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Fold a sub-check into this report, keeping the first failure."""
        self.checked += other.checked
        self.notes.extend(other.notes)
        if self.first_failure is None and other.first_failure is not None:
            f = other.first_failure
            self.first_failure = Failure(f.n, f"{other.name}: {f.observed}", f.expected)
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (n_max={self.n_max}, {self.checked} checks)"
        if self.first_failure is not None:
            f = self.first_failure
            line += f": first failure at n={f.n}, observed {f.observed}, expected {f.expected}"
        return line

    def to_dict(self) -> dict:
        f = self.first_failure
        return {
            "name": self.name,
            "n_max": self.n_max,
            "passed": self.passed,
            "checked": self.checked,
            "first_failure": None
            if f is None
            else {"n": f.n, "observed": _jsonable(f.observed), "expected": _jsonable(f.expected)},
            "notes": list(self.notes),
        }


def _jsonable(x):
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)

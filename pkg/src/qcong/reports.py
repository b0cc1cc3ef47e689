"""Outcome records shared by identity checks and congruence verification."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass
class VerificationReport:
    claim: str
    family: str
    params: dict[str, Any]
    n_checked: int
    outcome: str
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    order: int = 0
    millis: float = 0.0
    reason: str | None = None

    def __post_init__(self):
        if self.outcome == FAIL and not self.counterexamples:
            raise ValueError("a FAIL report needs at least one counterexample")

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

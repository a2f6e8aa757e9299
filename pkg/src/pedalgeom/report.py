"""Verification reports: named residuals checked against one tolerance."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["VerificationReport", "SweepReport"]


@dataclass
class VerificationReport:
    """Named residuals with a shared pass threshold.

    ``residuals`` gate the pass flag; ``recorded`` values are observational
    (sweep metrics, deviations with no expected bound) and never gate.
    """

    name: str
    tolerance: float
    residuals: dict[str, float] = field(default_factory=dict)
    recorded: dict[str, float] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v < self.tolerance for v in self.residuals.values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def worst(self) -> tuple[str, float] | None:
        if not self.residuals:
            return None
        name = max(self.residuals, key=lambda k: self.residuals[k])
        return name, self.residuals[name]


@dataclass
class SweepReport:
    """Per-parameter verification reports plus cross-parameter statistics."""

    reports: list[VerificationReport]
    summary: dict[str, float]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

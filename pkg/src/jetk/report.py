"""Structured verification reports.

A report names the claim being checked, the parameters it was checked at,
a verdict, and the ordered intermediate steps with the exact values they
produced, so a failed check is self-diagnosing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VERIFIED = "verified"
REFUTED = "refuted"
INAPPLICABLE = "inapplicable"

VERDICTS = (VERIFIED, REFUTED, INAPPLICABLE)


@dataclass(frozen=True)
class Step:
    description: str
    values: dict


@dataclass
class Report:
    claim: str
    params: dict
    verdict: str
    steps: list = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def add_step(self, description: str, **values) -> None:
        self.steps.append(Step(description, values))

    def step_values(self, fragment: str) -> dict:
        """Values of the first step whose description contains fragment."""
        for step in self.steps:
            if fragment in step.description:
                return step.values
        raise KeyError(f"no step matching {fragment!r}")

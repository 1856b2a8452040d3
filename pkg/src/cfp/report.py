"""Check reports: the common result type of every hypothesis check."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Verdict(enum.Enum):
    PASS_SAMPLED = "PassSampled"
    FAIL = "Fail"
    VACUOUS = "Vacuous"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    """One concrete violation: the inputs plus both sides of the inequality."""

    inputs: tuple
    lhs: float
    rhs: float
    index: int = -1
    note: str = ""


@dataclass
class CheckReport:
    """Outcome of a sampled hypothesis check.

    A PASS_SAMPLED verdict never claims proof: it records only that no
    violation was found among `samples_tested` tuples.  FAIL always carries
    at least one witness.  VACUOUS means no tuple satisfied the premise.
    """

    hypothesis: str
    verdict: Verdict
    samples_tested: int
    witnesses: list[Witness] = field(default_factory=list)
    slack: float = 0.0
    note: str = ""
    series: dict[str, list[float]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def summary(self) -> str:
        s = f"{self.hypothesis}: {self.verdict} ({self.samples_tested} samples tested"
        if self.witnesses:
            s += f", {len(self.witnesses)} violations"
        s += ")"
        if self.note:
            s += f" [{self.note}]"
        return s


def finish_report(
    hypothesis: str,
    samples_tested: int,
    witnesses: list[Witness],
    slack: float,
    note: str = "",
) -> CheckReport:
    """Assemble a report, deriving the verdict from witnesses and sample count."""
    if witnesses:
        verdict = Verdict.FAIL
    elif samples_tested == 0:
        verdict = Verdict.VACUOUS
    else:
        verdict = Verdict.PASS_SAMPLED
    return CheckReport(hypothesis, verdict, samples_tested, witnesses, slack, note)

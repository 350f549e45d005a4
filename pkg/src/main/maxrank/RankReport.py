from dataclasses import dataclass, field
from enum import Enum


@dataclass
class RankReport:
    """
    Outcome of a randomized maximal-rank check.

    Semicontinuity only works one way: a trial that reaches the expected rank
    proves the generic map has maximal rank, while a trial that falls short proves
    nothing about general points.
    """

    class Verdict(str, Enum):
        CERTIFIED = "certified"
        REFUTED = "refuted-at-sample"
        ERROR = "error"

    label: str
    space_dim: int
    target_dim: int
    achieved: list[int] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def expected(self) -> int:
        return min(self.space_dim, self.target_dim)

    @property
    def verdict(self) -> "RankReport.Verdict":
        if any(rank > self.expected for rank in self.achieved):
            return self.Verdict.ERROR
        if any(rank == self.expected for rank in self.achieved):
            return self.Verdict.CERTIFIED
        return self.Verdict.REFUTED

    @property
    def certified(self) -> bool:
        return self.verdict == self.Verdict.CERTIFIED

    @property
    def note(self) -> str:
        if self.verdict == self.Verdict.REFUTED:
            return (f"No sample reached rank {self.expected} in {len(self.achieved)} trials. "
                    f"This is not a disproof; retry with another prime or seed.")
        if self.verdict == self.Verdict.ERROR:
            return f"A trial rank exceeded min({self.space_dim}, {self.target_dim}); the matrices are inconsistent."
        return ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": self.params,
            "space_dim": self.space_dim,
            "target_dim": self.target_dim,
            "expected": self.expected,
            "achieved": list(self.achieved),
            "verdict": self.verdict.value,
            "note": self.note,
        }

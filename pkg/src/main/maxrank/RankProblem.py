import logging
from abc import ABC, abstractmethod

import numpy as np

import ffla
from maxrank.RankReport import RankReport
from maxrank.TrialConfig import TrialConfig


class RankProblem(ABC):
    """
    Abstract maximal-rank statement checked at random points.

    A subclass knows the dimensions of the source and target spaces and how to
    build one sampled matrix; this class runs the trials and collects the report.
    Trials stop at the first sample that reaches the expected rank, since one such
    sample already certifies the generic statement.
    """

    def __init__(self, cfg: TrialConfig | None = None):
        self.cfg = cfg or TrialConfig()

    @classmethod
    @abstractmethod
    def get_supported_names(cls) -> list[str]:
        pass

    @abstractmethod
    def space_dim(self) -> int:
        pass

    @abstractmethod
    def target_dim(self) -> int:
        pass

    @abstractmethod
    def trial_rank(self, rng: np.random.Generator) -> int:
        """Rank of the map at one random sample drawn from rng."""
        pass

    @abstractmethod
    def params(self) -> dict:
        pass

    def label(self) -> str:
        args = ", ".join(f"{key}={value}" for key, value in self.params().items())
        return f"{self.get_supported_names()[0]}({args})"

    def expected(self) -> int:
        return min(self.space_dim(), self.target_dim())

    def run(self) -> RankReport:
        report = RankReport(
            label=self.label(),
            space_dim=self.space_dim(),
            target_dim=self.target_dim(),
            params=self.params(),
        )
        for trial in range(self.cfg.trials):
            rank = self.trial_rank(ffla.trial_rng(self.cfg.master_seed, trial))
            report.achieved.append(rank)
            logging.debug(f"{report.label} trial {trial}: rank {rank} of {report.expected}")
            if rank >= report.expected:
                break

        if report.verdict == RankReport.Verdict.ERROR:
            logging.error(f"{report.label}: {report.note}")
        else:
            logging.info(f"{report.label}: {report.verdict.value} (achieved {report.achieved}, expected {report.expected})")
        return report

import logging

import numpy as np

import exactdims
import ffla
import sections
from maxrank.RankProblem import RankProblem
from maxrank.TrialConfig import TrialConfig


class TauRankProblem(RankProblem):
    """
    τ_ℓ: H^0(T(ℓ)) -> ⊕_{i≤q} T(ℓ)|_{P_i} ⊕ B, where t(n,ℓ) = n·q + r and B is an
    r-dimensional quotient of the fiber at one more point. The map is square.

    The statement holds for every quotient B; each trial samples
    cfg.quotient_samples of them and keeps the smallest rank.
    """

    def __init__(self, n: int, ell: int, cfg: TrialConfig | None = None):
        super().__init__(cfg)
        if n < 1 or ell < -1:
            raise ValueError(f"τ needs n >= 1 and ℓ >= -1, got n={n}, ℓ={ell}")
        self.n = n
        self.ell = ell
        self.split = exactdims.qr_split(n, ell)

    @classmethod
    def get_supported_names(cls) -> list[str]:
        return ["tau"]

    def space_dim(self) -> int:
        return self.split.t

    def target_dim(self) -> int:
        return self.split.reconstruct(self.n)

    def params(self) -> dict:
        return {"n": self.n, "l": self.ell, "q": self.split.q, "r": self.split.r}

    def trial_rank(self, rng: np.random.Generator) -> int:
        q, r = self.split.q, self.split.r
        points = ffla.random_points(self.n, q + 1, rng, self.cfg.prime)
        if r == 0:
            return sections.eval_tangent(self.n, self.ell, points[:q], prime=self.cfg.prime).rank()

        full = sections.eval_tangent(self.n, self.ell, points, prime=self.cfg.prime)
        ranks = []
        for _ in range(self.cfg.quotient_samples):
            quotient = ffla.random_surjection(self.n, r, rng, self.cfg.prime)
            ranks.append(sections.apply_quotient(full, q, quotient).rank())
        if len(set(ranks)) > 1:
            logging.debug(f"τ(n={self.n}, ℓ={self.ell}) ranks over sampled quotients: {ranks}")
        return min(ranks)

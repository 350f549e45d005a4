from math import comb

import numpy as np

import exactdims
import ffla
import sections
from maxrank.RankProblem import RankProblem
from maxrank.TrialConfig import TrialConfig
from sections.KoszulBasis import KoszulBasis


class OmegaRankProblem(RankProblem):
    """Restriction H^0(Ω^p(k)) -> ⊕_{i≤a} Ω^p(k)|_{P_i} at a random points of P^n."""

    def __init__(self, n: int, p: int, k: int, a: int, cfg: TrialConfig | None = None):
        super().__init__(cfg)
        if n < 1 or p < 0 or p > n:
            raise ValueError(f"Need n >= 1 and 0 <= p <= n, got n={n}, p={p}")
        if a < 0:
            raise ValueError(f"Point count must be >= 0, got a={a}")
        self.n = n
        self.p = p
        self.k = k
        self.a = a
        self._basis: KoszulBasis | None = None

    @classmethod
    def get_supported_names(cls) -> list[str]:
        return ["omega"]

    @property
    def basis(self) -> KoszulBasis:
        if self._basis is None:
            self._basis = sections.koszul_basis(self.n, self.p, self.k, prime=self.cfg.prime)
        return self._basis

    def space_dim(self) -> int:
        return exactdims.bott(self.n, self.p, self.k, 0)

    def target_dim(self) -> int:
        return comb(self.n, self.p) * self.a

    def params(self) -> dict:
        return {"n": self.n, "p": self.p, "k": self.k, "a": self.a}

    def trial_rank(self, rng: np.random.Generator) -> int:
        points = ffla.random_points(self.n, self.a, rng, self.cfg.prime)
        return sections.eval_omega(self.n, self.p, self.k, points, prime=self.cfg.prime, basis=self.basis).rank()

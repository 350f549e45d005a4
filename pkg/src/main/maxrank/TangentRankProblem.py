import numpy as np

import exactdims
import ffla
import sections
from maxrank.RankProblem import RankProblem
from maxrank.TrialConfig import TrialConfig


class TangentRankProblem(RankProblem):
    """σ_{ℓ,a}: H^0(T(ℓ)) -> ⊕_{i≤a} T(ℓ)|_{P_i} at a random points of P^n."""

    def __init__(self, n: int, ell: int, a: int, cfg: TrialConfig | None = None):
        super().__init__(cfg)
        if n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
        if a < 0:
            raise ValueError(f"Point count must be >= 0, got a={a}")
        self.n = n
        self.ell = ell
        self.a = a

    @classmethod
    def get_supported_names(cls) -> list[str]:
        return ["sigma", "tangent"]

    def space_dim(self) -> int:
        return exactdims.t(self.n, self.ell)

    def target_dim(self) -> int:
        return self.n * self.a

    def params(self) -> dict:
        return {"n": self.n, "l": self.ell, "a": self.a}

    def trial_rank(self, rng: np.random.Generator) -> int:
        points = ffla.random_points(self.n, self.a, rng, self.cfg.prime)
        return sections.eval_tangent(self.n, self.ell, points, prime=self.cfg.prime).rank()

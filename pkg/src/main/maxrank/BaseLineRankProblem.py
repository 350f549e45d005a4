import numpy as np

import exactdims
import ffla
import sections
from ffla.FpMatrix import FpMatrix
from maxrank.RankProblem import RankProblem
from maxrank.TrialConfig import TrialConfig


class BaseLineRankProblem(RankProblem):
    """
    The dimension-one start of the induction: on P^1, H^0(O(ℓ+1)^2) restricted to
    o(1,ℓ) points with full fibers and to two more points where only the image in
    O(ℓ+2) = T(ℓ) is kept. Both sides have dimension 2·o(1,ℓ+1).

    The generators of H^0(O(ℓ+1)^2) are listed in the same order by eval_free and
    eval_tangent, so the two row blocks share their columns.
    """

    def __init__(self, ell: int, cfg: TrialConfig | None = None):
        super().__init__(cfg)
        if ell < -1:
            raise ValueError(f"Base statement needs ℓ >= -1, got ℓ={ell}")
        self.ell = ell

    @classmethod
    def get_supported_names(cls) -> list[str]:
        return ["base-n1"]

    def space_dim(self) -> int:
        return 2 * exactdims.o(1, self.ell + 1)

    def target_dim(self) -> int:
        return 2 * exactdims.o(1, self.ell) + 2

    def params(self) -> dict:
        return {"l": self.ell, "z": exactdims.o(1, self.ell), "y": 2}

    def trial_rank(self, rng: np.random.Generator) -> int:
        prime = self.cfg.prime
        full_points = ffla.random_points(1, exactdims.o(1, self.ell), rng, prime)
        line_points = ffla.random_points(1, 2, rng, prime)
        free = sections.eval_free(1, [self.ell + 1, self.ell + 1], full_points, prime=prime)
        tangent = sections.eval_tangent(1, self.ell, line_points, prime=prime)
        stacked = FpMatrix.vstack([free.matrix, tangent.matrix], self.space_dim(), prime)
        return stacked.rank()

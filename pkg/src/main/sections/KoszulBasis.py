from dataclasses import dataclass

from ffla.FpMatrix import FpMatrix
from sections.Monomial import Monomial


@dataclass(frozen=True)
class KoszulBasis:
    """
    A basis of H^0(P^n, Ω^p(k)) inside Λ^p(V) ⊗ S_{k-p}.

    Attributes:
        n: Ambient dimension.
        p: Exterior power.
        k: Twist.
        vectors: One row per basis section, in ambient coordinates.
        ambient: The ambient basis e_S ⊗ m, subset-major then monomial.
    """
    n: int
    p: int
    k: int
    vectors: FpMatrix
    ambient: tuple[tuple[tuple[int, ...], Monomial], ...]

    def __post_init__(self):
        if self.vectors.cols != len(self.ambient):
            raise ValueError(f"{self.vectors.cols} columns for an ambient space of {len(self.ambient)}")

    @property
    def dim(self) -> int:
        return self.vectors.rows

from dataclasses import dataclass

import exactdims
from horacesched.SymbolicBundle import SymbolicBundle
from horacesched.TangentBundle import TangentBundle


@dataclass(frozen=True)
class TangentOnHyperplane(SymbolicBundle):
    """T_{X'}(ℓ) for a hyperplane X' ≅ P^{n-1} of P^n."""
    n: int
    ell: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={self.n}")

    @classmethod
    def get_supported_kinds(cls) -> list[str]:
        return ["tangent-hyperplane"]

    @property
    def on_hyperplane(self) -> bool:
        return True

    def rank(self) -> int:
        return self.n - 1

    def h0(self) -> int:
        return exactdims.t(self.n - 1, self.ell)

    def h1(self) -> int:
        if self.n - 1 == 0:
            return 0
        return exactdims.bott(self.n - 1, self.n - 2, self.ell + self.n, 1)

    def lowered(self) -> TangentBundle:
        return TangentBundle(self.n - 1, self.ell)

    def describe(self) -> str:
        return f"T_{self.n - 1}({self.ell})"

    def to_dict(self) -> dict:
        return {**super().to_dict(), "ell": self.ell, "on_hyperplane": True}

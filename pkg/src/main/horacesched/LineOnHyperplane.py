from dataclasses import dataclass

import exactdims
from horacesched.FreeBundle import FreeBundle
from horacesched.SymbolicBundle import SymbolicBundle


@dataclass(frozen=True)
class LineOnHyperplane(SymbolicBundle):
    """O_{X'}(k) for a hyperplane X' ≅ P^{n-1} of P^n."""
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={self.n}")

    @classmethod
    def get_supported_kinds(cls) -> list[str]:
        return ["line-hyperplane"]

    @property
    def on_hyperplane(self) -> bool:
        return True

    def rank(self) -> int:
        return 1

    def h0(self) -> int:
        return exactdims.o(self.n - 1, self.k)

    def h1(self) -> int:
        if self.n - 1 == 0:
            return 0
        return exactdims.bott(self.n - 1, 0, self.k, 1)

    def lowered(self) -> FreeBundle:
        return FreeBundle(self.n - 1, (self.k,))

    def describe(self) -> str:
        return f"O_{self.n - 1}({self.k})"

    def to_dict(self) -> dict:
        return {**super().to_dict(), "twist": self.k, "on_hyperplane": True}

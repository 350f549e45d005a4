from dataclasses import dataclass

import exactdims
from horacesched.SymbolicBundle import SymbolicBundle


@dataclass(frozen=True)
class TangentBundle(SymbolicBundle):
    """T_{P^n}(ℓ). Its H^1 is that of Ω^{n-1}(ℓ+n+1)."""
    n: int
    ell: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={self.n}")

    @classmethod
    def get_supported_kinds(cls) -> list[str]:
        return ["tangent"]

    def rank(self) -> int:
        return self.n

    def h0(self) -> int:
        return exactdims.t(self.n, self.ell)

    def h1(self) -> int:
        return exactdims.bott(self.n, self.n - 1, self.ell + self.n + 1, 1)

    def describe(self) -> str:
        return f"T_{self.n}({self.ell})"

    def to_dict(self) -> dict:
        return {**super().to_dict(), "ell": self.ell}

from dataclasses import dataclass

import exactdims
from horacesched.SymbolicBundle import SymbolicBundle


@dataclass(frozen=True)
class FreeBundle(SymbolicBundle):
    """⊕ O_{P^n}(k_i)."""
    n: int
    twists: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={self.n}")
        object.__setattr__(self, "twists", tuple(self.twists))

    @classmethod
    def get_supported_kinds(cls) -> list[str]:
        return ["free"]

    def rank(self) -> int:
        return len(self.twists)

    def h0(self) -> int:
        return sum(exactdims.o(self.n, k) for k in self.twists)

    def h1(self) -> int:
        return sum(exactdims.bott(self.n, 0, k, 1) for k in self.twists)

    @property
    def uniform_twist(self) -> int | None:
        """The common twist when all summands agree."""
        return self.twists[0] if self.twists and len(set(self.twists)) == 1 else None

    def restricted(self) -> "FreeBundle":
        """F|_{X'} as a bundle on P^{n-1}."""
        if self.n < 2:
            raise ValueError(f"{self.describe()} has no hyperplane to restrict to")
        return FreeBundle(self.n - 1, self.twists)

    def twisted_down(self) -> "FreeBundle":
        """F(-X') = F(-1)."""
        return FreeBundle(self.n, tuple(k - 1 for k in self.twists))

    def describe(self) -> str:
        if not self.twists:
            return "0"
        if self.uniform_twist is not None:
            power = f"^{self.rank()}" if self.rank() > 1 else ""
            return f"O{power}_{self.n}({self.uniform_twist})"
        return "+".join(f"O_{self.n}({k})" for k in self.twists)

    def to_dict(self) -> dict:
        return {**super().to_dict(), "twists": list(self.twists)}

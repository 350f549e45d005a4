from abc import ABC, abstractmethod


class SymbolicBundle(ABC):
    """
    A vector bundle on P^n, or on a hyperplane X' of it, known only through its
    rank and the dimensions of its cohomology.

    `n` is always the dimension of the ambient P^n; bundles living on X' say so
    through `on_hyperplane`.
    """
    n: int

    @classmethod
    @abstractmethod
    def get_supported_kinds(cls) -> list[str]:
        pass

    @abstractmethod
    def rank(self) -> int:
        pass

    @abstractmethod
    def h0(self) -> int:
        pass

    @abstractmethod
    def h1(self) -> int:
        pass

    @abstractmethod
    def describe(self) -> str:
        pass

    @property
    def on_hyperplane(self) -> bool:
        return False

    @property
    def kind(self) -> str:
        return self.get_supported_kinds()[0]

    def lowered(self) -> "SymbolicBundle":
        """The same bundle seen on X' = P^{n-1} as its own projective space."""
        raise ValueError(f"{self.describe()} does not live on a hyperplane")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "label": self.describe(),
            "rank": self.rank(),
            "h0": self.h0(),
            "h1": self.h1(),
        }

    def __str__(self) -> str:
        return self.describe()

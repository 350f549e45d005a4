from dataclasses import dataclass


@dataclass(frozen=True)
class ProjectivePoint:
    """
    A point of P^n over F_p, stored as its canonical representative:
    the first nonzero homogeneous coordinate equals 1.
    """
    n: int
    coords: tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(self.coords) != self.n + 1:
            raise ValueError(f"Point of P^{self.n} needs {self.n + 1} coordinates, got {len(self.coords)}")
        if any(c < 0 or c >= self.p for c in self.coords):
            raise ValueError(f"Coordinates must be residues mod {self.p}: {self.coords}")
        if all(c == 0 for c in self.coords):
            raise ValueError("All coordinates are zero")
        if self.coords[self.pivot] != 1:
            raise ValueError(f"First nonzero coordinate must be 1: {self.coords}")

    @classmethod
    def normalized(cls, coords, p: int) -> "ProjectivePoint":
        """Canonical representative of the homogeneous vector `coords`."""
        values = [int(c) % p for c in coords]
        first = next((c for c in values if c != 0), 0)
        if first == 0:
            raise ValueError("All coordinates are zero")
        inv = pow(first, p - 2, p)
        return cls(n=len(values) - 1, coords=tuple(c * inv % p for c in values), p=p)

    @property
    def pivot(self) -> int:
        """Index of the first nonzero coordinate."""
        return next(i for i, c in enumerate(self.coords) if c != 0)

from dataclasses import dataclass


@dataclass(frozen=True)
class QRSplit:
    """Euclidean division of t = h^0(T(ℓ)) by the rank n: t = n·q + r."""
    t: int
    q: int
    r: int

    def reconstruct(self, n: int) -> int:
        return n * self.q + self.r

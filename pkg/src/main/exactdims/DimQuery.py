from dataclasses import dataclass


@dataclass(frozen=True)
class DimQuery:
    """
    A cohomology dimension request h^q(P^n, Ω^p(k)).

    Attributes:
        n: Ambient projective dimension (>= 1).
        p: Exterior power index, 0..n.
        k: Twist.
        q: Cohomology degree, 0..n.
    """
    n: int
    p: int
    k: int
    q: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={self.n}")
        if not 0 <= self.p <= self.n:
            raise ValueError(f"Exterior power p={self.p} outside 0..{self.n}")
        if not 0 <= self.q <= self.n:
            raise ValueError(f"Cohomology degree q={self.q} outside 0..{self.n}")

from dataclasses import dataclass


@dataclass(frozen=True)
class Theorem1Prediction:
    """
    Predicted last two Betti entries of the ideal of a general points in P^n.

    Attributes:
        n: Ambient dimension.
        a: Number of points.
        d: Smallest degree with a nonzero form vanishing on the points.
        h: h^0(Ω^{n-1}(d+n-1)).
        a_nm2: Predicted a_{n-2} = max(0, n·a - h).
        b_nm1: Predicted b_{n-1} = max(0, h - n·a).
    """
    n: int
    a: int
    d: int
    h: int
    a_nm2: int
    b_nm1: int

    def __post_init__(self):
        if self.a_nm2 < 0 or self.b_nm1 < 0:
            raise ValueError("Predicted Betti numbers must be non-negative")
        if self.a_nm2 * self.b_nm1 != 0:
            raise ValueError("At most one of a_{n-2}, b_{n-1} may be nonzero")

from dataclasses import dataclass, asdict

from horacesched.Statement import Statement


@dataclass(frozen=True)
class LemRBParams:
    """Parameters of the RB -> (R, RB) step on an elementary transformation F -> F'."""
    t: int
    y_prime: int
    delta: int
    zeta: int
    beta_prime: int
    alpha_prime: int
    z_prime: int
    r: int
    r_prime: int

    @classmethod
    def compute(cls, s: Statement) -> "LemRBParams":
        """
        Raises:
            ValueError: If s is not an RB statement, or if the points left off the
                hyperplane (t or z') would be negative.
        """
        if s.kind != "RB":
            raise ValueError(f"Expected an RB statement, got {s}")
        r = s.F.rank()
        r_prime = s.other.rank()
        if r_prime == 0:
            raise ValueError(f"{s.other} has rank 0")

        t = s.other.h0() - r_prime * s.y - s.alpha - s.b_of_beta
        if t < 0:
            raise ValueError(f"Hyperplane capacity exceeded in {s}: t={t}")
        y_prime, delta = divmod(t, r_prime)
        zeta = 1 if delta != 0 else 0
        beta_prime = zeta * (r - delta)
        alpha_prime = s.beta - r_prime if s.beta != 0 else 0
        z_prime = s.z - y_prime - zeta
        if z_prime < 0:
            raise ValueError(f"Not enough points off the hyperplane in {s}: z'={z_prime}")

        return cls(t, y_prime, delta, zeta, beta_prime, alpha_prime, z_prime, r, r_prime)

    def to_dict(self) -> dict:
        return asdict(self)

from dataclasses import dataclass, asdict

import exactdims


@dataclass(frozen=True)
class CaseIVParams:
    """
    Bookkeeping of the last range of MB(O^{n+1}_n(ℓ+1), T_n(ℓ), z, y; a),
    o_n(ℓ) < z < o_n(ℓ-1) + o_{n-1}(ℓ+1).

    d points are moved onto the hyperplane so that z - d = o_n(ℓ-1) points stay
    for the residual statement. `d_displayed` is the competing reading z - o_n(ℓ).
    """
    n: int
    ell: int
    alpha: int
    d: int
    d_displayed: int
    y_prime: int
    a_prime: int
    e: int
    f: int
    g: int
    delta_d: int

    @classmethod
    def compute(cls, n: int, ell: int, z: int, y: int, a: int) -> "CaseIVParams":
        if n < 2:
            raise ValueError(f"The fourth range needs n >= 2, got n={n}")
        alpha = 1 if a != 0 else 0
        d = z - exactdims.o(n, ell - 1)
        d_displayed = z - exactdims.o(n, ell)
        y_prime = exactdims.o(n - 1, ell + 1) - d - alpha
        if y_prime < 0:
            raise ValueError(f"Negative hyperplane point count y'={y_prime} for z={z}, a={a}")
        a_prime = a - 1 if a > 1 else 0
        e = n * exactdims.o(n - 1, ell + 1) - d * n - (n - 1) * y_prime - a_prime
        if e < 0:
            raise ValueError(f"Negative remainder e={e} for z={z}, y={y}, a={a}")
        f, g = divmod(e, n - 1)
        delta_d = n - g if g != 0 else 0
        return cls(n, ell, alpha, d, d_displayed, y_prime, a_prime, e, f, g, delta_d)

    def to_dict(self) -> dict:
        return asdict(self)

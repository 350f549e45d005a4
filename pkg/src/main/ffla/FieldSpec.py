from dataclasses import dataclass

from sympy import isprime

DEFAULT_PRIME = 2147483647


@dataclass(frozen=True)
class FieldSpec:
    """
    The prime field F_p used for all exact linear algebra.

    The modulus must be a prime in [2^16, 2^31). The lower bound keeps random points
    general with overwhelming probability; the upper bound keeps every product of two
    residues inside a signed 64-bit integer.
    """
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 2 ** 16:
            raise ValueError(f"Modulus {self.p} is too small, need p >= 2^16")
        if self.p >= 2 ** 31:
            raise ValueError(f"Modulus {self.p} is too large, need p < 2^31")
        if not isprime(self.p):
            raise ValueError(f"Modulus {self.p} is not prime")

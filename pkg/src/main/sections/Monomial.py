from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x_0^{e_0}···x_n^{e_n} of the coordinate ring S = k[x_0, ..., x_n]."""
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"Exponents must be non-negative: {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents) - 1

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def times(self, i: int) -> "Monomial":
        """x_i · self."""
        exps = list(self.exponents)
        exps[i] += 1
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors) if factors else "1"

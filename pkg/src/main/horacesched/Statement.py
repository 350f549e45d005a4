from dataclasses import dataclass
from typing import Optional

from horacesched.Condition import Condition
from horacesched.FreeBundle import FreeBundle
from horacesched.LineOnHyperplane import LineOnHyperplane
from horacesched.SymbolicBundle import SymbolicBundle
from horacesched.TangentBundle import TangentBundle
from horacesched.TangentOnHyperplane import TangentOnHyperplane


@dataclass(frozen=True)
class Statement:
    """
    A maximal-rank statement of the induction.

    R(F; a):                  F at z general points plus a points with arbitrary quotients.
    RB(F, F', z, y; α, β):    z points of X, y points of X' seen through F -> F', a quotient of
                              dimension α of F'_T and a quotient of dimension β of F_U.
    MB(F, G, z, y; a):        F at z points, its quotient G at y points, plus an a-dimensional
                              quotient of G at one more point.

    `other` is F' for RB and G for MB.
    """
    kind: str
    F: SymbolicBundle
    other: Optional[SymbolicBundle] = None
    z: int = 0
    y: int = 0
    alpha: int = 0
    beta: int = 0
    a: int = 0

    def __post_init__(self):
        if self.kind not in ("R", "RB", "MB"):
            raise ValueError(f"Unknown statement kind {self.kind}")
        if self.kind != "R" and self.other is None:
            raise ValueError(f"{self.kind} statement needs a second bundle")

    @classmethod
    def r(cls, F: SymbolicBundle, a: int = 0) -> "Statement":
        return cls("R", F, a=a)

    @classmethod
    def rb(cls, F: SymbolicBundle, F_prime: SymbolicBundle, z: int, y: int, alpha: int, beta: int) -> "Statement":
        return cls("RB", F, F_prime, z=z, y=y, alpha=alpha, beta=beta)

    @classmethod
    def mb(cls, F: SymbolicBundle, G: SymbolicBundle, z: int, y: int, a: int) -> "Statement":
        return cls("MB", F, G, z=z, y=y, a=a)

    @property
    def b_of_beta(self) -> int:
        """rank(F') if β ≠ 0, else 0."""
        return self.other.rank() if self.beta != 0 else 0

    def conditions(self) -> list[Condition]:
        """Every side condition of the statement, passing or not."""
        if self.kind == "R":
            return [Condition("non-negative", 0, "<=", self.a)]

        r = self.F.rank()
        r_other = self.other.rank()
        if self.kind == "RB":
            result = [
                Condition("non-negative", 0, "<=", min(self.z, self.y, self.alpha, self.beta)),
                Condition("balance", r * self.z + r_other * self.y + self.alpha + self.beta, "==", self.F.h0()),
                Condition("capacity", r_other * self.y + self.alpha + self.b_of_beta, "<=", self.other.h0()),
                Condition("alpha-range", self.alpha, "<=", r_other),
            ]
            if self.beta != 0:
                result.append(Condition("beta-range-low", r_other, "<=", self.beta))
                result.append(Condition("beta-range-high", self.beta, "<", r))
            return result

        return [
            Condition("non-negative", 0, "<=", min(self.z, self.y, self.a)),
            Condition("balance", r * self.z + r_other * self.y + self.a, "==", self.F.h0()),
            Condition("capacity", r_other * (self.z + self.y) + self.a, "<=", self.other.h0()),
            Condition("quotient-rank", self.a, "<", r_other),
        ]

    def violations(self) -> list[Condition]:
        return [c for c in self.conditions() if not c.passed]

    def family(self) -> Optional[tuple[str, int, int]]:
        """
        (family, n, ℓ) when the statement has one of the four shapes of the induction:
            i   RB(T_n(ℓ), O_{n-1}(ℓ+1), z, y; 0, b)
            ii  RB(O^n_n(ℓ+1), T_{n-1}(ℓ), z, y; a, 0)
            iii R(T_n(ℓ); a)
            iv  MB(O^{n+1}_n(ℓ+1), T_n(ℓ), z, y; a)
        """
        F, other = self.F, self.other
        if self.kind == "R":
            if isinstance(F, TangentBundle):
                return "iii", F.n, F.ell
            return None
        if self.kind == "RB":
            if (isinstance(F, TangentBundle) and isinstance(other, LineOnHyperplane)
                    and other.n == F.n and other.k == F.ell + 1 and self.alpha == 0):
                return "i", F.n, F.ell
            if (isinstance(F, FreeBundle) and isinstance(other, TangentOnHyperplane)
                    and other.n == F.n and F.rank() == F.n and F.uniform_twist == other.ell + 1
                    and self.beta == 0):
                return "ii", F.n, other.ell
            return None
        if (isinstance(F, FreeBundle) and isinstance(other, TangentBundle)
                and other.n == F.n and F.rank() == F.n + 1 and F.uniform_twist == other.ell + 1):
            return "iv", F.n, other.ell
        return None

    def describe(self) -> str:
        if self.kind == "R":
            return f"R({self.F}; {self.a})"
        if self.kind == "RB":
            return f"RB({self.F}, {self.other}, {self.z}, {self.y}; {self.alpha}, {self.beta})"
        return f"MB({self.F}, {self.other}, {self.z}, {self.y}; {self.a})"

    def to_dict(self) -> dict:
        result = {"kind": self.kind, "label": self.describe(), "F": self.F.to_dict()}
        if self.kind == "R":
            result["a"] = self.a
        elif self.kind == "RB":
            result.update({"F_prime": self.other.to_dict(), "z": self.z, "y": self.y,
                           "alpha": self.alpha, "beta": self.beta})
        else:
            result.update({"G": self.other.to_dict(), "z": self.z, "y": self.y, "a": self.a})
        return result

    def __str__(self) -> str:
        return self.describe()

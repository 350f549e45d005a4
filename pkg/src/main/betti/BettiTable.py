from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class BettiTable:
    """
    Graded Betti data of the ideal of a points in P^n.

    The p-th syzygy module is S(-d-p-1)^{a_p} ⊕ S(-d-p)^{b_p}. An entry is None
    when it could not be computed (a non-vanishing H^1 obstructs the rank formula).

    Attributes:
        n: Ambient dimension.
        a: Number of points.
        d: Minimal degree of a form through the points.
        rows: For p = 0..n the pair (a_p, b_p).
    """
    n: int
    a: int
    d: int
    rows: tuple[tuple[Optional[int], Optional[int]], ...]

    def __post_init__(self):
        if len(self.rows) != self.n + 1:
            raise ValueError(f"Expected {self.n + 1} rows, got {len(self.rows)}")
        for a_p, b_p in self.rows:
            if (a_p is not None and a_p < 0) or (b_p is not None and b_p < 0):
                raise ValueError(f"Betti numbers must be non-negative: {self.rows}")

    def a_p(self, p: int) -> Optional[int]:
        return self.rows[p][0]

    def b_p(self, p: int) -> Optional[int]:
        return self.rows[p][1]

    def with_entry(self, p: int, which: str, value: Optional[int]) -> "BettiTable":
        """Copy of the table with one entry replaced; `which` is 'a' or 'b'."""
        if which not in ("a", "b"):
            raise ValueError(f"Entry must be 'a' or 'b', got {which}")
        rows = list(self.rows)
        a_p, b_p = rows[p]
        rows[p] = (value, b_p) if which == "a" else (a_p, value)
        return replace(self, rows=tuple(rows))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "d": self.d,
            "rows": [{"p": p, "a_p": a_p, "b_p": b_p} for p, (a_p, b_p) in enumerate(self.rows)],
        }

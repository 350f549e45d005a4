from dataclasses import dataclass


@dataclass(frozen=True)
class Condition:
    """One numeric side condition of a statement: lhs <relation> rhs."""
    name: str
    lhs: int
    relation: str
    rhs: int

    @property
    def passed(self) -> bool:
        if self.relation == "==":
            return self.lhs == self.rhs
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == "<":
            return self.lhs < self.rhs
        raise ValueError(f"Unknown relation {self.relation}")

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "relation": self.relation, "rhs": self.rhs, "pass": self.passed}

    def __str__(self) -> str:
        mark = "ok" if self.passed else "FAILED"
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs} [{mark}]"

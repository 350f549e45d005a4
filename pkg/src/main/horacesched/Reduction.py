from dataclasses import dataclass, field

from horacesched.Statement import Statement


@dataclass
class Reduction:
    """One rule application: the statements that together imply the parent."""
    rule: str
    parent: Statement
    children: list[Statement] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    annotations: list[str] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def warn(self, message: str):
        if message not in self.warnings:
            self.warnings.append(message)

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from horacesched.Condition import Condition
from horacesched.Statement import Statement


@dataclass
class ReductionTrace:
    """
    The reduction tree of one induction root, flattened in depth-first order.

    Node 0 is the root. Every node records the side conditions checked on its
    statement, the rule that discharged it and the indices of its children.
    """

    class Verdict(str, Enum):
        CERTIFIED = "certified"
        VIOLATED = "violated"
        STUCK = "stuck"

    @dataclass
    class Node:
        index: int
        parent: Optional[int]
        level: int
        statement: Statement
        conditions: list[Condition]
        rule: str = "stuck"
        params: dict = field(default_factory=dict)
        warnings: list[str] = field(default_factory=list)
        annotations: list[str] = field(default_factory=list)
        children: list[int] = field(default_factory=list)

        @property
        def violated(self) -> bool:
            return any(not c.passed for c in self.conditions)

        @property
        def is_leaf(self) -> bool:
            return not self.children

        def to_dict(self) -> dict:
            return {
                "index": self.index,
                "parent": self.parent,
                "level": self.level,
                "rule": self.rule,
                "statement": self.statement.to_dict(),
                "conditions": [c.to_dict() for c in self.conditions],
                "params": self.params,
                "warnings": list(self.warnings),
                "annotations": list(self.annotations),
                "children": list(self.children),
            }

    n: int
    ell: int
    nodes: list["ReductionTrace.Node"] = field(default_factory=list)

    @property
    def root(self) -> Statement:
        return self.nodes[0].statement

    @property
    def depth(self) -> int:
        """Number of levels; a lone root has depth 1."""
        return max((node.level for node in self.nodes), default=0)

    @property
    def leaves(self) -> list["ReductionTrace.Node"]:
        return [node for node in self.nodes if node.is_leaf]

    @property
    def warnings(self) -> list[str]:
        seen = []
        for node in self.nodes:
            for message in node.warnings:
                if message not in seen:
                    seen.append(message)
        return seen

    @property
    def verdict(self) -> "ReductionTrace.Verdict":
        if any(node.violated for node in self.nodes):
            return self.Verdict.VIOLATED
        if any(node.rule == "stuck" for node in self.nodes):
            return self.Verdict.STUCK
        return self.Verdict.CERTIFIED

    @property
    def certified(self) -> bool:
        return self.verdict == self.Verdict.CERTIFIED

    def rules_used(self) -> dict[str, int]:
        counts = {}
        for node in self.nodes:
            counts[node.rule] = counts.get(node.rule, 0) + 1
        return dict(sorted(counts.items()))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "verdict": self.verdict.value,
            "depth": self.depth,
            "rules": self.rules_used(),
            "nodes": [node.to_dict() for node in self.nodes],
        }

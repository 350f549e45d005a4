from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class EntryDiff:
    p: int
    which: str
    computed: Optional[int]
    predicted: Optional[int]

    @property
    def equal(self) -> bool:
        return self.computed is not None and self.computed == self.predicted


@dataclass(frozen=True)
class BettiDiff:
    """Entry-by-entry comparison of a computed Betti table with a predicted one."""
    n: int
    a: int
    entries: tuple[EntryDiff, ...] = field(default_factory=tuple)

    @property
    def matches(self) -> bool:
        return all(entry.equal for entry in self.entries)

    @property
    def mismatches(self) -> list[EntryDiff]:
        return [entry for entry in self.entries if not entry.equal]

    def row(self, p: int) -> tuple[EntryDiff, EntryDiff]:
        a_entry = next(e for e in self.entries if e.p == p and e.which == "a")
        b_entry = next(e for e in self.entries if e.p == p and e.which == "b")
        return a_entry, b_entry

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "matches": self.matches,
            "mismatches": [{"p": e.p, "entry": f"{e.which}_p", "computed": e.computed, "predicted": e.predicted}
                           for e in self.mismatches],
        }

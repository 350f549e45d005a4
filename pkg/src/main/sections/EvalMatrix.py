from dataclasses import dataclass

from ffla.FpMatrix import FpMatrix


@dataclass(frozen=True)
class EvalMatrix:
    """
    Matrix of an evaluation (restriction) map on global sections.

    Attributes:
        matrix: The map over F_p; columns are basis sections, rows are fiber coordinates.
        row_labels: One (point index, fiber coordinate index) per row, point-major.
        col_labels: One descriptor per basis section.
    """
    matrix: FpMatrix
    row_labels: tuple[tuple[int, int], ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.row_labels) != self.matrix.rows:
            raise ValueError(f"{len(self.row_labels)} row labels for {self.matrix.rows} rows")
        if len(self.col_labels) != self.matrix.cols:
            raise ValueError(f"{len(self.col_labels)} column labels for {self.matrix.cols} columns")

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def rank(self) -> int:
        return self.matrix.rank()

    def rows_of(self, point_index: int) -> list[int]:
        return [i for i, (point, _) in enumerate(self.row_labels) if point == point_index]

from dataclasses import dataclass

import numpy as np

# Inner dimensions above this are multiplied in chunks so 64-bit sums never wrap.
_LIMB_BITS = 16
_CHUNK = 1 << 15


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """
    Dense matrix over the prime field F_p.

    The entries are held in a read-only int64 array of residues in [0, p).
    Every operation returns a new matrix.
    """
    data: np.ndarray
    p: int

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.int64)
        if data.ndim != 2:
            raise ValueError(f"FpMatrix needs a 2D array, got shape {data.shape}")
        if data.size and (data.min() < 0 or data.max() >= self.p):
            raise ValueError(f"Entries must be residues in [0, {self.p})")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, rows, p: int) -> "FpMatrix":
        """Build from nested lists of integers, reducing mod p."""
        array = np.array(rows, dtype=object)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        reduced = np.vectorize(lambda x: int(x) % p, otypes=[np.int64])(array) if array.size else array
        return cls(np.asarray(reduced, dtype=np.int64).reshape(array.shape), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, size: int, p: int) -> "FpMatrix":
        return cls(np.eye(size, dtype=np.int64), p)

    @classmethod
    def vstack(cls, blocks: list["FpMatrix"], cols: int, p: int) -> "FpMatrix":
        """Stack blocks vertically; `cols` fixes the width when the list is empty."""
        if not blocks:
            return cls.zeros(0, cols, p)
        for block in blocks:
            if block.cols != cols:
                raise ValueError(f"Block has {block.cols} columns, expected {cols}")
        return cls(np.vstack([block.data for block in blocks]), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.data.T, self.p)

    def is_zero(self) -> bool:
        return not np.any(self.data)

    def matmul(self, other: "FpMatrix") -> "FpMatrix":
        """Product over F_p."""
        if self.p != other.p:
            raise ValueError(f"Moduli differ: {self.p} vs {other.p}")
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        return FpMatrix(mulmod(self.data, other.data, self.p), self.p)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return self.matmul(other)

    def rref(self) -> tuple[np.ndarray, list[int]]:
        """
        Reduced row echelon form by Gauss-Jordan elimination.

        The pivot in each column is the first nonzero entry at or below the current
        row; it is scaled to 1 with its inverse mod p.

        Returns:
            (R, pivot_cols): the reduced matrix and its pivot columns (length = rank).
        """
        p = self.p
        m = self.data.copy()
        rows, cols = m.shape
        pivot_cols: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            found = r + int(nz[0])
            if found != r:
                m[[r, found]] = m[[found, r]]
            inv = pow(int(m[r, c]), p - 2, p)
            m[r] = (m[r] * inv) % p
            col = m[:, c].copy()
            col[r] = 0
            others = np.flatnonzero(col)
            if others.size:
                m[others] = (m[others] - np.outer(col[others], m[r]) % p) % p
            pivot_cols.append(c)
            r += 1
        return m, pivot_cols

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        # eliminate along the shorter side
        source = self if self.rows <= self.cols else self.transpose()
        return len(source.rref()[1])

    def kernel_basis(self) -> "FpMatrix":
        """Rows spanning the right kernel {v : self·v = 0}."""
        cols = self.cols
        if self.rows == 0:
            return FpMatrix.identity(cols, self.p)
        reduced, pivot_cols = self.rref()
        pivot_set = set(pivot_cols)
        free_cols = [c for c in range(cols) if c not in pivot_set]
        basis = np.zeros((len(free_cols), cols), dtype=np.int64)
        for i, free in enumerate(free_cols):
            basis[i, free] = 1
            for row, pivot in enumerate(pivot_cols):
                basis[i, pivot] = (-reduced[row, free]) % self.p
        return FpMatrix(basis, self.p)

    def to_list(self) -> list[list[int]]:
        return self.data.tolist()


def mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """
    (a @ b) mod p for int64 residue arrays with p < 2^31.

    b is split into 16-bit limbs and the inner dimension is chunked, so every
    partial sum stays below 2^63.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    result = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    mask = (1 << _LIMB_BITS) - 1
    for start in range(0, a.shape[1], _CHUNK):
        a_part = a[:, start:start + _CHUNK]
        b_part = b[start:start + _CHUNK]
        hi = (a_part @ (b_part >> _LIMB_BITS)) % p
        lo = (a_part @ (b_part & mask)) % p
        result = (result + ((hi << _LIMB_BITS) % p + lo) % p) % p
    return result

"""
Finite Field Linear Algebra (__init__.py)

Exact dense linear algebra over F_p and the seeded sampling the rank checks
are built on. A large prime stands in for an algebraically closed field: a map
that has maximal rank at random points over F_p has maximal rank at general
points over the closure.

Every random draw goes through a numpy Generator; trial i of a run with master
seed s uses the generator seeded with s + i.
"""
import logging

import numpy as np

from ffla.FieldSpec import DEFAULT_PRIME, FieldSpec
from ffla.FpMatrix import FpMatrix, mulmod
from ffla.ProjectivePoint import ProjectivePoint


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Independent generator for one trial of a run."""
    return np.random.default_rng(master_seed + trial_index)


def rank(m: FpMatrix) -> int:
    """Rank over F_p. Empty matrices have rank 0."""
    return m.rank()


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Rows spanning the right kernel of m; there are m.cols - rank(m) of them."""
    return m.kernel_basis()


def random_point(n: int, rng: np.random.Generator, p: int = DEFAULT_PRIME) -> ProjectivePoint:
    """Uniform point of P^n(F_p), drawn as a nonzero vector and normalized."""
    if n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
    while True:
        coords = rng.integers(0, p, size=n + 1, dtype=np.int64)
        if np.any(coords):
            return ProjectivePoint.normalized(coords.tolist(), p)


def random_points(n: int, count: int, rng: np.random.Generator, p: int = DEFAULT_PRIME) -> list[ProjectivePoint]:
    return [random_point(n, rng, p) for _ in range(count)]


def random_matrix(rows: int, cols: int, rng: np.random.Generator, p: int = DEFAULT_PRIME) -> FpMatrix:
    return FpMatrix(rng.integers(0, p, size=(rows, cols), dtype=np.int64), p)


def random_surjection(from_dim: int, to_dim: int, rng: np.random.Generator,
                      p: int = DEFAULT_PRIME) -> FpMatrix:
    """
    Random to_dim × from_dim matrix of full row rank, i.e. a surjection
    F_p^from_dim -> F_p^to_dim.

    Raises:
        ValueError: If not 0 <= to_dim <= from_dim.
    """
    if to_dim < 0 or to_dim > from_dim:
        raise ValueError(f"Need 0 <= to_dim <= from_dim, got to_dim={to_dim}, from_dim={from_dim}")
    tries = 0
    while True:
        tries += 1
        candidate = random_matrix(to_dim, from_dim, rng, p)
        if candidate.rank() == to_dim:
            if tries > 1:
                logging.debug(f"random_surjection({from_dim}, {to_dim}) needed {tries} draws")
            return candidate


__all__ = [
    "DEFAULT_PRIME",
    "FieldSpec",
    "FpMatrix",
    "ProjectivePoint",
    "kernel_basis",
    "make_rng",
    "mulmod",
    "random_matrix",
    "random_point",
    "random_points",
    "random_surjection",
    "rank",
    "trial_rng",
]

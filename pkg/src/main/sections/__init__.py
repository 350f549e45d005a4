"""
Global Sections and Evaluation Matrices (__init__.py)

Ordered bases of H^0 for sums of line bundles, the twisted tangent bundle and
the twisted bundles of p-forms on P^n, together with the matrices of their
evaluation maps at a list of points.

Conventions:
    - Monomials of a fixed degree are listed in graded-lex order, x_0^k first.
    - Columns are summand-major, then monomial. Rows are point-major, then fiber coordinate.
    - T(ℓ) is presented as O(ℓ+1)^{n+1} modulo the Euler relations. At a point with
      pivot coordinate i the fiber k^{n+1} is projected to k^n by
      v ↦ (v_j - P_j·v_i)_{j≠i}, which kills the Euler line.
    - Ω^p(k) sits inside Λ^p(V) ⊗ O(k-p) as the kernel of the Koszul contraction and
      is evaluated in the ambient coordinates of Λ^p(V).
"""
import logging
from collections import defaultdict
from itertools import combinations, combinations_with_replacement

import numpy as np

import exactdims
from ffla.FieldSpec import DEFAULT_PRIME
from ffla.FpMatrix import FpMatrix, mulmod
from ffla.ProjectivePoint import ProjectivePoint
from sections.EvalMatrix import EvalMatrix
from sections.KoszulBasis import KoszulBasis
from sections.Monomial import Monomial


def monomials(n: int, k: int) -> list[Monomial]:
    """All degree-k monomials in x_0..x_n, graded-lex. Empty for k < 0."""
    if n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
    if k < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(n + 1), k):
        exps = [0] * (n + 1)
        for i in combo:
            exps[i] += 1
        result.append(Monomial(tuple(exps)))
    return result


def _prime_of(points: list[ProjectivePoint], prime: int) -> int:
    if points and any(point.p != points[0].p for point in points):
        raise ValueError("Points live over different fields")
    return points[0].p if points else prime


def _monomial_values(monos: list[Monomial], points: list[ProjectivePoint], p: int) -> np.ndarray:
    """values[a, j] = monos[j](points[a])."""
    values = np.ones((len(points), len(monos)), dtype=np.int64)
    if not monos or not points:
        return values
    exps = np.array([m.exponents for m in monos], dtype=np.int64)
    top = int(exps.max())
    for a, point in enumerate(points):
        row = np.ones(len(monos), dtype=np.int64)
        for i, c in enumerate(point.coords):
            powers = np.array([pow(c, e, p) for e in range(top + 1)], dtype=np.int64)
            row = row * powers[exps[:, i]] % p
        values[a] = row
    return values


def eval_free(n: int, twists: list[int], points: list[ProjectivePoint],
              prime: int = DEFAULT_PRIME) -> EvalMatrix:
    """
    Evaluation of H^0(⊕ O(k_i)) at the points: one row per (point, summand).

    The rank of the matrix is the rank of the evaluation map.
    """
    p = _prime_of(points, prime)
    blocks = [monomials(n, k) for k in twists]
    offsets = np.cumsum([0] + [len(b) for b in blocks])
    cols = int(offsets[-1])
    data = np.zeros((len(points) * len(twists), cols), dtype=np.int64)
    for s, monos in enumerate(blocks):
        values = _monomial_values(monos, points, p)
        for a in range(len(points)):
            data[a * len(twists) + s, offsets[s]:offsets[s + 1]] = values[a]
    row_labels = tuple((a, s) for a in range(len(points)) for s in range(len(twists)))
    col_labels = tuple(f"O({k})[{s}]:{m}" for s, (k, monos) in enumerate(zip(twists, blocks)) for m in monos)
    return EvalMatrix(FpMatrix(data, p), row_labels, col_labels)


def eval_tangent(n: int, ell: int, points: list[ProjectivePoint],
                 prime: int = DEFAULT_PRIME) -> EvalMatrix:
    """
    Matrix of σ: H^0(T(ℓ)) -> ⊕ T(ℓ)|_{P_i}.

    Columns are the generators e_i ⊗ m of H^0(O(ℓ+1)^{n+1}); there are n rows per point.
    The Euler relations map to zero, so the rank equals the rank of σ on H^0(T(ℓ)).

    For ℓ <= -2 the space is zero and the matrix has no columns, except on P^1 where
    T(-2) = O.
    """
    if n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
    p = _prime_of(points, prime)
    if ell <= -2:
        if n == 1 and ell == -2:
            return eval_free(1, [0], points, prime=p)
        row_labels = tuple((a, j) for a in range(len(points)) for j in range(n))
        return EvalMatrix(FpMatrix.zeros(len(points) * n, 0, p), row_labels, ())

    monos = monomials(n, ell + 1)
    size = len(monos)
    values = _monomial_values(monos, points, p)
    data = np.zeros((len(points) * n, (n + 1) * size), dtype=np.int64)
    for a, point in enumerate(points):
        pivot = point.pivot
        fiber = [j for j in range(n + 1) if j != pivot]
        for r, j in enumerate(fiber):
            row = a * n + r
            data[row, j * size:(j + 1) * size] = values[a]
            data[row, pivot * size:(pivot + 1) * size] = (-point.coords[j] * values[a]) % p
    row_labels = tuple((a, j) for a in range(len(points)) for j in range(n))
    col_labels = tuple(f"e{i}*{m}" for i in range(n + 1) for m in monos)
    return EvalMatrix(FpMatrix(data, p), row_labels, col_labels)


def euler_columns(n: int, ell: int, prime: int = DEFAULT_PRIME) -> FpMatrix:
    """
    Coefficients of the Euler map H^0(O(ℓ)) -> H^0(O(ℓ+1)^{n+1}), f ↦ (x_0 f, ..., x_n f),
    in the generator order used by eval_tangent.
    """
    target = monomials(n, ell + 1)
    source = monomials(n, ell)
    index = {m: j for j, m in enumerate(target)}
    data = np.zeros(((n + 1) * len(target), len(source)), dtype=np.int64)
    for c, m in enumerate(source):
        for i in range(n + 1):
            data[i * len(target) + index[m.times(i)], c] = 1
    return FpMatrix(data, prime)


def koszul_basis(n: int, p: int, k: int, prime: int = DEFAULT_PRIME) -> KoszulBasis:
    """
    Basis of H^0(Ω^p(k)) as the kernel of the contraction
    Λ^p V ⊗ S_{k-p} -> Λ^{p-1} V ⊗ S_{k-p+1}, e_S ⊗ m ↦ Σ_{i∈S} sign(i,S)·e_{S∖i} ⊗ x_i m,
    where sign(i,S) = (-1)^(position of i in S).

    The contraction preserves multidegree, so the kernel is computed one
    multidegree block at a time.

    Raises:
        ValueError: If p is outside 0..n.
        RuntimeError: If the kernel dimension disagrees with Bott's formula.
    """
    if p < 0 or p > n:
        raise ValueError(f"Exterior power must be in 0..{n}, got p={p}")
    monos = monomials(n, k - p)
    subsets = list(combinations(range(n + 1), p))
    ambient = tuple((s, m) for s in subsets for m in monos)

    if p == 0 or not ambient:
        vectors = FpMatrix.identity(len(ambient), prime) if p == 0 else FpMatrix.zeros(0, 0, prime)
    else:
        blocks: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for idx, (s, m) in enumerate(ambient):
            key = tuple(e + (1 if i in s else 0) for i, e in enumerate(m.exponents))
            blocks[key].append(idx)

        rows = []
        for sources in blocks.values():
            targets: dict[tuple, int] = {}
            entries = []
            for col, idx in enumerate(sources):
                s, m = ambient[idx]
                for position, i in enumerate(s):
                    rest = s[:position] + s[position + 1:]
                    target = targets.setdefault((rest, m.times(i).exponents), len(targets))
                    entries.append((target, col, -1 if position % 2 else 1))
            local = np.zeros((len(targets), len(sources)), dtype=np.int64)
            for target, col, sign in entries:
                local[target, col] = (local[target, col] + sign) % prime
            for vector in FpMatrix(local, prime).kernel_basis().data:
                full = np.zeros(len(ambient), dtype=np.int64)
                full[sources] = vector
                rows.append(full)
        data = np.array(rows, dtype=np.int64).reshape(len(rows), len(ambient))
        vectors = FpMatrix(data, prime)

    expected = exactdims.bott(n, p, k, 0)
    if vectors.rows != expected:
        raise RuntimeError(f"Koszul kernel for (n={n}, p={p}, k={k}) has dimension {vectors.rows}, Bott gives {expected}")
    logging.debug(f"Koszul basis for Ω^{p}({k}) on P^{n}: {vectors.rows} sections in an ambient space of {len(ambient)}")
    return KoszulBasis(n=n, p=p, k=k, vectors=vectors, ambient=ambient)


def eval_omega(n: int, p: int, k: int, points: list[ProjectivePoint],
               prime: int = DEFAULT_PRIME, basis: KoszulBasis | None = None) -> EvalMatrix:
    """
    Restriction H^0(Ω^p(k)) -> ⊕ Ω^p(k)|_{P_i}, with binom(n+1,p) ambient rows per point.

    A precomputed basis may be passed to avoid recomputing the kernel.
    """
    field = _prime_of(points, prime)
    if basis is None:
        basis = koszul_basis(n, p, k, prime=field)
    subsets = list(combinations(range(n + 1), p))
    monos = monomials(n, k - p)
    width = len(subsets)
    dim = basis.dim
    row_labels = tuple((a, s) for a in range(len(points)) for s in range(width))
    col_labels = tuple(f"omega[{r}]" for r in range(dim))
    if dim == 0 or not points:
        return EvalMatrix(FpMatrix.zeros(len(points) * width, dim, field), row_labels, col_labels)

    # K[r, s, m] contracted with m(P) gives the e_S coordinate of section r at P
    values = _monomial_values(monos, points, field)
    stacked = basis.vectors.data.reshape(dim * width, len(monos))
    product = mulmod(stacked, values.T, field).reshape(dim, width, len(points))
    data = product.transpose(2, 1, 0).reshape(len(points) * width, dim)
    return EvalMatrix(FpMatrix(data, field), row_labels, col_labels)


def apply_quotient(m: EvalMatrix, point_index: int, q: FpMatrix) -> EvalMatrix:
    """
    Replace the fiber rows of one point by q·(those rows).

    Raises:
        ValueError: If the point has no rows, or q does not match its fiber.
    """
    rows = m.rows_of(point_index)
    if not rows:
        raise ValueError(f"Point {point_index} has no rows")
    if rows != list(range(rows[0], rows[0] + len(rows))):
        raise ValueError(f"Rows of point {point_index} are not contiguous")
    if q.cols != len(rows):
        raise ValueError(f"Quotient has {q.cols} columns, point {point_index} has {len(rows)} fiber rows")
    if q.p != m.matrix.p:
        raise ValueError(f"Moduli differ: {q.p} vs {m.matrix.p}")

    first, last = rows[0], rows[-1] + 1
    block = mulmod(q.data, m.matrix.data[first:last], q.p)
    data = np.vstack([m.matrix.data[:first], block, m.matrix.data[last:]])
    labels = m.row_labels[:first] + tuple((point_index, j) for j in range(q.rows)) + m.row_labels[last:]
    return EvalMatrix(FpMatrix(data.reshape(len(labels), m.matrix.cols), q.p), labels, m.col_labels)


__all__ = [
    "EvalMatrix",
    "KoszulBasis",
    "Monomial",
    "apply_quotient",
    "euler_columns",
    "eval_free",
    "eval_omega",
    "eval_tangent",
    "koszul_basis",
    "monomials",
]

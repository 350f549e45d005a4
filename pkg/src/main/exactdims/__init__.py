"""
Exact Dimension Formulas (__init__.py)

Closed-form integer formulas for the cohomology of O(ℓ), T(ℓ) and Ω^p(k) on P^n,
plus the quantities derived from them: the Euclidean split of h^0(T(ℓ)), the
generic minimal degree of a set of points, and the predicted Betti entries.

All arithmetic uses Python integers, so nothing can overflow.
"""
import logging
from math import comb

from exactdims.DimQuery import DimQuery
from exactdims.QRSplit import QRSplit
from exactdims.Theorem1Prediction import Theorem1Prediction


def binom(m: int, k: int) -> int:
    """Binomial coefficient, 0 outside 0 <= k <= m."""
    if k < 0 or k > m:
        return 0
    return comb(m, k)


def o(n: int, ell: int) -> int:
    """h^0(P^n, O(ℓ)). n = 0 is the point P^0."""
    if n < 0:
        raise ValueError(f"Ambient dimension must be >= 0, got n={n}")
    if ell < 0:
        return 0
    return binom(n + ell, n)


def t(n: int, ell: int) -> int:
    """
    h^0(P^n, T(ℓ)), computed from the twisted Euler sequence
    0 -> O(ℓ) -> O(ℓ+1)^{n+1} -> T(ℓ) -> 0.

    For n = 1 the tangent bundle is O(2). T(P^0) = 0.
    """
    if n < 0:
        raise ValueError(f"Ambient dimension must be >= 0, got n={n}")
    if n == 0:
        return 0
    if n == 1:
        return o(1, ell + 2)
    if ell >= -1:
        return (n + 1) * o(n, ell + 1) - o(n, ell)
    return 0


def bott(n: int, p: int, k: int, q: int) -> int:
    """
    h^q(P^n, Ω^p(k)) by Bott's formula.

    Args:
        n: Ambient dimension (>= 1).
        p: Exterior power, 0..n.
        k: Twist.
        q: Cohomology degree, 0..n.

    Returns:
        The dimension as a non-negative integer.
    """
    query = DimQuery(n, p, k, q)
    if query.q == 0:
        if k > p:
            return binom(k - 1, p) * binom(k + n - p, n - p)
        # H^0(O) is the constants
        if k == 0 and p == 0:
            return 1
        return 0
    if query.q < n:
        return 1 if (q == p and k == 0) else 0
    # Serre duality
    return bott(n, n - p, -k, 0)


def qr_split(n: int, ell: int) -> QRSplit:
    """Divide t(n, ℓ) by n."""
    if n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
    total = t(n, ell)
    q, r = divmod(total, n)
    return QRSplit(t=total, q=q, r=r)


def euler_identity_check(n: int, ell: int) -> bool:
    """
    n·o(n,ℓ+1) - t(n-1,ℓ) = t(n,ℓ-1), and t(n,ℓ-1) >= n·o(n,ℓ).

    This is the inequality that forces z >= o(n,ℓ) in every statement of
    type (ii) of the main induction.
    """
    if n < 2 or ell < 0:
        raise ValueError(f"Euler identity needs n >= 2 and ℓ >= 0, got n={n}, ℓ={ell}")
    lhs = n * o(n, ell + 1) - t(n - 1, ell)
    rhs = t(n, ell - 1)
    return lhs == rhs and rhs >= n * o(n, ell)


def d_min(n: int, a: int) -> int:
    """Smallest ℓ with o(n,ℓ) > a: the degree of the first form through a general points."""
    if n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
    if a <= 0:
        raise ValueError(f"Point count must be >= 1, got a={a}")
    ell = 0
    while o(n, ell) <= a:
        ell += 1
    return ell


def known_values(n: int, a: int) -> tuple[int, int]:
    """
    Closed forms of the last row of the resolution.

    Returns:
        (b_n, a_{n-1}) with b_n = max(0, o(n,d-1) - a) and a_{n-1} = a - o(n,d-1).
    """
    d = d_min(n, a)
    return max(0, o(n, d - 1) - a), a - o(n, d - 1)


def theorem1_prediction(n: int, a: int) -> Theorem1Prediction:
    """
    Predicted (a_{n-2}, b_{n-1}) from the maximal rank of
    H^0(Ω^{n-1}(d+n-1)) -> H^0(Ω^{n-1}(d+n-1)|_R).

    Raises:
        ValueError: If n < 2 or a < 1.
        RuntimeError: If the Bott and Euler dimensions of Ω^{n-1}(d+n-1) ≅ T(d-2) disagree.
    """
    if n < 2:
        raise ValueError(f"Prediction needs n >= 2, got n={n}")
    d = d_min(n, a)
    h = bott(n, n - 1, d + n - 1, 0)
    if h != t(n, d - 2):
        raise RuntimeError(f"Bott gives {h} but Euler gives {t(n, d - 2)} for n={n}, d={d}")
    return Theorem1Prediction(
        n=n,
        a=a,
        d=d,
        h=h,
        a_nm2=max(0, n * a - h),
        b_nm1=max(0, h - n * a),
    )


def mrc_prediction(n: int, a: int):
    """
    Betti table predicted by the Minimal Resolution Conjecture.

    For p = 0..n:
        a_p = max(0, binom(n,p+1)·a - h^0(Ω^{p+1}(d+p+1)))
        b_p = max(0, h^0(Ω^p(d+p)) - binom(n,p)·a)

    Raises:
        RuntimeError: If the max formulas disagree with the closed forms of b_n, a_n, a_{n-1}.
    """
    from betti.BettiTable import BettiTable

    d = d_min(n, a)
    rows = []
    for p in range(n + 1):
        if p + 1 <= n:
            a_p = max(0, binom(n, p + 1) * a - bott(n, p + 1, d + p + 1, 0))
        else:
            a_p = 0
        b_p = max(0, bott(n, p, d + p, 0) - binom(n, p) * a)
        rows.append((a_p, b_p))

    b_n, a_nm1 = known_values(n, a)
    if rows[n] != (0, b_n) or b_n != 0:
        raise RuntimeError(f"Last row {rows[n]} of the prediction for (n={n}, a={a}) is not zero")
    if n >= 1 and rows[n - 1][0] != a_nm1:
        raise RuntimeError(f"a_(n-1)={rows[n - 1][0]} disagrees with a - o(n,d-1) = {a_nm1}")
    logging.debug(f"MRC prediction for n={n}, a={a}, d={d}: {rows}")
    return BettiTable(n=n, a=a, d=d, rows=tuple(rows))

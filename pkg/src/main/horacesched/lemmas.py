"""
The bookkeeping half of the Horace lemmas: which statements imply which, with
every dimension recomputed from exactdims. Each function either returns the
children of a statement or raises ValueError when the lemma does not apply.
"""
from collections import Counter

import exactdims
from horacesched.Condition import Condition
from horacesched.FreeBundle import FreeBundle
from horacesched.LemRBParams import LemRBParams
from horacesched.LineOnHyperplane import LineOnHyperplane
from horacesched.Statement import Statement
from horacesched.SymbolicBundle import SymbolicBundle
from horacesched.TangentBundle import TangentBundle
from horacesched.TangentOnHyperplane import TangentOnHyperplane


def check_conditions(s: Statement) -> list[Condition]:
    """The failed side conditions of s; empty when the statement is well posed."""
    return s.violations()


def _require_conditions(s: Statement):
    violations = check_conditions(s)
    if violations:
        failed = ", ".join(str(c) for c in violations)
        raise ValueError(f"{s} does not satisfy its side conditions: {failed}")


def elementary_transform(F: SymbolicBundle, F_prime: SymbolicBundle) -> tuple[SymbolicBundle, SymbolicBundle]:
    """
    (E, F'') for a surjection F -> F' supported on the hyperplane X':
    E is its kernel and F'' the kernel of F|X' -> F'.

    Raises:
        ValueError: If the pair is not one of the transformations the induction uses.
    """
    n = F.n
    if isinstance(F, TangentBundle) and isinstance(F_prime, LineOnHyperplane):
        if F_prime.n == n and F_prime.k == F.ell + 1:
            return FreeBundle(n, (F.ell + 1,) * n), TangentOnHyperplane(n, F.ell)

    if isinstance(F, FreeBundle) and isinstance(F_prime, TangentOnHyperplane):
        twist = F_prime.ell + 1
        if F_prime.n == n and F.rank() == n and F.uniform_twist == twist:
            return TangentBundle(n, F_prime.ell - 1), LineOnHyperplane(n, F_prime.ell)

    if isinstance(F, FreeBundle) and isinstance(F_prime, FreeBundle) and F_prime.n == n - 1:
        twist = F_prime.uniform_twist
        if (twist is not None and F_prime.rank() == n
                and Counter(F.twists) == Counter({twist: n, twist - 1: 1})):
            return FreeBundle(n, (twist - 1,) * (n + 1)), LineOnHyperplane(n, twist - 1)

    raise ValueError(f"No elementary transformation of {F} along {F_prime}")


def reduce_rb(s: Statement) -> tuple[LemRBParams, list[Statement]]:
    """
    RB(F, F', z, y; α, β) follows from R(F'; a(α)) and RB(E, F'', z', y'; α', β').

    Raises:
        ValueError: If s is ill posed, z' < 0 or h^1(E) != 0.
        RuntimeError: If the child does not balance.
    """
    if s.kind != "RB":
        raise ValueError(f"Expected an RB statement, got {s}")
    _require_conditions(s)

    E, F_second = elementary_transform(s.F, s.other)
    if E.h1() != 0:
        raise ValueError(f"h^1({E}) = {E.h1()} is not zero")
    params = LemRBParams.compute(s)

    residual = Statement.r(s.other, 1 if s.alpha != 0 else 0)
    child = Statement.rb(E, F_second, params.z_prime, params.y_prime, params.alpha_prime, params.beta_prime)
    balance = next(c for c in child.conditions() if c.name == "balance")
    if not balance.passed:
        raise RuntimeError(f"Unbalanced child {child} of {s}: {balance}")

    return params, [residual, child]


def _twisted_down(bundle: SymbolicBundle) -> SymbolicBundle:
    if isinstance(bundle, FreeBundle):
        return bundle.twisted_down()
    if isinstance(bundle, TangentBundle):
        return TangentBundle(bundle.n, bundle.ell - 1)
    raise ValueError(f"Cannot twist {bundle} down")


def reduce_mb(s: Statement) -> list[Statement]:
    """
    Specializes points of a free bundle F onto the hyperplane X'.

    For RB(F, F', z, y; a, 0): children R(F(-X'); 0) and MB(F|X', F', z', y; a)
    with z' = (h^0(F|X') - rank(F')·y - a) / rank(F).

    For MB(F, G, z, y; a): h^0(F|X') / rank(F) of the z points go onto X', where
    they are bijective; children R(F|X'; 0) and MB(F(-X'), G(-1), z - z_h, y; a).

    Raises:
        ValueError: If s is ill posed, F is not free, the point count is not an
            integer, or h^1(F(-X')) != 0.
    """
    _require_conditions(s)
    F = s.F
    if not isinstance(F, FreeBundle):
        raise ValueError(f"Points can only be specialized for a free bundle, got {F}")
    restricted = F.restricted()
    residual = F.twisted_down()
    if residual.h1() != 0:
        raise ValueError(f"h^1({residual}) = {residual.h1()} is not zero")
    r = F.rank()

    if s.kind == "RB":
        if s.beta != 0:
            raise ValueError(f"Hyperplane specialization needs β = 0, got {s}")
        numerator = restricted.h0() - s.other.rank() * s.y - s.alpha
        if numerator < 0 or numerator % r != 0:
            raise ValueError(f"z' = {numerator}/{r} is not a non-negative integer for {s}")
        child = Statement.mb(restricted, s.other.lowered(), numerator // r, s.y, s.alpha)
        return [Statement.r(residual, 0), child]

    if s.kind == "MB":
        on_hyperplane, remainder = divmod(restricted.h0(), r)
        if remainder != 0:
            raise ValueError(f"h^0({restricted}) = {restricted.h0()} is not a multiple of {r}")
        if on_hyperplane > s.z:
            raise ValueError(f"{s} has fewer than {on_hyperplane} points to put on the hyperplane")
        child = Statement.mb(residual, _twisted_down(s.other), s.z - on_hyperplane, s.y, s.a)
        balance = next(c for c in child.conditions() if c.name == "balance")
        if not balance.passed:
            raise RuntimeError(f"Unbalanced child {child} of {s}: {balance}")
        return [Statement.r(restricted, 0), child]

    raise ValueError(f"Expected an RB or MB statement, got {s}")


def classify_iv(n: int, ell: int, z: int) -> int:
    """
    Which range z falls in for MB(O^{n+1}_n(ℓ+1), T_n(ℓ), z, y; a):

        1   z = o_n(ℓ+1)
        2   o_n(ℓ-1) + o_{n-1}(ℓ+1) <= z < o_n(ℓ+1)
        3   z = o_n(ℓ)
        4   o_n(ℓ) < z < o_n(ℓ-1) + o_{n-1}(ℓ+1)

    Raises:
        ValueError: If n < 2 or z lies outside [o_n(ℓ), o_n(ℓ+1)].
    """
    if n < 2:
        raise ValueError(f"Statement (iv) is split by z only for n >= 2, got n={n}")
    top = exactdims.o(n, ell + 1)
    bottom = exactdims.o(n, ell)
    middle = exactdims.o(n, ell - 1) + exactdims.o(n - 1, ell + 1)
    if z == top:
        return 1
    if middle <= z < top:
        return 2
    if z == bottom:
        return 3
    if bottom < z < middle:
        return 4
    raise ValueError(f"z = {z} is outside [o_{n}({ell}), o_{n}({ell + 1})] = [{bottom}, {top}]")

"""
Maximal Rank Checks (__init__.py)

Randomized certification of maximal-rank statements. A RankProblem knows the
source and target dimensions of a restriction map and how to sample it; `of`
picks the right one by name, and the verify_* functions are shortcuts that
build a problem and run its trials.

A certified report is a proof for general points over the algebraic closure of
F_p (semicontinuity). A refuted report is only a failed sample.
"""
from typing import Iterable

from maxrank.BaseLineRankProblem import BaseLineRankProblem
from maxrank.OmegaRankProblem import OmegaRankProblem
from maxrank.RankProblem import RankProblem
from maxrank.RankReport import RankReport
from maxrank.TangentRankProblem import TangentRankProblem
from maxrank.TauRankProblem import TauRankProblem
from maxrank.TrialConfig import TrialConfig


def of(name: str, **kwargs) -> RankProblem:
    """
    Factory for the rank problems.

    Args:
        name: One of 'sigma' (or 'tangent'), 'tau', 'omega', 'base-n1'.
        **kwargs: Constructor arguments of the selected problem, including cfg.

    Raises:
        RuntimeError: If no problem answers to the name.
    """
    problems = [TangentRankProblem, TauRankProblem, OmegaRankProblem, BaseLineRankProblem]

    for problem in problems:
        if name in problem.get_supported_names():
            return problem(**kwargs)

    raise RuntimeError(f"Rank problem {name} not supported.")


def verify_sigma(n: int, ell: int, a: int, cfg: TrialConfig | None = None) -> RankReport:
    """Evaluation of H^0(T(ℓ)) at a points of P^n; expected rank min(t(n,ℓ), n·a)."""
    return of("sigma", n=n, ell=ell, a=a, cfg=cfg).run()


def verify_tau(n: int, ell: int, cfg: TrialConfig | None = None) -> RankReport:
    """The square map of q points and one r-dimensional quotient; expected bijective."""
    return of("tau", n=n, ell=ell, cfg=cfg).run()


def verify_omega(n: int, p: int, k: int, a: int, cfg: TrialConfig | None = None) -> RankReport:
    """Restriction of H^0(Ω^p(k)) to a points; expected rank min(bott(n,p,k,0), binom(n,p)·a)."""
    return of("omega", n=n, p=p, k=k, a=a, cfg=cfg).run()


def verify_base_n1(ell: int, cfg: TrialConfig | None = None) -> RankReport:
    return of("base-n1", ell=ell, cfg=cfg).run()


def consistency_tangent_omega(n: int, ell: int, a: int, cfg: TrialConfig | None = None) -> bool:
    """
    Ω^{n-1}(ℓ) ≅ T(ℓ-n-1): the σ check at ℓ-n-1 and the Ω^{n-1}(ℓ) check must
    expect the same rank and agree on the verdict.
    """
    if ell < n:
        raise ValueError(f"Consistency check needs ℓ >= n, got n={n}, ℓ={ell}")
    sigma = verify_sigma(n, ell - n - 1, a, cfg)
    omega = verify_omega(n, n - 1, ell, a, cfg)
    return sigma.expected == omega.expected and sigma.certified == omega.certified


def sweep_sigma(n: int, ell: int, a_values: Iterable[int], cfg: TrialConfig | None = None) -> list[RankReport]:
    return [verify_sigma(n, ell, a, cfg) for a in a_values]


__all__ = [
    "RankProblem",
    "RankReport",
    "TrialConfig",
    "consistency_tangent_omega",
    "of",
    "sweep_sigma",
    "verify_base_n1",
    "verify_omega",
    "verify_sigma",
    "verify_tau",
]

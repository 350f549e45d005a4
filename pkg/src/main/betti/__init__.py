"""
Graded Betti Numbers of Points (__init__.py)

Betti data of the ideal of a random points in P^n, read off from ranks of the
restriction maps H^0(Ω^p(d+p)) -> H^0(Ω^p(d+p)|_R):

    b_p = h^0(Ω^p(d+p) ⊗ I_R)           = kernel of the p-th map
    a_p = h^1(Ω^{p+1}(d+p+1) ⊗ I_R)     = cokernel of the (p+1)-th map,
                                          when H^1(Ω^{p+1}(d+p+1)) = 0

Random points can only do worse than general ones, so each entry is the minimum
over the trials. The result is compared with the Minimal Resolution Conjecture
and with the two entries the maximal-rank theorem settles.
"""
import logging
from math import comb
from typing import Optional

import exactdims
import ffla
import sections
from betti.BettiDiff import BettiDiff, EntryDiff
from betti.BettiTable import BettiTable
from betti.Theorem1Report import Theorem1Report
from maxrank.TrialConfig import TrialConfig


def _min_entry(current: Optional[int], value: Optional[int]) -> Optional[int]:
    if value is None:
        return current
    return value if current is None else min(current, value)


def betti_table(n: int, a: int, cfg: TrialConfig | None = None) -> BettiTable:
    """
    Betti table of a random points, per-entry minimum over cfg.trials samples.

    An a_p entry is None when H^1(Ω^{p+1}(d+p+1)) does not vanish, since the
    cokernel then no longer measures it.
    """
    cfg = cfg or TrialConfig()
    if n < 1 or a < 1:
        raise ValueError(f"Betti table needs n >= 1 and a >= 1, got n={n}, a={a}")
    d = exactdims.d_min(n, a)
    bases = [sections.koszul_basis(n, p, d + p, prime=cfg.prime) for p in range(n + 1)]
    h0 = [exactdims.bott(n, p, d + p, 0) for p in range(n + 1)]
    computable_a = [p + 1 <= n and exactdims.bott(n, p + 1, d + p + 1, 1) == 0 for p in range(n + 1)]
    for p in range(n):
        if not computable_a[p]:
            logging.warning(f"a_{p} of (n={n}, a={a}) is not computable: H^1(Ω^{p + 1}({d + p + 1})) != 0")

    best_a: list[Optional[int]] = [None] * (n + 1)
    best_b: list[Optional[int]] = [None] * (n + 1)
    for trial in range(cfg.trials):
        points = ffla.random_points(n, a, ffla.trial_rng(cfg.master_seed, trial), cfg.prime)
        ranks = [
            sections.eval_omega(n, p, d + p, points, prime=cfg.prime, basis=bases[p]).rank()
            for p in range(n + 1)
        ]
        for p in range(n + 1):
            best_b[p] = _min_entry(best_b[p], h0[p] - ranks[p])
            if p == n:
                best_a[p] = 0
            elif computable_a[p]:
                best_a[p] = _min_entry(best_a[p], comb(n, p + 1) * a - ranks[p + 1])
        logging.debug(f"Betti trial {trial} for (n={n}, a={a}): ranks {ranks}")

    table = BettiTable(n=n, a=a, d=d, rows=tuple(zip(best_a, best_b)))
    logging.info(f"Betti table for (n={n}, a={a}, d={d}): {table.rows}")
    return table


def compare_mrc(computed: BettiTable, predicted: BettiTable) -> BettiDiff:
    """
    Compare two tables entry by entry.

    Raises:
        ValueError: If the tables describe different (n, a).
    """
    if (computed.n, computed.a) != (predicted.n, predicted.a):
        raise ValueError(f"Cannot compare (n={computed.n}, a={computed.a}) with (n={predicted.n}, a={predicted.a})")
    entries = []
    for p in range(computed.n + 1):
        entries.append(EntryDiff(p, "a", computed.a_p(p), predicted.a_p(p)))
        entries.append(EntryDiff(p, "b", computed.b_p(p), predicted.b_p(p)))
    diff = BettiDiff(n=computed.n, a=computed.a, entries=tuple(entries))
    if not diff.matches:
        logging.info(f"MRC mismatch for (n={diff.n}, a={diff.a}): {diff.to_dict()['mismatches']}")
    return diff


def theorem1_check(n: int, a: int, cfg: TrialConfig | None = None,
                   table: BettiTable | None = None) -> Theorem1Report:
    """Computed (a_{n-2}, b_{n-1}) against the prediction. A precomputed table may be passed."""
    if n < 2:
        raise ValueError(f"Theorem check needs n >= 2, got n={n}")
    prediction = exactdims.theorem1_prediction(n, a)
    table = table or betti_table(n, a, cfg)
    return Theorem1Report(prediction=prediction, computed_a_nm2=table.a_p(n - 2), computed_b_nm1=table.b_p(n - 1))


def known_values_check(table: BettiTable) -> dict[str, bool]:
    """The entries known in closed form: b_n = a_n = 0, b_0 = o(n,d) - a, a_{n-1} = a - o(n,d-1)."""
    n, a, d = table.n, table.a, table.d
    return {
        "b_n": table.b_p(n) == 0,
        "a_n": table.a_p(n) == 0,
        "b_0": table.b_p(0) == exactdims.o(n, d) - a,
        "a_n-1": table.a_p(n - 1) == a - exactdims.o(n, d - 1),
    }


__all__ = [
    "BettiDiff",
    "BettiTable",
    "Theorem1Report",
    "betti_table",
    "compare_mrc",
    "known_values_check",
    "theorem1_check",
]

"""
Horace Scheduler (__init__.py)

Symbolic replay of the induction that proves maximal rank for the tangent
bundle. Bundles are known only by rank and cohomology dimensions; statements
R, RB and MB carry their side conditions, and `schedule` expands the root
statement into a tree of lemma applications whose leaves are either trivially
true or checked numerically elsewhere.
"""
import exactdims
from horacesched.CaseIVParams import CaseIVParams
from horacesched.Condition import Condition
from horacesched.FreeBundle import FreeBundle
from horacesched.LemRBParams import LemRBParams
from horacesched.LineOnHyperplane import LineOnHyperplane
from horacesched.Reduction import Reduction
from horacesched.ReductionTrace import ReductionTrace
from horacesched.Scheduler import Scheduler
from horacesched.Statement import Statement
from horacesched.SymbolicBundle import SymbolicBundle
from horacesched.TangentBundle import TangentBundle
from horacesched.TangentOnHyperplane import TangentOnHyperplane
from horacesched.lemmas import check_conditions, classify_iv, elementary_transform, reduce_mb, reduce_rb


def of(kind: str, **kwargs) -> SymbolicBundle:
    """
    Factory for symbolic bundles.

    Args:
        kind: One of 'free', 'tangent', 'tangent-hyperplane', 'line-hyperplane'.
        **kwargs: Constructor arguments, e.g. n=3, ell=1 or n=2, twists=(2, 2).

    Raises:
        RuntimeError: If no bundle answers to the kind.
    """
    bundles = [FreeBundle, TangentBundle, TangentOnHyperplane, LineOnHyperplane]

    for bundle in bundles:
        if kind in bundle.get_supported_kinds():
            return bundle(**kwargs)

    raise RuntimeError(f"Bundle kind {kind} not supported.")


def evaluate_conditions(s: Statement) -> list[Condition]:
    """All side conditions of s with their outcome."""
    return s.conditions()


def schedule(n: int, ell: int) -> ReductionTrace:
    return Scheduler(n, ell).run()


def verify_remark(n: int, ell: int) -> bool:
    """Every (ii) node of schedule(n, ℓ) has z >= o(n_node, ℓ_node)."""
    if n < 2:
        raise ValueError(f"The lower bound on z is checked for n >= 2, got n={n}")
    trace = schedule(n, ell)
    for node in trace.nodes:
        shape = node.statement.family()
        if shape is not None and shape[0] == "ii":
            _, node_n, node_ell = shape
            if node.statement.z < exactdims.o(node_n, node_ell):
                return False
    return True

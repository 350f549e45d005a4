import logging

import exactdims
from horacesched import lemmas
from horacesched.CaseIVParams import CaseIVParams
from horacesched.FreeBundle import FreeBundle
from horacesched.LineOnHyperplane import LineOnHyperplane
from horacesched.Reduction import Reduction
from horacesched.ReductionTrace import ReductionTrace
from horacesched.Statement import Statement
from horacesched.TangentBundle import TangentBundle
from horacesched.TangentOnHyperplane import TangentOnHyperplane

HORACE_AT_GENERAL_POINTS = "Horace/line bundles at general points"


class Scheduler:
    """
    Replays the induction for the tangent bundle T_n(ℓ), starting from
    RB(T_n(ℓ), O_{n-1}(ℓ+1), q, 0; 0, r) with t(n,ℓ) = n·q + r.

    Nodes are expanded depth first, children in rule order. A node whose side
    conditions fail, or that no rule discharges, is kept as a `stuck` leaf.
    """

    DEPTH_FACTOR = 10

    def __init__(self, n: int, ell: int):
        if n < 1:
            raise ValueError(f"Ambient dimension must be >= 1, got n={n}")
        self.n = n
        self.ell = ell

    @property
    def depth_limit(self) -> int:
        return self.DEPTH_FACTOR * (self.n + self.ell + 2)

    def root_statement(self) -> Statement:
        split = exactdims.qr_split(self.n, self.ell)
        return Statement.rb(TangentBundle(self.n, self.ell), LineOnHyperplane(self.n, self.ell + 1),
                            split.q, 0, 0, split.r)

    def run(self) -> ReductionTrace:
        trace = ReductionTrace(self.n, self.ell)
        root = self.root_statement()

        if self.n == 1 or self.ell <= -2:
            node = ReductionTrace.Node(0, None, 1, root, root.conditions(), rule="trivial")
            node.annotations.append("trivially true on P^1" if self.n == 1 else "trivially true for ℓ <= -2")
            trace.nodes.append(node)
            logging.info(f"Schedule n={self.n}, ℓ={self.ell}: {trace.verdict.value} (trivial root)")
            return trace

        stack = [(root, None, 1)]
        while stack:
            statement, parent, level = stack.pop()
            node = ReductionTrace.Node(len(trace.nodes), parent, level, statement, statement.conditions())
            trace.nodes.append(node)
            if parent is not None:
                trace.nodes[parent].children.append(node.index)

            if node.violated:
                failed = ", ".join(str(c) for c in node.conditions if not c.passed)
                node.annotations.append(f"not expanded, side conditions failed: {failed}")
                node.params = statement.to_dict()
                continue
            if level >= self.depth_limit:
                node.annotations.append(f"depth limit {self.depth_limit} reached")
                node.params = statement.to_dict()
                continue

            reduction = self.reduce(statement)
            node.rule = reduction.rule
            node.params = reduction.params
            node.warnings = reduction.warnings
            node.annotations = reduction.annotations
            for message in reduction.warnings:
                logging.debug(f"[{node.index}] {statement}: {message}")
            for child in reversed(reduction.children):
                stack.append((child, node.index, level + 1))

        logging.info(f"Schedule n={self.n}, ℓ={self.ell}: {trace.verdict.value}, "
                     f"{len(trace.nodes)} nodes, depth {trace.depth}, {len(trace.warnings)} distinct warnings")
        return trace

    def reduce(self, s: Statement) -> Reduction:
        """The rule that discharges s; a `stuck` reduction when none applies."""
        try:
            return self._dispatch(s)
        except ValueError as e:
            reduction = Reduction("stuck", s, params={"statement": s.to_dict(), "error": str(e)})
            reduction.annotations.append(str(e))
            return reduction

    def _dispatch(self, s: Statement) -> Reduction:
        if s.F.h0() == 0:
            return Reduction("trivial", s, annotations=[f"{s.F} has no sections"])
        if s.kind == "R":
            return self._reduce_r(s)

        shape = s.family()
        if shape is None:
            return self._reduce_generic(s)
        family, n, ell = shape
        if family == "i":
            return self._reduce_i(s, n, ell)
        if family == "ii":
            return self._reduce_ii(s, n, ell)
        return self._reduce_iv(s, n, ell)

    def _reduce_r(self, s: Statement) -> Reduction:
        F = s.F
        annotations = []
        if isinstance(F, TangentOnHyperplane):
            F = F.lowered()
            annotations.append(f"read on X' as R({F}; {s.a})")

        if isinstance(F, TangentBundle):
            if F.n == 1:
                annotations.append(f"{F} = O_1({F.ell + 2}) is a line bundle")
                return Reduction("trivial", s, annotations=annotations)
            split = exactdims.qr_split(F.n, F.ell)
            child = Statement.rb(F, LineOnHyperplane(F.n, F.ell + 1), split.q, 0, 0, split.r)
            if split.r != 0:
                annotations.append(f"the fractional point is a quotient of dimension {split.r}")
            return Reduction("iii", s, [child], {"q": split.q, "r": split.r, "a": s.a}, annotations=annotations)

        if isinstance(F, (FreeBundle, LineOnHyperplane)):
            return Reduction("trivial", s, annotations=[HORACE_AT_GENERAL_POINTS])

        raise ValueError(f"No rule for {s}")

    def _reduce_i(self, s: Statement, n: int, ell: int) -> Reduction:
        if n == 1:
            return Reduction("trivial", s, annotations=["(i) is trivially true on P^1"])
        params, children = lemmas.reduce_rb(s)
        reduction = Reduction("lemred1", s, children, params.to_dict())
        displayed = exactdims.o(n, ell + 1) - s.y - s.beta
        if displayed != params.y_prime:
            reduction.warn(f"lemred1: displayed y' = o_{n}({ell + 1}) - y - β = {displayed}, "
                           f"balanced y' = o_{n - 1}({ell + 1}) - y - b(β) = {params.y_prime}; using the balanced value")
        return reduction

    def _reduce_ii(self, s: Statement, n: int, ell: int) -> Reduction:
        threshold = exactdims.o(n, ell) + exactdims.o(n - 1, ell)
        if s.z > threshold:
            children = lemmas.reduce_mb(s)
            reduction = Reduction("alakon", s, children, {"threshold": threshold, "z_prime": children[1].z})
            reduction.annotations.append(f"z = {s.z} > o_{n}({ell}) + o_{n - 1}({ell}) = {threshold}")
            return reduction

        params, children = lemmas.reduce_rb(s)
        reduction = Reduction("lemred2", s, children, {**params.to_dict(), "threshold": threshold})
        displayed_t = exactdims.t(n, ell) - 3 * s.y - s.alpha
        if displayed_t != params.t:
            reduction.warn(f"lemred2: displayed t = t_{n}({ell}) - 3y - a = {displayed_t}, "
                           f"balanced t = t_{n - 1}({ell}) - {n - 1}y - a = {params.t}; using the balanced value")
        if params.t > n * exactdims.o(n, ell):
            reduction.warn(f"lemred2: displayed threshold t <= {n}·o_{n}({ell}) fails (t = {params.t}) "
                           f"although z = {s.z} <= {threshold}")
        return reduction

    def _reduce_iv(self, s: Statement, n: int, ell: int) -> Reduction:
        z, y, a = s.z, s.y, s.a
        if n == 1:
            if z == exactdims.o(1, ell + 1):
                return Reduction("trivial", s, annotations=["every point carries the full fiber of the free bundle"])
            if z == exactdims.o(1, ell) and y == 2 and a == 0:
                return Reduction("base-n1", s, annotations=["checked numerically by maxrank.verify_base_n1"])
            raise ValueError(f"No base statement on P^1 matches {s}")

        case = lemmas.classify_iv(n, ell, z)
        if case == 1:
            return Reduction("iv-case1", s, annotations=["all points are general points of the free bundle"])
        if case == 2:
            children = lemmas.reduce_mb(s)
            reduction = Reduction("iv-case2", s, children, {"on_hyperplane": z - children[1].z})
            reduction.annotations.append(HORACE_AT_GENERAL_POINTS)
            return reduction
        if case == 3:
            children = [
                Statement.rb(TangentBundle(n, ell), LineOnHyperplane(n, ell + 1), exactdims.o(n, ell) + y, 0, 0, a),
                Statement.r(FreeBundle(n, (ell,)), 0),
            ]
            return Reduction("iv-case3", s, children, annotations=[HORACE_AT_GENERAL_POINTS])
        return self._reduce_iv_case4(s, n, ell)

    def _reduce_iv_case4(self, s: Statement, n: int, ell: int) -> Reduction:
        p = CaseIVParams.compute(n, ell, s.z, s.y, s.a)
        hyperplane_free = FreeBundle(n - 1, (ell + 1,) * n)
        hyperplane_tangent = TangentBundle(n - 1, ell)
        residual_tangent = TangentBundle(n, ell - 1)
        residual_line = LineOnHyperplane(n, ell)
        reduction = Reduction("iv-case4", s, params=p.to_dict())

        if p.d != p.d_displayed:
            reduction.warn(f"case 4: displayed d = z - o_{n}({ell}) = {p.d_displayed}, "
                           f"balanced d = z - o_{n}({ell - 1}) = {p.d} so that z - d = o_{n}({ell - 1})")

        if p.g == 0:
            needed = p.y_prime + p.f
            hyperplane = Statement.mb(hyperplane_free, hyperplane_tangent, p.d, needed, p.a_prime)
            residual = Statement.rb(residual_tangent, residual_line,
                                    exactdims.o(n, ell - 1) + s.y - needed, p.f, 0, 0)
        else:
            needed = p.y_prime + p.f + 1
            quotient = p.g + p.a_prime
            if quotient >= n - 1:
                if quotient == n - 1:
                    reduction.warn(f"case 4: quotient g + a' = {quotient} equals rank {n - 1}; "
                                   f"counted as one more point of {hyperplane_tangent}")
                hyperplane = Statement.mb(hyperplane_free, hyperplane_tangent, p.d,
                                          p.y_prime + p.f + 1, quotient - (n - 1))
            else:
                hyperplane = Statement.mb(hyperplane_free, hyperplane_tangent, p.d, p.y_prime + p.f, quotient)
            residual = Statement.rb(residual_tangent, residual_line,
                                    exactdims.o(n, ell - 1) + s.y - needed, p.f, 0, n - p.g)
            reduction.warn(f"case 4: residual read as {residual}; the displayed T_{n - 1}({ell - 1}) does not balance")
            reduction.annotations.append(f"quotient of dimension {p.delta_d} with kernel contained in G(-X')")

        if s.y < needed:
            reduction.warn(f"case 4: y = {s.y} is below the {needed} points the residual statement consumes")

        reduction.children = [
            hyperplane,
            residual,
            Statement.r(LineOnHyperplane(n, ell + 1), p.alpha),
            Statement.r(FreeBundle(n, (ell - 1,)), 0),
        ]
        reduction.annotations.append(HORACE_AT_GENERAL_POINTS)
        return reduction

    def _reduce_generic(self, s: Statement) -> Reduction:
        if s.kind == "RB":
            try:
                params, children = lemmas.reduce_rb(s)
                return Reduction("lemRB", s, children, params.to_dict())
            except ValueError:
                if s.beta != 0:
                    raise
        children = lemmas.reduce_mb(s)
        return Reduction("lemMB", s, children)

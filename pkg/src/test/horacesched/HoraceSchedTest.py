"""
Unit tests for the symbolic replay of the induction.
"""
import json
import sys
import unittest
from pathlib import Path
from unittest.mock import patch

# Add src/main to path
project_root = Path(__file__).parent.parent.parent.parent
src_main = project_root / 'src' / 'main'
sys.path.insert(0, str(src_main))

import exactdims
import horacesched
from horacesched import (CaseIVParams, FreeBundle, LemRBParams, LineOnHyperplane, ReductionTrace, Scheduler,
                         Statement, TangentBundle, TangentOnHyperplane)


def free(n, twist, count):
    return FreeBundle(n, (twist,) * count)


class BundleTest(unittest.TestCase):
    """Test cases for the symbolic bundles."""

    def test_ranks_and_sections(self):
        """Test rank and h^0 of each kind."""
        self.assertEqual((TangentBundle(2, 1).rank(), TangentBundle(2, 1).h0()), (2, 15))
        self.assertEqual((TangentOnHyperplane(3, 1).rank(), TangentOnHyperplane(3, 1).h0()), (2, 15))
        self.assertEqual((LineOnHyperplane(2, 2).rank(), LineOnHyperplane(2, 2).h0()), (1, 3))
        self.assertEqual((free(2, 2, 2).rank(), free(2, 2, 2).h0()), (2, 12))

    def test_h1_is_computed(self):
        """Test that H^1 of T_2(-3) = Ω^1 is nonzero."""
        self.assertEqual(TangentBundle(2, -3).h1(), 1)
        self.assertEqual(TangentBundle(3, 1).h1(), 0)
        self.assertEqual(free(3, -1, 3).h1(), 0)

    def test_lowered(self):
        """Test that hyperplane bundles become bundles on P^{n-1}."""
        self.assertEqual(TangentOnHyperplane(3, 1).lowered(), TangentBundle(2, 1))
        self.assertEqual(LineOnHyperplane(3, 2).lowered(), FreeBundle(2, (2,)))
        with self.assertRaises(ValueError):
            TangentBundle(2, 1).lowered()

    def test_describe(self):
        """Test the printed names."""
        self.assertEqual(str(free(2, 2, 2)), "O^2_2(2)")
        self.assertEqual(str(TangentOnHyperplane(2, 1)), "T_1(1)")
        self.assertEqual(str(LineOnHyperplane(2, 2)), "O_1(2)")

    def test_factory(self):
        """Test the bundle factory."""
        self.assertEqual(horacesched.of("tangent", n=2, ell=1), TangentBundle(2, 1))
        self.assertEqual(horacesched.of("free", n=2, twists=(2, 2)), free(2, 2, 2))
        with self.assertRaises(RuntimeError):
            horacesched.of("cotangent", n=2, ell=1)


class ConditionsTest(unittest.TestCase):
    """Test cases for the side conditions of R, RB and MB."""

    def test_balanced_rb(self):
        """Test that RB(T_2(1), O_1(2), 7, 0; 0, 1) has no violations."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 7, 0, 0, 1)
        self.assertEqual(horacesched.check_conditions(s), [])
        self.assertTrue(all(c.passed for c in horacesched.evaluate_conditions(s)))

    def test_unbalanced_rb(self):
        """Test that z=6 breaks the balance."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 6, 0, 0, 1)
        violations = horacesched.check_conditions(s)
        self.assertEqual([c.name for c in violations], ["balance"])
        self.assertEqual((violations[0].lhs, violations[0].rhs), (13, 15))

    def test_beta_range(self):
        """Test that β must reach rank(F') and stay below rank(F)."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 6, 1, 0, 2)
        self.assertIn("beta-range-high", [c.name for c in horacesched.check_conditions(s)])

    def test_mb_quotient_rank(self):
        """Test that a quotient as large as G is rejected."""
        s = Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 4, 2, 2)
        self.assertIn("quotient-rank", [c.name for c in horacesched.check_conditions(s)])

    def test_mb_capacity(self):
        """Test the capacity bound rank(G)·(z+y) + a <= h^0(G)."""
        s = Statement.mb(free(2, 1, 3), TangentBundle(2, 0), 1, 3, 0)
        capacity = next(c for c in s.conditions() if c.name == "capacity")
        self.assertEqual((capacity.lhs, capacity.rhs), (8, 8))
        self.assertTrue(capacity.passed)

    def test_condition_serialization(self):
        """Test the JSON shape of a condition."""
        c = Statement.r(TangentBundle(2, 1), 0).conditions()[0]
        self.assertEqual(set(c.to_dict()), {"name", "lhs", "relation", "rhs", "pass"})

    def test_family(self):
        """Test recognition of the four statement shapes."""
        self.assertEqual(Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 7, 0, 0, 1).family(), ("i", 2, 1))
        self.assertEqual(Statement.rb(free(2, 2, 2), TangentOnHyperplane(2, 1), 5, 2, 0, 0).family(), ("ii", 2, 1))
        self.assertEqual(Statement.r(TangentBundle(3, 2), 1).family(), ("iii", 3, 2))
        self.assertEqual(Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 4, 3, 0).family(), ("iv", 2, 1))
        self.assertIsNone(Statement.r(free(2, 2, 2), 0).family())

    def test_rejects_missing_bundle(self):
        """Test that RB and MB need their second bundle."""
        with self.assertRaises(ValueError):
            Statement("RB", TangentBundle(2, 1))
        with self.assertRaises(ValueError):
            Statement("XB", TangentBundle(2, 1))


class ReduceRBTest(unittest.TestCase):
    """Test cases for the RB -> (R, RB) reduction."""

    def test_first_step_on_the_plane(self):
        """Test RB(T_2(1), O_1(2), 7, 0; 0, 1) -> RB(O^2_2(2), T_1(1), 5, 2; 0, 0)."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 7, 0, 0, 1)
        params, (residual, child) = horacesched.reduce_rb(s)

        self.assertEqual((params.t, params.y_prime, params.delta, params.zeta), (2, 2, 0, 0))
        self.assertEqual(residual, Statement.r(LineOnHyperplane(2, 2), 0))
        self.assertEqual(child, Statement.rb(free(2, 2, 2), TangentOnHyperplane(2, 1), 5, 2, 0, 0))
        self.assertEqual(horacesched.check_conditions(child), [])

    def test_beta_zero_branch(self):
        """Test that β = 0 leaves α' = 0 and b(β) = 0."""
        s = Statement.rb(TangentBundle(2, 0), LineOnHyperplane(2, 1), 3, 2, 0, 0)
        params = LemRBParams.compute(s)
        self.assertEqual((params.alpha_prime, params.t, params.z_prime), (0, 0, 3))

    def test_fractional_point_branch(self):
        """Test δ != 0 on P^3: ζ = 1, β' = r - δ and z' loses one more point."""
        s = Statement.rb(free(3, 2, 3), TangentOnHyperplane(3, 1), 6, 6, 0, 0)
        params, (_, child) = horacesched.reduce_rb(s)

        self.assertEqual((params.t, params.y_prime, params.delta, params.zeta), (3, 1, 1, 1))
        self.assertEqual((params.beta_prime, params.z_prime), (2, 4))
        self.assertEqual(child, Statement.rb(TangentBundle(3, 0), LineOnHyperplane(3, 1), 4, 1, 0, 2))
        self.assertEqual(horacesched.check_conditions(child), [])

    def test_child_balance_is_derivable(self):
        """Test that every well-posed (i) or (ii) parent on a grid has a balanced child."""
        checked = 0
        for n in range(2, 5):
            for ell in range(0, 5):
                for s in _valid_parents(n, ell):
                    try:
                        _, (_, child) = horacesched.reduce_rb(s)
                    except ValueError:
                        continue
                    balance = next(c for c in child.conditions() if c.name == "balance")
                    self.assertTrue(balance.passed, f"{s} -> {child}")
                    checked += 1
        self.assertGreater(checked, 100)

    def test_nonvanishing_h1(self):
        """Test that E = T_2(-3) is refused because H^1 != 0."""
        s = Statement.rb(free(2, -1, 2), TangentOnHyperplane(2, -2), 0, 0, 0, 0)
        self.assertEqual(horacesched.check_conditions(s), [])
        with self.assertRaises(ValueError):
            horacesched.reduce_rb(s)

    def test_ill_posed_parent(self):
        """Test that a parent with failed conditions is refused."""
        with self.assertRaises(ValueError):
            horacesched.reduce_rb(Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 6, 0, 0, 1))

    def test_elementary_transforms(self):
        """Test the three transformations of the induction."""
        self.assertEqual(horacesched.elementary_transform(TangentBundle(3, 1), LineOnHyperplane(3, 2)),
                         (free(3, 2, 3), TangentOnHyperplane(3, 1)))
        self.assertEqual(horacesched.elementary_transform(free(3, 2, 3), TangentOnHyperplane(3, 1)),
                         (TangentBundle(3, 0), LineOnHyperplane(3, 1)))
        self.assertEqual(horacesched.elementary_transform(FreeBundle(3, (2, 2, 2, 1)), free(2, 2, 3)),
                         (free(3, 1, 4), LineOnHyperplane(3, 1)))
        with self.assertRaises(ValueError):
            horacesched.elementary_transform(TangentBundle(3, 1), LineOnHyperplane(3, 3))


class ReduceMBTest(unittest.TestCase):
    """Test cases for specializing points onto the hyperplane."""

    def test_rb_to_mb(self):
        """Test RB(O^3_3(2), T_2(1), 8, 3; 0, 0) -> R(O^3_3(1); 0), MB(O^3_2(2), T_2(1), 4, 3; 0)."""
        s = Statement.rb(free(3, 2, 3), TangentOnHyperplane(3, 1), 8, 3, 0, 0)
        residual, child = horacesched.reduce_mb(s)
        self.assertEqual(residual, Statement.r(free(3, 1, 3), 0))
        self.assertEqual(child, Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 4, 3, 0))
        self.assertEqual(horacesched.check_conditions(child), [])

    def test_second_range_of_iv(self):
        """Test MB(O^3_2(2), T_2(1), 4, 3; 0) -> MB(O^3_2(1), T_2(0), 4 - o_1(2), 3; 0)."""
        s = Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 4, 3, 0)
        restricted, child = horacesched.reduce_mb(s)
        self.assertEqual(restricted, Statement.r(free(1, 2, 3), 0))
        self.assertEqual(child, Statement.mb(free(2, 1, 3), TangentBundle(2, 0), 4 - exactdims.o(1, 2), 3, 0))

    def test_non_integral_count(self):
        """Test that z' = 3/2 makes the lemma inapplicable."""
        s = Statement.rb(FreeBundle(2, (1, 0)), LineOnHyperplane(2, 1), 2, 0, 0, 0)
        self.assertEqual(horacesched.check_conditions(s), [])
        with self.assertRaises(ValueError):
            horacesched.reduce_mb(s)

    def test_requires_free_bundle(self):
        """Test that only free bundles are specialized."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 7, 0, 0, 1)
        with self.assertRaises(ValueError):
            horacesched.reduce_mb(s)


class CaseIVTest(unittest.TestCase):
    """Test cases for the four ranges of statement (iv)."""

    def test_ranges_partition(self):
        """Test that each z in [o_n(ℓ), o_n(ℓ+1)] falls in exactly one range."""
        for n in range(2, 5):
            for ell in range(-1, 6):
                top = exactdims.o(n, ell + 1)
                bottom = exactdims.o(n, ell)
                middle = exactdims.o(n, ell - 1) + exactdims.o(n - 1, ell + 1)
                for z in range(bottom, top + 1):
                    holds = [z == top, middle <= z < top, z == bottom, bottom < z < middle]
                    self.assertEqual(sum(holds), 1, f"n={n}, ℓ={ell}, z={z}")
                    self.assertEqual(horacesched.classify_iv(n, ell, z), holds.index(True) + 1)
                with self.assertRaises(ValueError):
                    horacesched.classify_iv(n, ell, top + 1)

    def test_classify_needs_n2(self):
        """Test that P^1 is not split by ranges."""
        with self.assertRaises(ValueError):
            horacesched.classify_iv(1, 2, 3)

    def test_params_with_carry(self):
        """Test n=3, ℓ=1, z=5, y=6, a=2."""
        p = CaseIVParams.compute(3, 1, 5, 6, 2)
        self.assertEqual((p.alpha, p.d, p.d_displayed, p.y_prime, p.a_prime), (1, 4, 1, 1, 1))
        self.assertEqual((p.e, p.f, p.g, p.delta_d), (3, 1, 1, 2))

    def test_params_without_carry(self):
        """Test n=3, ℓ=1, z=6, y=5, a=1."""
        p = CaseIVParams.compute(3, 1, 6, 5, 1)
        self.assertEqual((p.alpha, p.d, p.d_displayed, p.y_prime, p.a_prime), (1, 5, 2, 0, 0))
        self.assertEqual((p.e, p.f, p.g, p.delta_d), (3, 1, 1, 2))

    def test_reduction_with_carry(self):
        """Test that g + a' = n - 1 becomes one more point of G."""
        s = Statement.mb(free(3, 2, 4), TangentBundle(3, 1), 5, 6, 2)
        self.assertEqual(horacesched.check_conditions(s), [])
        reduction = Scheduler(3, 1).reduce(s)

        self.assertEqual(reduction.rule, "iv-case4")
        self.assertEqual(reduction.children[0], Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 4, 3, 0))
        self.assertEqual(reduction.children[1], Statement.rb(TangentBundle(3, 0), LineOnHyperplane(3, 1), 4, 1, 0, 2))
        self.assertTrue(any("equals rank" in w for w in reduction.warnings))
        for child in reduction.children:
            self.assertEqual(horacesched.check_conditions(child), [], str(child))

    def test_reduction_without_carry(self):
        """Test the g != 0 branch with a quotient below rank(G)."""
        s = Statement.mb(free(3, 2, 4), TangentBundle(3, 1), 6, 5, 1)
        reduction = Scheduler(3, 1).reduce(s)

        self.assertEqual(reduction.children[0], Statement.mb(free(2, 2, 3), TangentBundle(2, 1), 5, 1, 1))
        self.assertEqual(reduction.children[1], Statement.rb(TangentBundle(3, 0), LineOnHyperplane(3, 1), 4, 1, 0, 2))
        self.assertTrue(any("z - o_3(0)" in w for w in reduction.warnings))
        for child in reduction.children:
            self.assertEqual(horacesched.check_conditions(child), [], str(child))

    def test_reduction_g_zero(self):
        """Test the g = 0 branch at n=3, ℓ=0."""
        s = Statement.mb(free(3, 1, 4), TangentBundle(3, 0), 2, 2, 2)
        reduction = Scheduler(3, 0).reduce(s)

        self.assertEqual(reduction.params["g"], 0)
        self.assertEqual(reduction.children[0], Statement.mb(free(2, 1, 3), TangentBundle(2, 0), 2, 1, 1))
        self.assertEqual(reduction.children[1], Statement.rb(TangentBundle(3, -1), LineOnHyperplane(3, 0), 1, 1, 0, 0))


class ScheduleTest(unittest.TestCase):
    """Test cases for the full induction."""

    def test_line_is_trivial(self):
        """Test that on P^1 the trace is a single trivial node."""
        for ell in range(-1, 6):
            trace = horacesched.schedule(1, ell)
            self.assertEqual((len(trace.nodes), trace.depth), (1, 1))
            self.assertEqual(trace.nodes[0].rule, "trivial")
            self.assertTrue(trace.certified)

    def test_negative_twist_is_trivial(self):
        """Test that ℓ <= -2 gives a trivial root."""
        trace = horacesched.schedule(2, -5)
        self.assertEqual(len(trace.nodes), 1)
        self.assertEqual(trace.verdict, ReductionTrace.Verdict.CERTIFIED)

    def test_plane_twist_one(self):
        """Test the trace of T_2(1)."""
        trace = horacesched.schedule(2, 1)

        self.assertTrue(trace.certified)
        self.assertEqual(trace.root, Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 7, 0, 0, 1))
        statements = [node.statement for node in trace.nodes]
        self.assertIn(Statement.rb(free(2, 2, 2), TangentOnHyperplane(2, 1), 5, 2, 0, 0), statements)
        self.assertIn(Statement.mb(free(1, 1, 2), TangentBundle(1, 0), 2, 0, 0), statements)
        self.assertEqual(trace.nodes[0].rule, "lemred1")
        for rule in ("lemred2", "alakon"):
            self.assertIn(rule, trace.rules_used())
        self.assertTrue(any(w.startswith("lemred1") for w in trace.warnings))
        self.assertTrue(any(w.startswith("lemred2") for w in trace.warnings))

    def test_children_are_linked(self):
        """Test that parent and child indices agree."""
        trace = horacesched.schedule(3, 2)
        for node in trace.nodes:
            for child in node.children:
                self.assertEqual(trace.nodes[child].parent, node.index)
                self.assertEqual(trace.nodes[child].level, node.level + 1)

    def test_grid_is_certified(self):
        """Test certification, balance and the depth bound for n <= 4 and -1 <= ℓ <= 6."""
        for n in range(1, 5):
            for ell in range(-1, 7):
                trace = horacesched.schedule(n, ell)
                self.assertEqual(trace.verdict, ReductionTrace.Verdict.CERTIFIED, f"n={n}, ℓ={ell}")
                self.assertLessEqual(trace.depth, 10 * (n + ell + 2))
                for node in trace.nodes:
                    for condition in node.conditions:
                        self.assertTrue(condition.passed, f"n={n}, ℓ={ell}: {node.statement} {condition}")
                if n >= 2:
                    self.assertTrue(horacesched.verify_remark(n, ell), f"n={n}, ℓ={ell}")

    def test_leaves(self):
        """Test that every leaf of a certified trace is a base or trivial statement."""
        trace = horacesched.schedule(3, 3)
        for leaf in trace.leaves:
            self.assertIn(leaf.rule, {"trivial", "iv-case1", "base-n1"})

    def test_serialization(self):
        """Test that the trace serializes to JSON with the condition fields."""
        data = json.loads(json.dumps(horacesched.schedule(2, 2).to_dict()))
        self.assertEqual(data["verdict"], "certified")
        node = data["nodes"][0]
        self.assertEqual(set(node["conditions"][0]), {"name", "lhs", "relation", "rhs", "pass"})
        self.assertIn("rule", node)
        self.assertIn("warnings", node)

    def test_stuck_reduction(self):
        """Test that a statement no rule handles becomes a stuck node with a dump."""
        s = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 3), 7, 0, 0, 1)
        reduction = Scheduler(2, 1).reduce(s)
        self.assertEqual(reduction.rule, "stuck")
        self.assertTrue(reduction.is_leaf)
        self.assertIn("statement", reduction.params)

    def test_depth_guard(self):
        """Test that the depth limit turns the root into a stuck leaf."""
        with patch.object(Scheduler, "DEPTH_FACTOR", 0):
            trace = horacesched.schedule(2, 1)
        self.assertEqual(trace.verdict, ReductionTrace.Verdict.STUCK)
        self.assertEqual(len(trace.nodes), 1)

    def test_violated_takes_precedence(self):
        """Test that a failed condition wins over a stuck node."""
        bad = Statement.rb(TangentBundle(2, 1), LineOnHyperplane(2, 2), 6, 0, 0, 1)
        trace = ReductionTrace(2, 1, nodes=[ReductionTrace.Node(0, None, 1, bad, bad.conditions())])
        self.assertEqual(trace.verdict, ReductionTrace.Verdict.VIOLATED)

    def test_invalid_dimension(self):
        """Test that n = 0 is refused."""
        with self.assertRaises(ValueError):
            horacesched.schedule(0, 1)


class LowerBoundTest(unittest.TestCase):
    """Test cases for the lower bound on z in statement (ii)."""

    def test_known_cases(self):
        """Test (2,1), (3,3) and ℓ = -1."""
        self.assertTrue(horacesched.verify_remark(2, 1))
        self.assertTrue(horacesched.verify_remark(3, 3))
        self.assertTrue(horacesched.verify_remark(4, -1))

    def test_requires_n2(self):
        """Test that n = 1 is refused."""
        with self.assertRaises(ValueError):
            horacesched.verify_remark(1, 2)


def _valid_parents(n, ell):
    """Every well-posed (i) and (ii) statement at (n, ℓ)."""
    tangent = TangentBundle(n, ell)
    line = LineOnHyperplane(n, ell + 1)
    for beta in [0] + list(range(1, n)):
        for y in range(0, line.h0() + 1):
            remainder = tangent.h0() - y - beta
            if remainder >= 0 and remainder % n == 0:
                s = Statement.rb(tangent, line, remainder // n, y, 0, beta)
                if not s.violations():
                    yield s

    F = free(n, ell + 1, n)
    F_prime = TangentOnHyperplane(n, ell)
    for alpha in range(0, n):
        for y in range(0, F_prime.h0() // (n - 1) + 1):
            remainder = F.h0() - (n - 1) * y - alpha
            if remainder >= 0 and remainder % n == 0:
                s = Statement.rb(F, F_prime, remainder // n, y, alpha, 0)
                if not s.violations():
                    yield s


if __name__ == '__main__':
    unittest.main()

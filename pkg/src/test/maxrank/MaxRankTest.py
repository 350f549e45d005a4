"""
Unit tests for the randomized maximal-rank checks.
"""
import math
import sys
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

# Add src/main to path
project_root = Path(__file__).parent.parent.parent.parent
src_main = project_root / 'src' / 'main'
sys.path.insert(0, str(src_main))

import exactdims
import maxrank
from maxrank.RankReport import RankReport
from maxrank.TangentRankProblem import TangentRankProblem
from maxrank.TauRankProblem import TauRankProblem
from maxrank.TrialConfig import TrialConfig


class TrialConfigTest(unittest.TestCase):
    """Test cases for the trial configuration."""

    def test_defaults(self):
        """Test the default prime, trials and quotient samples."""
        cfg = TrialConfig()
        self.assertEqual((cfg.prime, cfg.trials, cfg.master_seed, cfg.quotient_samples), (2147483647, 5, 0, 3))
        self.assertEqual(cfg.point_strategy, "uniform")

    def test_rejects_bad_values(self):
        """Test trials >= 1 and a usable prime."""
        with self.assertRaises(ValidationError):
            TrialConfig(trials=0)
        with self.assertRaises(ValidationError):
            TrialConfig(prime=65536)
        with self.assertRaises(ValidationError):
            TrialConfig(point_strategy="grid")


class SigmaTest(unittest.TestCase):
    """Test cases for the evaluation map of T(ℓ)."""

    def test_bijective_plane(self):
        """Test (2,0,4): expected 8, certified."""
        report = maxrank.verify_sigma(2, 0, 4)
        self.assertEqual(report.expected, 8)
        self.assertTrue(report.certified)

    def test_bijective_space(self):
        """Test (3,1,12): expected 36, certified."""
        report = maxrank.verify_sigma(3, 1, 12)
        self.assertEqual(report.expected, 36)
        self.assertEqual(report.verdict, RankReport.Verdict.CERTIFIED)

    def test_no_points(self):
        """Test a=0 is trivially certified."""
        for n, ell in ((1, 0), (2, 3), (3, 1)):
            report = maxrank.verify_sigma(n, ell, 0)
            self.assertEqual(report.expected, 0)
            self.assertTrue(report.certified)

    def test_very_negative_twist(self):
        """Test ℓ <= -2 has expected 0 on P^2."""
        report = maxrank.verify_sigma(2, -3, 4)
        self.assertEqual(report.expected, 0)
        self.assertTrue(report.certified)

    def test_line_certifies_at_first_trial(self):
        """Test every check on P^1 certifies with one trial."""
        for ell in range(-1, 9):
            for a in range(0, 13):
                report = maxrank.verify_sigma(1, ell, a)
                self.assertTrue(report.certified)
                self.assertEqual(len(report.achieved), 1)

    def test_expected_is_min(self):
        """Test expected = min(space, target) in every report."""
        for report in maxrank.sweep_sigma(2, 1, range(0, 10)):
            self.assertEqual(report.expected, min(report.space_dim, report.target_dim))
            self.assertTrue(all(rank <= report.expected for rank in report.achieved))

    def test_monotone_in_point_count(self):
        """Test the certified rank does not decrease as points are added."""
        reports = maxrank.sweep_sigma(2, 1, range(0, 10))
        ranks = [report.achieved[-1] for report in reports]
        self.assertEqual(ranks, sorted(ranks))
        self.assertTrue(all(report.certified for report in reports))

    def test_reproducible(self):
        """Test the same seed and prime give the same report."""
        cfg = TrialConfig(master_seed=77, trials=3)
        first = maxrank.verify_sigma(3, 0, 5, cfg)
        second = maxrank.verify_sigma(3, 0, 5, cfg)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_refuted_sample(self):
        """Test a short sample is reported as refuted, never as a disproof."""
        cfg = TrialConfig(trials=4)
        with patch.object(TangentRankProblem, "trial_rank", return_value=3):
            report = maxrank.verify_sigma(2, 0, 4, cfg)
        self.assertEqual(report.verdict, RankReport.Verdict.REFUTED)
        self.assertEqual(report.achieved, [3, 3, 3, 3])
        self.assertIn("not a disproof", report.note)
        self.assertEqual(report.to_dict()["verdict"], "refuted-at-sample")

    def test_impossible_rank_is_an_error(self):
        """Test a rank above the expected value is flagged."""
        with patch.object(TangentRankProblem, "trial_rank", return_value=9):
            report = maxrank.verify_sigma(2, 0, 4)
        self.assertEqual(report.verdict, RankReport.Verdict.ERROR)

    def test_rejects_bad_input(self):
        """Test negative point counts and n < 1."""
        with self.assertRaises(ValueError):
            maxrank.verify_sigma(2, 0, -1)
        with self.assertRaises(ValueError):
            maxrank.verify_sigma(0, 0, 1)


class TauTest(unittest.TestCase):
    """Test cases for the square map with a fiber quotient."""

    def test_plane_with_quotient(self):
        """Test (2,1): t=15, q=7, r=1 is bijective."""
        report = maxrank.verify_tau(2, 1)
        self.assertEqual((report.space_dim, report.target_dim), (15, 15))
        self.assertEqual(report.params["r"], 1)
        self.assertTrue(report.certified)

    def test_space_without_quotient(self):
        """Test (3,1): r=0, 12 plain points."""
        report = maxrank.verify_tau(3, 1)
        self.assertEqual(report.params["q"], 12)
        self.assertEqual(report.params["r"], 0)
        self.assertTrue(report.certified)

    def test_line(self):
        """Test n=1 is Vandermonde bijectivity."""
        for ell in range(-1, 9):
            report = maxrank.verify_tau(1, ell)
            self.assertEqual(report.params["r"], 0)
            self.assertTrue(report.certified)
            self.assertEqual(len(report.achieved), 1)

    def test_quotient_samples_keep_minimum(self):
        """Test the trial rank is the minimum over sampled quotients."""
        cfg = TrialConfig(quotient_samples=2, trials=1)
        problem = maxrank.of("tau", n=2, ell=0, cfg=cfg)
        self.assertIsInstance(problem, TauRankProblem)
        # t(2,0) = 8 = 2·4: no quotient needed
        self.assertEqual(problem.params()["r"], 0)
        report = maxrank.verify_tau(3, 0, cfg)
        self.assertEqual(report.params["r"], 0)
        # t(4,1) = 70 = 4·17 + 2
        report = maxrank.verify_tau(4, 1, cfg)
        self.assertEqual((report.params["q"], report.params["r"]), (17, 2))
        self.assertTrue(report.certified)

    def test_rejects_small_twist(self):
        """Test ℓ >= -1."""
        with self.assertRaises(ValueError):
            maxrank.verify_tau(2, -2)


class OmegaTest(unittest.TestCase):
    """Test cases for the restriction of p-forms."""

    def test_twenty_eight_points(self):
        """Test (3,1,5,28): expected 84, certified."""
        report = maxrank.verify_omega(3, 1, 5, 28)
        self.assertEqual(report.expected, 84)
        self.assertTrue(report.certified)

    def test_five_plane_points(self):
        """Test (2,1,3,5): expected min(8,10) = 8, certified."""
        report = maxrank.verify_omega(2, 1, 3, 5)
        self.assertEqual(report.expected, 8)
        self.assertTrue(report.certified)

    def test_no_points(self):
        """Test a=0 has expected 0."""
        self.assertEqual(maxrank.verify_omega(3, 2, 4, 0).expected, 0)


class ConsistencyTest(unittest.TestCase):
    """Test cases for Ω^{n-1}(ℓ) ≅ T(ℓ-n-1)."""

    def test_plane(self):
        """Test (2,3,5): both sides expect 8."""
        self.assertTrue(maxrank.consistency_tangent_omega(2, 3, 5))
        self.assertEqual(maxrank.verify_omega(2, 1, 3, 5).expected, maxrank.verify_sigma(2, 0, 5).expected)

    def test_space(self):
        """Test (3,5,28): both sides expect 36."""
        self.assertTrue(maxrank.consistency_tangent_omega(3, 5, 28))
        self.assertEqual(maxrank.verify_omega(3, 2, 5, 28).expected, 36)

    def test_no_points(self):
        """Test a=0 is trivially consistent."""
        self.assertTrue(maxrank.consistency_tangent_omega(2, 2, 0))

    def test_rejects_small_twist(self):
        """Test ℓ >= n."""
        with self.assertRaises(ValueError):
            maxrank.consistency_tangent_omega(3, 2, 1)


class FactoryTest(unittest.TestCase):
    """Test cases for the problem factory and the base statement."""

    def test_unknown_name(self):
        """Test unsupported names raise RuntimeError."""
        with self.assertRaises(RuntimeError):
            maxrank.of("rho", n=2)

    def test_base_statement_on_line(self):
        """Test the dimension-one base statement is bijective."""
        for ell in range(-1, 7):
            report = maxrank.verify_base_n1(ell)
            self.assertEqual(report.space_dim, report.target_dim)
            self.assertEqual(report.space_dim, 2 * (ell + 2))
            self.assertTrue(report.certified)


class SweepTest(unittest.TestCase):
    """Test cases for the tangent and τ checks over the desk-scale grid."""

    def test_sigma_grid(self):
        """Test every a in [0, ceil(t/n)+2] is certified for n in {2,3}, ℓ in [-1,4]."""
        for n in (2, 3):
            for ell in range(-1, 5):
                a_max = math.ceil(exactdims.t(n, ell) / n) + 2
                for report in maxrank.sweep_sigma(n, ell, range(a_max + 1)):
                    self.assertTrue(report.certified, report.to_dict())
                    self.assertLessEqual(len(report.achieved), 5)

    def test_tau_grid(self):
        """Test the critical square map is certified for n in {2,3}, ℓ in [-1,4]."""
        for n in (2, 3):
            for ell in range(-1, 5):
                report = maxrank.verify_tau(n, ell)
                self.assertEqual(report.space_dim, report.target_dim)
                self.assertTrue(report.certified, report.to_dict())
                self.assertLessEqual(len(report.achieved), 5)

    def test_grid_is_reproducible(self):
        """Test repeating the grid reports gives identical dictionaries."""
        for n, ell in ((2, 3), (3, 2)):
            a_values = range(math.ceil(exactdims.t(n, ell) / n) + 3)
            first = [r.to_dict() for r in maxrank.sweep_sigma(n, ell, a_values)]
            second = [r.to_dict() for r in maxrank.sweep_sigma(n, ell, a_values)]
            self.assertEqual(first, second)
            self.assertEqual(maxrank.verify_tau(n, ell).to_dict(), maxrank.verify_tau(n, ell).to_dict())


if __name__ == '__main__':
    unittest.main()

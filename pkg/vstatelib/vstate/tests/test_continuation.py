# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
import numpy as np
import unittest as ut
import warnings

from numpy.testing import assert_allclose
from unittest import mock

from . import TestBase
from .. import continuation
from ..continuation import (Branch, BranchConfig, BranchPoint,
                            bordered_jacobian, half_turn, initial_point,
                            newton_correct, trace_branch, verify_vstate)
from ..functional import eval_F
from ..spectrum import (find_Qm, kernel_vector, transversality)
from ...contour.boundary import PerturbationCoeffs
from ...utils.warnings import BranchWarning


class TestHalfTurn(ut.TestCase):
    """Test function :func:`~vstatelib.vstate.continuation.half_turn`."""

    def test_half_turn(self):
        f = PerturbationCoeffs([1.0, 2.0, 3.0, 4.0])
        assert_allclose(half_turn(f).a, [-1.0, 2.0, -3.0, 4.0])
        self.assertEqual(half_turn(half_turn(f)), f)


class TestBranchConfig(ut.TestCase):
    """Test class :class:`~vstatelib.vstate.continuation.BranchConfig`."""

    def test_defaults(self):
        cfg = BranchConfig()
        self.assertEqual(cfg.m, 3)
        self.assertEqual(cfg.N, 128)
        self.assertEqual(cfg.M, 512)
        self.assertEqual(cfg.guard, 'relaxed')
        self.assertAlmostEqual(cfg.verify_tol, 1e-9, delta=1e-24)
        self.assertEqual(cfg.info['eps_max'], 0.03)
        self.assertEqual(cfg.info['eps_step'], 0.00375)
        self.assertEqual(cfg.max_modes, 512)

    def test_replace(self):
        cfg = BranchConfig().replace(N=64, M=256, newton_tol=1e-12)
        self.assertEqual((cfg.N, cfg.M), (64, 256))
        self.assertAlmostEqual(cfg.verify_tol, 1e-11, delta=1e-26)
        with self.assertRaises(AttributeError):
            cfg.nothing

    def test_invalid(self):
        self.assertRaises(ValueError, BranchConfig, m=2)
        self.assertRaises(ValueError, BranchConfig, m=65, N=128)
        BranchConfig(m=65, N=128, allow_large_m=True)
        self.assertRaises(ValueError, BranchConfig, m=3, N=4)
        self.assertRaises(ValueError, BranchConfig, N=64, M=64)
        self.assertRaises(ValueError, BranchConfig, direction=0)
        self.assertRaises(ValueError, BranchConfig, eps_step=0.0)
        self.assertRaises(ValueError, BranchConfig, verify_refine_factor=6)
        self.assertRaises(ValueError, BranchConfig, guard='loose')


class TestBordered(TestBase):
    """
    Test :func:`~vstatelib.vstate.continuation.initial_point` and
    :func:`~vstatelib.vstate.continuation.bordered_jacobian`.
    """

    def test_initial_point(self):
        p = initial_point(3, N=16)
        self.assertIsInstance(p, BranchPoint)
        self.assertEqual(p.eps, 0.0)
        self.assertEqual(p.Q, 0.5)
        self.assertEqual(p.M, 128)
        self.assertTrue(np.all(p.coeffs.a == 0.0))
        self.assertAlmostEqual(p.omega, 0.1875, delta=1e-15)

    def test_regular_at_bifurcation(self):
        for m in (3, 4):
            Q_m = find_Qm(m).Q_m
            N = 16
            mat, cond = bordered_jacobian(m, Q_m,
                                          PerturbationCoeffs.zeros(N), 0.0)
            self.assertEqual(mat.shape, (N + 1, N + 1))
            self.assertLess(cond, 1e6)
            self.assertAlmostEqual(mat[m - 1, N], transversality(m, Q_m),
                                   delta=1e-8)
            self.assertEqual(mat[N, m - 1], 1.0)
            assert_allclose(mat[:N, :N] @ kernel_vector(m, Q_m, N).a, 0.0,
                            atol=1e-10)


class TestNewtonCorrect(TestBase):
    """
    Test :func:`~vstatelib.vstate.continuation.newton_correct` and
    :func:`~vstatelib.vstate.continuation.verify_vstate`.
    """

    def test_first_branch(self):
        m, N, M, eps = 3, 64, 256, 0.005
        v = kernel_vector(m, 0.5, N)
        p = newton_correct(m, eps, (0.5, PerturbationCoeffs(eps * v.a)),
                           M=M)
        self.assertLess(p.residual_inf, 1e-10)
        self.assertEqual(p.coeffs.coeff(m + 1), eps)
        self.assertLess(abs(p.Q - 0.5), 1e-3)
        self.assertGreater(p.newton_iters, 0)

        # independent check on a finer grid
        self.assertLess(eval_F(p.Q, p.coeffs, M=1024,
                               guard='relaxed').sup_norm, 1e-9)
        self.assertLess(verify_vstate(p), 1e-9)

    def test_certificate(self):
        p0 = initial_point(3, N=16)
        self.assertLess(verify_vstate(p0), 1e-11)

        m, N, M, eps = 3, 64, 256, 0.005
        v = kernel_vector(m, 0.5, N)
        p = newton_correct(m, eps, (0.5, PerturbationCoeffs(eps * v.a)),
                           M=M)
        bumped = p.coeffs.a.copy()
        bumped[0] += 1e-4
        q = BranchPoint(eps, p.Q, PerturbationCoeffs(bumped), 0.0, 0, M)
        self.assertGreater(verify_vstate(q), 1e-5)

    def test_refinement_stability(self):
        m, N, M, eps = 3, 64, 256, 0.01
        v = kernel_vector(m, 0.5, N)
        p = newton_correct(m, eps, (0.5, PerturbationCoeffs(eps * v.a)),
                           M=M, tol=1e-12)
        p2 = newton_correct(m, eps, (p.Q, p.coeffs.resized(2 * N)),
                            M=2 * M, tol=1e-12)
        self.assertEqual(p2.N, 2 * N)
        self.assertLess(abs(p2.Q - p.Q), 1e-9)

    def test_half_turn_symmetry(self):
        m, N, M, eps = 3, 64, 256, 0.005
        v = kernel_vector(m, 0.5, N)
        pp = newton_correct(m, eps, (0.5, PerturbationCoeffs(eps * v.a)),
                            M=M)
        pm = newton_correct(m, -eps, (0.5, PerturbationCoeffs(-eps * v.a)),
                            M=M)
        self.assertAlmostEqual(pp.Q, pm.Q, delta=1e-9)
        assert_allclose(pm.coeffs.a, half_turn(pp.coeffs).a, atol=1e-9)

    def test_even_fold_parity(self):
        m, N, M, eps = 4, 32, 256, 1e-3
        Q_m = find_Qm(m).Q_m
        v = kernel_vector(m, Q_m, N)
        p = newton_correct(m, eps, (Q_m, PerturbationCoeffs(eps * v.a)),
                           M=M)
        self.assertLess(p.residual_inf, 1e-10)
        even = p.coeffs.indices % 2 == 0
        self.assertLess(np.max(np.abs(p.coeffs.a[even])), 1e-12)

    def test_trivial(self):
        p = newton_correct(3, 0.0, (0.5, PerturbationCoeffs.zeros(8)))
        self.assertEqual(p.newton_iters, 0)
        self.assertLess(p.residual_inf, 1e-13)


class TestTraceBranch(ut.TestCase):
    """Test function :func:`~vstatelib.vstate.continuation.trace_branch`."""

    cfg = BranchConfig(m=3, N=64, M=256, eps_max=0.015, eps_step=0.005)

    def test_branch(self):
        branch = trace_branch(self.cfg, silent=True)
        self.assertIsInstance(branch, Branch)
        self.assertFalse(branch.truncated)
        self.assertEqual(len(branch), 3)
        assert_allclose(branch.eps, [0.005, 0.01, 0.015], atol=1e-15)
        self.assertEqual(branch.origin.eps, 0.0)
        self.assertEqual(branch.origin.Q, 0.5)
        self.assertEqual(branch.bifurcation.m, 3)
        for p in branch:
            self.assertLess(p.residual_inf, self.cfg.newton_tol)
            self.assertLess(p.verify, self.cfg.verify_tol)
            self.assertLess(abs(p.Q - 0.5), 1e-2)
        self.assertEqual(branch.diagnostics['refinements'], 0)
        self.assertEqual(branch.diagnostics['final_N'], 64)
        self.assertLess(branch.extrapolated_gap(), 1e-5)
        self.assertRaises(ValueError, branch.extrapolated_gap, 3)

    def test_reverse_direction(self):
        cfg = self.cfg.replace(eps_max=0.005)
        up = trace_branch(cfg, silent=True)
        down = trace_branch(cfg.replace(direction=-1), silent=True)
        self.assertEqual(len(up), len(down))
        self.assertAlmostEqual(up[0].eps, -down[0].eps, delta=1e-15)
        self.assertAlmostEqual(up[0].Q, down[0].Q, delta=1e-9)
        assert_allclose(down[0].coeffs.a, half_turn(up[0].coeffs).a,
                        atol=1e-9)

    def test_step_underflow(self):
        cfg = self.cfg.replace(newton_max_iters=1, newton_tol=1e-14,
                               max_halvings=0)
        with self.assertWarns(BranchWarning):
            branch = trace_branch(cfg)
        self.assertTrue(branch.truncated)
        self.assertEqual(len(branch), 0)
        self.assertIn('step underflow', branch.diagnostics['reason'])

    def test_certificate_halves_step(self):
        cfg = self.cfg.replace(max_modes=64, max_halvings=2)
        with mock.patch.object(continuation, 'verify_vstate',
                               return_value=1e-3):
            with self.assertWarns(BranchWarning):
                branch = trace_branch(cfg)
        self.assertTrue(branch.truncated)
        self.assertEqual(len(branch), 0)
        self.assertEqual(branch.diagnostics['halvings'], 2)
        self.assertEqual(branch.diagnostics['refinements'], 0)
        self.assertIn('certificate', branch.diagnostics['reason'])

    def test_silent(self):
        cfg = self.cfg.replace(newton_max_iters=1, newton_tol=1e-14,
                               max_halvings=0)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            trace_branch(cfg, silent=True)
        self.assertEqual(
            [w for w in caught if issubclass(w.category, BranchWarning)],
            [])


class TestBranchLimits(ut.TestCase):
    """
    Branches traced to the end of their certified range and checked
    against the bifurcation point.
    """

    def test_default_run(self):
        branch = trace_branch(BranchConfig(), silent=True)
        self.assertFalse(branch.truncated, branch.diagnostics['reason'])
        self.assertEqual(len(branch), 8)
        assert_allclose(branch.eps, 0.00375 * np.arange(1, 9), atol=1e-15)
        for p in branch:
            self.assertLess(p.residual_inf, 1e-10)
            self.assertLess(p.verify, 1e-8)

    def test_first_branch_origin(self):
        cfg = BranchConfig(m=3, N=64, M=256, eps_max=0.003, eps_step=0.001,
                           newton_tol=1e-12, verify_tol=1e-8)
        branch = trace_branch(cfg, silent=True)
        self.assertFalse(branch.truncated)
        self.assertEqual(len(branch), 3)
        self.assertLess(branch.extrapolated_gap(), 1e-6)

    def test_second_branch_origin(self):
        cfg = BranchConfig(m=4, N=128, M=512, eps_max=0.002,
                           eps_step=0.0004, newton_tol=1e-12,
                           verify_tol=1e-8)
        branch = trace_branch(cfg, silent=True)
        self.assertFalse(branch.truncated)
        self.assertEqual(len(branch), 5)
        self.assertLess(branch.extrapolated_gap(deg=4), 1e-6)
        self.assertRaises(ValueError, branch.extrapolated_gap, 2, 6)

    def test_second_branch_range(self):
        cfg = BranchConfig(m=4, N=128, M=512, eps_max=0.01,
                           eps_step=0.005)
        branch = trace_branch(cfg, silent=True)
        self.assertFalse(branch.truncated, branch.diagnostics['reason'])
        assert_allclose(branch.eps, [0.005, 0.01], atol=1e-15)
        for p in branch:
            self.assertLess(p.verify, 1e-8)
            even = p.coeffs.indices % 2 == 0
            self.assertLess(np.max(np.abs(p.coeffs.a[even])), 1e-11)
            self.assertEqual(p.coeffs.coeff(5), p.eps)


if __name__ == '__main__':
    ut.main()

# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""Shared fixtures for the :mod:`vstatelib.vstate` test suite."""
__all__ = ['TestBase']

import numpy as np
import unittest as ut

from ...contour.boundary import PerturbationCoeffs
from ..functional import eval_F


class TestBase(ut.TestCase):
    """Base test case with finite difference helpers."""

    @staticmethod
    def small_pert(N: int, size: float = 1e-3,
                   seed: int = 0) -> PerturbationCoeffs:
        """random coefficients decaying like :math:`0.6^n`"""
        rng = np.random.RandomState(seed)
        a = rng.standard_normal(N) * 0.6 ** np.arange(N)
        return PerturbationCoeffs(size * a / np.max(np.abs(a)))

    @staticmethod
    def fd_jacobian(Q: float, f: PerturbationCoeffs, M: int = None,
                    step: float = 1e-6) -> np.ndarray:
        """central differences of :func:`eval_F` in each :math:`a_k`"""
        N = f.N
        jac = np.empty((N, N))
        for k in range(N):
            da = np.zeros(N)
            da[k] = step
            gp = eval_F(Q, PerturbationCoeffs(f.a + da), M=M).g
            gm = eval_F(Q, PerturbationCoeffs(f.a - da), M=M).g
            jac[:, k] = (gp - gm) / (2.0 * step)
        return jac

    @staticmethod
    def fd_dQ(Q: float, f: PerturbationCoeffs, M: int = None,
              step: float = 1e-6) -> np.ndarray:
        """central difference of :func:`eval_F` in :math:`Q`"""
        gp = eval_F(Q + step, f, M=M).g
        gm = eval_F(Q - step, f, M=M).g
        return (gp - gm) / (2.0 * step)

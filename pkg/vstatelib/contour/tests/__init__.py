# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""Shared fixtures for the :mod:`vstatelib.contour` test suite."""
__all__ = ['TestBase']

import numpy as np
import unittest as ut

from ..boundary import (BoundaryMap, PerturbationCoeffs)


class TestBase(ut.TestCase):
    """Base test case with a few reference boundary maps."""

    @staticmethod
    def make_map(Q: float, modes: dict = None, N: int = 8) -> BoundaryMap:
        modes = {} if modes is None else modes
        return BoundaryMap(Q, PerturbationCoeffs.from_modes(modes, N))

    @staticmethod
    def random_map(Q: float, N: int, size: float,
                   seed: int = 0) -> BoundaryMap:
        """
        Map with random coefficients scaled so that
        :math:`\\sum n |a_n| = ` :code:`size`.
        """
        rng = np.random.RandomState(seed)
        a = rng.standard_normal(N) * 0.7 ** np.arange(N)
        a *= size / np.sum(np.arange(2, N + 2) * np.abs(a))
        return BoundaryMap(Q, PerturbationCoeffs(a))

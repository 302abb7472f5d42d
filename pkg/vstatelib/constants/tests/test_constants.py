# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
import astropy.units as u
import math
import unittest as ut

from astropy.constants import Constant
from vstatelib.constants import (asymptotic_alpha,
                                 first_bifurcation_aspect_ratio)
from vstatelib.constants.constants import VStateConstant


class TestConstants(ut.TestCase):
    """
    Test V-state constants. (:mod:`vstatelib.constants.constants`)
    """

    def test_VStateConstant(self):
        self.assertTrue(issubclass(VStateConstant, Constant))
        self.assertEqual(
            VStateConstant.default_reference,
            'Rotating vortex patches near Kirchhoff ellipses')

    def test_asymptotic_alpha(self):
        self.assertIsInstance(asymptotic_alpha, VStateConstant)
        self.assertEqual(asymptotic_alpha.unit, u.dimensionless_unscaled)
        alpha = asymptotic_alpha.value
        self.assertAlmostEqual(alpha, 1.27846, places=5)
        self.assertLess(abs(1.0 + math.exp(-alpha) - alpha), 1e-14)

        # independent bisection on the same scalar equation
        lo, hi = 1.0, 2.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if 1.0 + math.exp(-mid) - mid > 0.0:
                lo = mid
            else:
                hi = mid
        self.assertAlmostEqual(alpha, 0.5 * (lo + hi), places=13)

    def test_first_bifurcation_aspect_ratio(self):
        self.assertIsInstance(first_bifurcation_aspect_ratio,
                              VStateConstant)
        self.assertEqual(first_bifurcation_aspect_ratio.value, 3.0)
        self.assertEqual(first_bifurcation_aspect_ratio.unit,
                         u.dimensionless_unscaled)


if __name__ == '__main__':
    ut.main()

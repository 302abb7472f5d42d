# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
import math
import warnings

import astropy.units as u

from astropy.constants import Constant
from astropy.utils.exceptions import AstropyWarning
from scipy.optimize import brentq


class VStateConstant(Constant):
    """V-state problem constant"""
    default_reference = 'Rotating vortex patches near Kirchhoff ellipses'
    _registry = {}
    _has_incompatible_units = set()

    def __new__(cls, abbrev, name, value, unit, uncertainty,
                reference=default_reference, system=None):
        return super().__new__(cls, abbrev, name, value, unit,
                               uncertainty, reference, system)


def _solve_alpha(xtol=1e-15) -> float:
    """
    Root of :math:`1 + e^{-\\alpha} - \\alpha = 0`.  The left side is
    :math:`1` at :math:`\\alpha=1` and :math:`e^{-2}-1 < 0` at
    :math:`\\alpha=2`, so the root is bracketed by :math:`[1, 2]`.
    """
    return brentq(lambda x: 1.0 + math.exp(-x) - x, 1.0, 2.0, xtol=xtol)


with warnings.catch_warnings():
    warnings.simplefilter('ignore', AstropyWarning)

    #: V-state Constant: :math:`\alpha` solving
    #: :math:`1 + e^{-\alpha} - \alpha = 0`, so that the bifurcation
    #: parameters behave as :math:`Q_m \approx 1 - \alpha / m`
    asymptotic_alpha = VStateConstant(
        'asymptotic_alpha', 'Large-m bifurcation constant',
        _solve_alpha(), u.dimensionless_unscaled, 1e-15, system=None)
    asymptotic_alpha.__doc__ += (
        ": root of 1 + exp(-alpha) - alpha = 0, Q_m ~ 1 - alpha/m")

    #: V-state Constant: aspect ratio :math:`a/b` of the Kirchhoff
    #: ellipse at the first (:math:`m=3`) bifurcation
    first_bifurcation_aspect_ratio = VStateConstant(
        'first_bifurcation_aspect_ratio',
        'Aspect ratio of the first bifurcating ellipse', 3.0,
        u.dimensionless_unscaled, 0.0, system=None)
    first_bifurcation_aspect_ratio.__doc__ += (
        ": the m = 3 branch leaves the ellipse family at a/b = 3")

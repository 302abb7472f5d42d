# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""
The :mod:`vstatelib.contour` package holds the spectral description of
patch boundaries (:mod:`~vstatelib.contour.boundary`) and the trapezoid
contour integrals over the unit circle
(:mod:`~vstatelib.contour.quadrature`).
"""
__all__ = ['boundary', 'quadrature',
           'BoundaryMap', 'EllipseParam', 'Grid', 'GridSamples',
           'PerturbationCoeffs', 'QuadratureRule']

from . import (boundary, quadrature)
from .boundary import (BoundaryMap, EllipseParam, Grid, GridSamples,
                       PerturbationCoeffs)
from .quadrature import QuadratureRule

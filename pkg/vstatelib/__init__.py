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
This is the vstatelib package, a Python toolkit for computing rotating
vortex patches (V-states) of the 2D Euler equations near the Kirchhoff
ellipses.  Boundaries are conformal maps :math:`w + Q/w + f(w)` of the
unit circle, and all operators are assembled from spectrally accurate
trapezoid integrals over the circle.
"""
__all__ = ['constants', 'contour', 'utils', 'vstate']

from . import (constants, contour, utils, vstate)

__version__ = '0.1.0'

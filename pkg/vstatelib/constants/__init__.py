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
A package of named mathematical constants for the V-state problem.
"""
__all__ = ['constants', 'asymptotic_alpha',
           'first_bifurcation_aspect_ratio']

from . import constants
from .constants import (asymptotic_alpha, first_bifurcation_aspect_ratio)

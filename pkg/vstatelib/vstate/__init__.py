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
The :mod:`vstatelib.vstate` package holds the V-state functional and
everything built on it: Kirchhoff ellipse relations
(:mod:`~vstatelib.vstate.core`), the functional
(:mod:`~vstatelib.vstate.functional`), its linearizations
(:mod:`~vstatelib.vstate.linop`), the dispersion set
(:mod:`~vstatelib.vstate.spectrum`) and branch continuation
(:mod:`~vstatelib.vstate.continuation`).
"""
__all__ = ['continuation', 'core', 'functional', 'linop', 'spectrum',
           'Branch', 'BranchConfig', 'BranchPoint', 'BifurcationPoint',
           'LinearOperatorMatrix', 'Linearization', 'ResidualSpectrum',
           'RotationSpeed', 'eval_F', 'eval_G', 'find_Qm', 'trace_branch']

from . import (continuation, core, functional, linop, spectrum)
from .continuation import (Branch, BranchConfig, BranchPoint,
                           trace_branch)
from .core import RotationSpeed
from .functional import (ResidualSpectrum, eval_F, eval_G)
from .linop import (LinearOperatorMatrix, Linearization)
from .spectrum import (BifurcationPoint, find_Qm)

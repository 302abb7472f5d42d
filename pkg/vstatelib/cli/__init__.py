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
Command-line interface of :mod:`vstatelib` (console script
:code:`vstate`).
"""
__all__ = ['main', 'manifest', 'RunManifest']

from . import (main, manifest)
from .manifest import RunManifest

# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#


class VStateWarning(UserWarning):
    """Base warning for :mod:`vstatelib`."""
    pass


class CoercivityWarning(VStateWarning):
    """Warning for perturbations outside the provable coercivity ball."""
    pass


class RotationSpeedWarning(VStateWarning):
    """Warning for angular velocities outside (0, 1/2)."""
    pass


class TruncationWarning(VStateWarning):
    """Warning for residual energy beyond the retained modes."""
    pass


class BranchWarning(VStateWarning):
    """Warning for step rejection and partial branches."""
    pass

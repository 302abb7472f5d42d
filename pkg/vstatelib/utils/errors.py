# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#


class VStateError(Exception):
    """Base exception for :mod:`vstatelib`."""
    pass


class GridError(VStateError):
    """Exception for invalid or mismatched sampling grids."""
    pass


class KernelBoundError(GridError):
    """Exception for kernels that are not bounded on the grid."""
    def __init__(self, peak: float, bound: float):
        super().__init__(
            "kernel peak {:.3e} exceeds bound {:.3e}, kernel is not "
            "bounded on the sampling grid".format(peak, bound))
        self.peak = peak
        self.bound = bound


class CoercivityError(VStateError):
    """
    Exception for boundary maps that left the regime where the contour
    integrals are well conditioned.
    """
    def __init__(self, why='', ratio=None):
        msg = 'boundary map failed coercivity check'
        if why != '':
            msg += ': ' + why
        super().__init__(msg)
        self.ratio = ratio


class SymmetryError(VStateError):
    """Exception for residuals with a cosine component."""
    def __init__(self, cos_energy: float, tol: float):
        super().__init__(
            "Im G has cosine energy {:.3e} > {:.1e}, the real-coefficient "
            "symmetry is broken".format(cos_energy, tol))
        self.cos_energy = cos_energy


class RangeError(VStateError):
    """Exception for right-hand sides outside the operator range."""
    pass


class ConvergenceError(VStateError):
    """Exception for a Newton iteration that failed to converge."""
    def __init__(self, why: str, residual=float('nan'), iterations=0):
        super().__init__(why + ' (residual {:.3e} after {} '
                               'iterations)'.format(residual, iterations))
        self.residual = residual
        self.iterations = iterations


class ToleranceError(VStateError):
    """Exception for a numerical check that breached its tolerance."""
    def __init__(self, failed, report=None):
        super().__init__('tolerance breached for: ' + ', '.join(failed))
        self.failed = tuple(failed)
        self.report = report

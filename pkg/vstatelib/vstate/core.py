# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""Kirchhoff ellipse relations."""
__all__ = ['RotationSpeed', 'aspect_param', 'ellipse_G_imag',
           'kirchhoff_omega', 'omega_from_axes', 'semi_axes']

import numpy as np
import warnings

from typing import (Tuple, Union)

from ..utils.warnings import RotationSpeedWarning


class RotationSpeed(float):
    """
    Angular velocity :math:`\\Omega` of a rigidly rotating patch.  Values
    outside :math:`(0, 1/2)` are accepted but flagged with a
    :class:`~vstatelib.utils.warnings.RotationSpeedWarning`.
    """

    def __new__(cls, value):
        obj = super().__new__(cls, value)
        if not 0.0 < obj < 0.5:
            warnings.warn(
                'rotation speed {} is outside of (0, 1/2)'.format(value),
                RotationSpeedWarning)
        return obj

    def __init__(self, value):
        super().__init__()


def aspect_param(a: float, b: float) -> float:
    """
    Aspect parameter of an ellipse with semi-axes :math:`a \\geq b > 0`

    .. math::

        Q = \\frac{a - b}{a + b}
    """
    if not a >= b > 0:
        raise ValueError('semi-axes must satisfy a >= b > 0')
    return (a - b) / (a + b)


def semi_axes(Q: float) -> Tuple[float, float]:
    """Semi-axes :math:`(1+Q, 1-Q)` of the ellipse :math:`w + Q/w`."""
    return 1.0 + Q, 1.0 - Q


def kirchhoff_omega(Q: float) -> RotationSpeed:
    """
    Angular velocity of the Kirchhoff ellipse

    .. math::

        \\Omega = \\frac{1 - Q^2}{4}
    """
    return RotationSpeed(0.25 * (1.0 - Q * Q))


def omega_from_axes(a: float, b: float) -> RotationSpeed:
    """
    Angular velocity of the Kirchhoff ellipse with semi-axes :math:`a, b`

    .. math::

        \\Omega = \\frac{ab}{(a+b)^2}
    """
    return RotationSpeed(a * b / (a + b) ** 2)


def ellipse_G_imag(Q: float, omega: float,
                   w: Union[complex, np.ndarray]) -> np.ndarray:
    """
    Imaginary part of the contour functional on the ellipse rotating at
    an arbitrary speed :math:`\\Omega`,

    .. math::

        \\Im\\, G(\\Omega, w + Q/w) = Q (4\\Omega + Q^2 - 1)\\, \\Im(w^2)

    which vanishes exactly at the Kirchhoff speed.
    """
    return Q * (4.0 * omega + Q * Q - 1.0) * np.imag(np.asarray(w) ** 2)

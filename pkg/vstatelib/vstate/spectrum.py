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
Dispersion set, kernels and ranges of the linearization at the ellipse.

The ellipse :math:`w + Q/w` can only lose its uniqueness as a V-state at
the roots :math:`Q_m \\in (0, 1)` of

.. math::

    f_m(Q) = 1 + Q^m - \\frac{1 - Q^2}{2} m, \\quad m \\geq 3

where :math:`\\lambda_m(Q_m) = 0` and the kernel of
:math:`\\mathcal{L}_{Q_m}` is spanned by
:math:`v_m(w) = w^{m+1} / (1 - Q_m w^2)`.
"""
__all__ = ['BifurcationPoint', 'dispersion_value', 'find_Qm', 'in_range',
           'kernel_vector', 'range_solve', 'transversality',
           'truncation_bound']

import numpy as np

from typing import Union

from ..contour.boundary import PerturbationCoeffs
from ..utils.errors import RangeError
from .core import kirchhoff_omega
from .functional import ResidualSpectrum
from .linop import (OPERATOR_SIGN, eigenvalue)


class BifurcationPoint(object):
    """A bifurcation point :math:`(m, Q_m)` of the ellipse family."""

    def __init__(self, m: int, Q_m: float, lambda_residual: float):
        """
        :param int m: fold index :math:`\\geq 3`
        :param float Q_m: root of :math:`f_m` in :math:`(0, 1)`
        :param float lambda_residual: achieved :math:`|f_m(Q_m)|`
        """
        self._m = int(m)
        self._Q_m = float(Q_m)
        self._lambda_residual = float(lambda_residual)

    @property
    def m(self) -> int:
        return self._m

    @property
    def Q_m(self) -> float:
        return self._Q_m

    @property
    def lambda_residual(self) -> float:
        return self._lambda_residual

    @property
    def aspect_ratio(self) -> float:
        """semi-axis ratio :math:`(1+Q_m)/(1-Q_m)`"""
        return (1.0 + self._Q_m) / (1.0 - self._Q_m)

    @property
    def omega(self) -> float:
        """Kirchhoff speed at the bifurcation"""
        return float(kirchhoff_omega(self._Q_m))

    @property
    def transversality(self) -> float:
        return transversality(self._m, self._Q_m)

    @property
    def info(self) -> dict:
        return {'m': self._m,
                'Q_m': self._Q_m,
                'f_residual': self._lambda_residual,
                'transversality': self.transversality}

    def __repr__(self):
        return 'BifurcationPoint(m={}, Q_m={!r})'.format(self._m,
                                                         self._Q_m)


def _check_fold(m: int):
    if not isinstance(m, (int, np.integer)) or m < 3:
        raise ValueError('fold index m must be an integer >= 3, '
                         'got {!r}'.format(m))


def dispersion_value(m: int, Q: float) -> float:
    """
    .. math::

        f_m(Q) = 1 + Q^m - \\frac{1 - Q^2}{2} m

    :math:`f_m(0) = 1 - m/2 < 0` and :math:`f_m(1) = 2`.
    """
    _check_fold(m)
    if not 0.0 <= Q <= 1.0:
        raise ValueError('Q = {} is not in [0, 1]'.format(Q))
    return 1.0 + Q ** m - 0.5 * (1.0 - Q * Q) * m


def find_Qm(m: int, bisection_steps: int = 60,
            newton_steps: int = 5) -> BifurcationPoint:
    """
    Root :math:`Q_m` of :func:`dispersion_value` in :math:`(0, 1)`.
    :math:`f_m` increases strictly on :math:`[0, 1]`, so the root is
    unique; it is bracketed by bisection and polished by Newton steps
    with :math:`f_m'(Q) = m Q^{m-1} + m Q`.

    :Example:

        >>> find_Qm(3).Q_m
        0.5
    """
    _check_fold(m)
    lo, hi = 0.0, 1.0
    Q = 0.5
    for _ in range(bisection_steps):
        Q = 0.5 * (lo + hi)
        val = dispersion_value(m, Q)
        if val == 0.0:
            break
        if val < 0.0:
            lo = Q
        else:
            hi = Q

    res = abs(dispersion_value(m, Q))
    for _ in range(newton_steps):
        if res == 0.0:
            break
        step = dispersion_value(m, Q) / (m * Q ** (m - 1) + m * Q)
        trial = Q - step
        if not 0.0 < trial < 1.0:
            break
        trial_res = abs(dispersion_value(m, trial))
        if trial_res >= res:
            break
        Q, res = trial, trial_res
    return BifurcationPoint(m, Q, res)


def kernel_vector(m: int, Q: float, N: int) -> PerturbationCoeffs:
    """
    Truncation of :math:`v_m(w) = \\sum_{k \\geq 0} Q^k w^{m+1+2k}` to
    :math:`N` modes.
    """
    _check_fold(m)
    if m + 1 > N + 1:
        raise ValueError('N = {} modes cannot hold w^{}'.format(N, m + 1))
    a = np.zeros(N)
    idx = np.arange(m + 1, N + 2, 2)
    a[idx - 2] = Q ** np.arange(idx.size)
    return PerturbationCoeffs(a)


def truncation_bound(m: int, Q: float, N: int) -> float:
    """
    Size :math:`Q^{(N-m)/2} |\\lambda_N(Q)|` of the first kernel
    coefficient dropped by :func:`kernel_vector`, times the operator
    weight it would meet.
    """
    return Q ** (0.5 * (N - m)) * abs(eigenvalue(N, Q))


def transversality(m: int, Q_m: float) -> float:
    """
    :math:`e_m`-component of :math:`(\\partial_Q \\mathcal{L}_Q) v_m` at
    :math:`Q_m`,

    .. math::

        \\pm m (Q_m + Q_m^{m-1})

    with the sign of :data:`~vstatelib.vstate.linop.OPERATOR_SIGN`.  It
    never vanishes, so the bifurcation is transversal.
    """
    _check_fold(m)
    return OPERATOR_SIGN * (-m * (Q_m + Q_m ** (m - 1)))


def in_range(g: Union[ResidualSpectrum, np.ndarray], m: int,
             tol: float = 1e-12) -> bool:
    """:code:`True` if :math:`|g_m| \\leq` :code:`tol`."""
    if isinstance(g, ResidualSpectrum):
        g = g.g
    return bool(abs(g[m - 1]) <= tol)


def range_solve(m: int, Q_m: float, g: Union[ResidualSpectrum, np.ndarray],
                tol: float = 1e-12) -> PerturbationCoeffs:
    """
    Pre-image of :code:`g` under :math:`\\mathcal{L}_{Q_m}` with
    :math:`a_{m+1} = 0`.  The first two rows give :math:`a_2, a_3` and
    the remaining rows the two-term recursion

    .. math::

        a_{n+1} = Q a_{n-1} + \\frac{g_n}{\\sigma \\lambda_n(Q)},
        \\quad n \\neq m

    with :math:`\\sigma` = :data:`~vstatelib.vstate.linop.OPERATOR_SIGN`.

    :raises ~vstatelib.utils.errors.RangeError: :math:`|g_m| > ` tol
    """
    _check_fold(m)
    if isinstance(g, ResidualSpectrum):
        g = g.g
    g = np.asarray(g, dtype=np.float64)
    N = g.size
    if N < m:
        raise ValueError('need at least N = m = {} coefficients'.format(m))
    if not in_range(g, m, tol):
        raise RangeError(
            'g_{} = {:.3e} is not in the range of the linearization at '
            'Q_{}'.format(m, g[m - 1], m))

    Q = float(Q_m)
    a = np.zeros(N + 2)  # a[k] holds a_k, k = 0 ... N+1
    a[2] = g[0] / (OPERATOR_SIGN * -0.5 * (1.0 + Q) ** 2)
    a[3] = g[1] / (OPERATOR_SIGN * -2.0 * Q * Q)
    for n in range(3, N + 1):
        if n == m:
            a[n + 1] = 0.0
            continue
        a[n + 1] = Q * a[n - 1] + g[n - 1] / (OPERATOR_SIGN
                                              * eigenvalue(n, Q))
    return PerturbationCoeffs(a[2:])

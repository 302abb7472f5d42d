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
The V-state contour functional.

A patch with boundary :math:`\\Phi(\\mathbb{T})` rotates rigidly with
angular velocity :math:`\\Omega` iff

.. math::

    \\Im\\, G(\\Omega, \\Phi)(w) = 0, \\quad
    G(\\Omega, \\Phi)(w) = \\left(2\\Omega\\overline{\\Phi(w)}
    + \\fint \\frac{\\overline{\\Phi(\\xi)} - \\overline{\\Phi(w)}}
    {\\Phi(\\xi) - \\Phi(w)} \\Phi'(\\xi)\\, d\\xi \\right) w \\Phi'(w)

for all :math:`w \\in \\mathbb{T}`.  With the speed slaved to the
Kirchhoff value :math:`\\Omega = (1-Q^2)/4` this defines
:math:`F(Q, f) = \\Im\\, G(\\Omega, w + Q/w + f)`, which vanishes
identically along the ellipse family :math:`f = 0`.
"""
__all__ = ['ResidualSpectrum', 'eval_F', 'eval_G', 'sine_coefficients']

import numpy as np

from typing import (Iterable, Tuple, Union)

from ..contour.boundary import (BoundaryMap, EllipseParam, Grid,
                                GridSamples, PerturbationCoeffs,
                                eval_map, eval_map_derivative,
                                min_grid_size)
from ..contour.quadrature import cauchy_pair_integral
from ..utils.errors import (GridError, SymmetryError)
from .core import (RotationSpeed, kirchhoff_omega)


class ResidualSpectrum(object):
    """
    Coefficients :math:`g_n` (:math:`n = 1, \\ldots, N`) of a real odd
    function in the basis :math:`e_n(w) = \\Im(w^n)`.
    """

    def __init__(self, g: Iterable[float], tail_norm: float = 0.0,
                 cos_energy: float = 0.0):
        """
        :param g: coefficients :math:`(g_1, \\ldots, g_N)`
        :param float tail_norm: :math:`\\ell^2` norm of the coefficients
            beyond :math:`N` that were resolved by the sampling grid
        :param float cos_energy: :math:`\\ell^2` norm of the cosine
            component that was discarded
        """
        g = np.array(g, dtype=np.float64)
        if g.ndim != 1:
            raise ValueError('residual spectrum must be 1D')
        if tail_norm < 0.0 or cos_energy < 0.0:
            raise ValueError('norms must be non-negative')
        g.setflags(write=False)
        self._g = g
        self._tail_norm = float(tail_norm)
        self._cos_energy = float(cos_energy)

    @property
    def g(self) -> np.ndarray:
        """coefficients :math:`(g_1, \\ldots, g_N)` (read-only)"""
        return self._g

    @property
    def N(self) -> int:
        return self._g.size

    @property
    def tail_norm(self) -> float:
        return self._tail_norm

    @property
    def cos_energy(self) -> float:
        return self._cos_energy

    @property
    def sup_norm(self) -> float:
        """:math:`\\max_n |g_n|`"""
        return float(np.max(np.abs(self._g))) if self.N else 0.0

    def coeff(self, n: int) -> float:
        """:math:`g_n`, zero for modes that are not stored"""
        if 1 <= n <= self.N:
            return float(self._g[n - 1])
        return 0.0

    def __repr__(self):
        return 'ResidualSpectrum(N={}, sup={:.3e}, tail={:.3e})'.format(
            self.N, self.sup_norm, self._tail_norm)


def sine_coefficients(
        samples: Union[GridSamples, np.ndarray], grid: Grid,
        N: int) -> Tuple[np.ndarray, Union[float, np.ndarray],
                         Union[float, np.ndarray]]:
    """
    Project real samples onto :math:`e_n = \\Im(w^n) = \\sin(n\\theta)`.

    With Laurent coefficients :math:`\\hat{s}_n` of the samples (phase
    corrected on half-offset grids) the sine and cosine coefficients are
    :math:`g_n = -2\\Im \\hat{s}_n` and :math:`c_n = 2\\Re \\hat{s}_n`.

    :param samples: real samples, shape :code:`(M,)` or :code:`(M, K)`
        for :code:`K` functions at once
    :param grid: sampling grid
    :param int N: number of sine coefficients to return
    :return: :code:`(g, cos_energy, tail_norm)` where :code:`g` has
        shape :code:`(N,)` or :code:`(N, K)`, :code:`cos_energy` is the
        :math:`\\ell^2` norm of :math:`(\\hat{s}_0, c_1, c_2, \\ldots)`
        and :code:`tail_norm` the :math:`\\ell^2` norm of
        :math:`g_n` for :math:`N < n < M/2`
    """
    if isinstance(samples, GridSamples):
        samples = samples.values
    samples = np.asarray(samples)
    if np.iscomplexobj(samples):
        raise TypeError('sine coefficients need real samples')
    half = grid.M // 2
    if N >= half:
        raise GridError('grid of size {} resolves fewer than N = {} sine '
                        'modes'.format(grid.M, N))

    s_hat = grid.analyze(samples, axis=0)[:half]
    g_all = -2.0 * s_hat.imag[1:]
    cos = 2.0 * s_hat.real[1:]
    cos_energy = np.sqrt(s_hat.real[0] ** 2 + np.sum(cos ** 2, axis=0))
    tail_norm = np.sqrt(np.sum(g_all[N:] ** 2, axis=0))
    g = g_all[:N]
    if samples.ndim == 1:
        return g, float(cos_energy), float(tail_norm)
    return g, cos_energy, tail_norm


def eval_G(omega: float, b: BoundaryMap, targets: Grid, M: int = None,
           guard: str = 'strict') -> GridSamples:
    """
    Samples of the contour functional

    .. math::

        G(\\Omega, \\Phi)(w) = \\left(2 \\Omega \\overline{\\Phi(w)}
        + G_2(w)\\right) w \\Phi'(w)

    at the targets, evaluated in this direct form.  At
    :math:`\\Omega = (1-Q^2)/4` the term :math:`2 \\Omega \\overline{\\Phi}
    w \\Phi'` equals the polynomial part

    .. math::

        G_1(Q, f)(w) = \\frac{1 - Q^2}{2} \\left[1 + Qw^2 + w f(\\bar{w})
        \\right] \\left[1 - Q\\bar{w}^2 + f'(w)\\right]

    so the samples are the same as those of :math:`G_1 + w \\Phi' G_2`.

    :param omega: angular velocity :math:`\\Omega`
    :param b: boundary map
    :param targets: target grid (half-offset for the default quadrature)
    :param int M: number of quadrature nodes, defaults to
        :code:`targets.M`
    :param str guard: boundary check policy
    """
    if not isinstance(omega, RotationSpeed):
        omega = RotationSpeed(omega)
    g2 = cauchy_pair_integral(b, targets, M=M, guard=guard).values
    phi = eval_map(b, targets).values
    dphi = eval_map_derivative(b, targets).values
    G = (2.0 * omega * np.conj(phi) + g2) * targets.nodes * dphi
    return GridSamples(G, targets)


def eval_F(Q: float, f: PerturbationCoeffs, M: int = None,
           guard: str = 'strict', cos_tol: float = 1e-10) -> ResidualSpectrum:
    """
    Sine spectrum of :math:`F(Q, f) = \\Im\\, G((1-Q^2)/4, w + Q/w + f)`.

    :param Q: ellipse parameter
    :param f: perturbation coefficients, :math:`N` modes
    :param int M: grid size, defaults to the smallest power of two
        :math:`\\geq 4(N+1)`
    :param str guard: boundary check policy
    :param float cos_tol: largest admissible cosine energy
    :raises ~vstatelib.utils.errors.SymmetryError: the samples have a
        cosine component above :code:`cos_tol`
    """
    Q = EllipseParam(Q)
    b = BoundaryMap(Q, f)
    if M is None:
        M = min_grid_size(b.N)
    targets = Grid(M, offset=True)
    G = eval_G(kirchhoff_omega(Q), b, targets, M=M, guard=guard)
    g, cos_energy, tail_norm = sine_coefficients(G.values.imag, targets,
                                                 b.N)
    if cos_energy > cos_tol:
        raise SymmetryError(cos_energy, cos_tol)
    return ResidualSpectrum(g, tail_norm=tail_norm, cos_energy=cos_energy)

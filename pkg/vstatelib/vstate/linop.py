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
Linearizations of the V-state functional :math:`F(Q, f)`.

The perturbation :math:`f = \\sum_{k=2}^{N+1} a_k w^k` is the input and
the sine spectrum :math:`(g_1, \\ldots, g_N)` of :math:`F` the output,
so every operator is a real :math:`N \\times N` matrix with row
:math:`n-1` for :math:`e_n` and column :math:`k-2` for :math:`a_k`.

At :math:`f = 0` the linearization acts as

.. math::

    \\mathcal{L}_Q h = \\frac{(1+Q)^2}{2} a_2 e_1 + 2 Q^2 a_3 e_2
    - \\sum_{n \\geq 3} \\lambda_n(Q) (a_{n+1} - Q a_{n-1}) e_n,
    \\quad \\lambda_n(Q) = \\frac{1-Q^2}{2} n - 1 - Q^n

The overall sign is recorded in :data:`OPERATOR_SIGN` relative to the
table :math:`g_1 = -\\frac{1}{2}(1+Q)^2 a_2`,
:math:`g_2 = -2Q^2 a_3`, :math:`g_n = \\lambda_n (a_{n+1} - Q a_{n-1})`.
"""
__all__ = ['OPERATOR_SIGN', 'LinearOperatorMatrix', 'Linearization',
           'assemble_jacobian', 'closed_form_LQ', 'dQ_functional',
           'dQ_jacobian_integral', 'dQ_of_LQ_closed', 'eigenvalue']

import numpy as np

from typing import (Iterable, Union)

from ..contour.boundary import (BoundaryMap, EllipseParam, Grid,
                                PerturbationCoeffs, check_boundary,
                                eval_map, eval_map_derivative,
                                min_grid_size)
from ..contour.quadrature import (bounded_kernel_integral,
                                  difference_kernel_integral, pair_kernel)
from .core import kirchhoff_omega
from .functional import (ResidualSpectrum, sine_coefficients)

#: sign of the derivative of :func:`~vstatelib.vstate.functional.eval_F`
#: relative to the coefficient table in the module docstring
OPERATOR_SIGN = -1


def eigenvalue(n: Union[int, np.ndarray], Q: float):
    """
    .. math::

        \\lambda_n(Q) = \\frac{1 - Q^2}{2} n - 1 - Q^n

    vanishes at :math:`n = m` exactly when :math:`Q` is the bifurcation
    parameter :math:`Q_m`.
    """
    return 0.5 * (1.0 - Q * Q) * n - 1.0 - Q ** n


class LinearOperatorMatrix(object):
    """Dense real matrix of a linearization of :math:`F`."""

    def __init__(self, entries: np.ndarray, Q: float, f_norm: float = 0.0):
        """
        :param entries: :math:`N \\times N` real matrix
        :param float Q: ellipse parameter of the base point
        :param float f_norm: :math:`\\sup |f'|` of the base point
        """
        entries = np.array(entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError('operator matrix must be square')
        entries.setflags(write=False)
        self._entries = entries
        self._Q = float(Q)
        self._f_norm = float(f_norm)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def Q(self) -> float:
        return self._Q

    @property
    def f_norm(self) -> float:
        return self._f_norm

    @property
    def N(self) -> int:
        return self._entries.shape[0]

    def apply(self, a: Union[PerturbationCoeffs, np.ndarray]) -> np.ndarray:
        """Matrix-vector product with the coefficients :math:`a_k`."""
        if isinstance(a, PerturbationCoeffs):
            a = a.a
        return self._entries @ np.asarray(a)

    def band_mask(self) -> np.ndarray:
        """
        Boolean mask of the entries :math:`(e_n, a_{n \\pm 1})` that the
        linearization at :math:`f = 0` may occupy.
        """
        i, j = np.indices(self._entries.shape)
        return (j == i) | (j == i - 2)

    def __repr__(self):
        return 'LinearOperatorMatrix(N={}, Q={})'.format(self.N, self._Q)


def _check_modes(N: int):
    if N < 3:
        raise ValueError('need at least N = 3 modes, got {}'.format(N))


def closed_form_LQ(Q: float, N: int) -> LinearOperatorMatrix:
    """
    Closed form of :math:`\\partial_f F(Q, 0)`.

    :param float Q: ellipse parameter
    :param int N: number of modes, :math:`\\geq 3`
    """
    Q = EllipseParam(Q)
    _check_modes(N)
    mat = np.zeros((N, N))
    mat[0, 0] = -0.5 * (1.0 + Q) ** 2
    mat[1, 1] = -2.0 * Q * Q
    n = np.arange(3, N + 1)
    lam = eigenvalue(n, Q)
    mat[n - 1, n - 1] = lam
    mat[n - 1, n - 3] = -Q * lam
    return LinearOperatorMatrix(OPERATOR_SIGN * mat, Q)


def dQ_of_LQ_closed(Q: float, N: int) -> LinearOperatorMatrix:
    """
    Entrywise :math:`Q`-derivative of :func:`closed_form_LQ`, using
    :math:`\\lambda_n'(Q) = -nQ - nQ^{n-1}`.
    """
    Q = EllipseParam(Q)
    _check_modes(N)
    mat = np.zeros((N, N))
    mat[0, 0] = -(1.0 + Q)
    mat[1, 1] = -4.0 * Q
    n = np.arange(3, N + 1)
    lam = eigenvalue(n, Q)
    dlam = -n * Q - n * Q ** (n - 1)
    mat[n - 1, n - 1] = dlam
    mat[n - 1, n - 3] = -(lam + Q * dlam)
    return LinearOperatorMatrix(OPERATOR_SIGN * mat, Q)


class _Directions(object):
    """
    Samples of monomial directions :math:`h = w^k` at the nodes
    (:code:`*_s`) and targets (:code:`*_t`): :math:`h`,
    :math:`h(\\bar{w})` and :math:`h'`.
    """

    def __init__(self, nodes: Grid, targets: Grid, freqs: Iterable[int]):
        freqs = np.asarray(freqs, dtype=np.int64)
        self.h_s = nodes.powers(freqs)
        self.hbar_s = np.conj(self.h_s)
        self.dh_s = freqs[None, :] * nodes.powers(freqs - 1)
        self.h_t = targets.powers(freqs)
        self.hbar_t = np.conj(self.h_t)
        self.dh_t = freqs[None, :] * targets.powers(freqs - 1)


class _KernelBlock(object):
    """Pair kernels between all nodes and one block of target rows."""

    def __init__(self, rows: slice, phi_s: np.ndarray, phi_t: np.ndarray):
        self.rows = rows
        D, self.K1 = pair_kernel(phi_s, phi_t[rows])
        self.inv_D = 1.0 / D


class Linearization(object):
    """
    Contour data of :math:`\\Phi = w + Q/w + f` for Gateaux derivatives
    of :math:`G`.  The variation of :math:`\\Phi` along a real direction
    :math:`h` changes the Cauchy-pair integral :math:`G_2` by

    .. math::

        DG_2[h](w) = \\fint \\frac{h(\\bar{\\xi}) - h(\\bar{w})}{D}
        \\Phi'(\\xi) - \\frac{h(\\xi) - h(w)}{D} K_1 \\Phi'(\\xi)
        + K_1 h'(\\xi) \\, d\\xi

    with :math:`D = \\Phi(\\xi) - \\Phi(w)` and
    :math:`K_1 = (\\Phi(\\bar{\\xi}) - \\Phi(\\bar{w}))/D`.  Moving
    :math:`Q` is the direction :math:`h = 1/w`.

    The :math:`T \\times M` kernels are never held in full; they are
    rebuilt for :code:`block_rows` targets at a time, so memory stays
    at :math:`O(\\text{block\\_rows} \\cdot M + M N)`.
    """

    def __init__(self, Q: float, f: PerturbationCoeffs, M: int = None,
                 guard: str = 'strict', block_rows: int = 512):
        """
        :param float Q: ellipse parameter
        :param f: perturbation of the base point
        :param int M: grid size, defaults to the smallest power of two
            :math:`\\geq 4(N+1)`
        :param str guard: boundary check policy
        :param int block_rows: target rows per kernel block
        """
        if block_rows < 1:
            raise ValueError('block_rows must be >= 1')
        self.Q = EllipseParam(Q)
        self.b = BoundaryMap(self.Q, f)
        self.N = f.N
        self.indices = f.indices
        self.M = min_grid_size(self.N) if M is None else M
        self.block_rows = int(block_rows)
        self.nodes = Grid(self.M)
        self.targets = Grid(self.M, offset=True)
        report = check_boundary(self.b, M=self.M, guard=guard)
        self.f_norm = report['sup_fprime']
        self.omega = kirchhoff_omega(self.Q)

        self.phi_s = eval_map(self.b, self.nodes).values
        self.dphi_s = eval_map_derivative(self.b, self.nodes).values
        self.phi_t = eval_map(self.b, self.targets).values
        self.cphi_t = np.conj(self.phi_t)
        self.dphi_t = eval_map_derivative(self.b, self.targets).values
        self.w = self.targets.nodes

        rho = self.dphi_s * self.nodes.nodes / self.M
        self.G2 = np.empty(self.targets.M, dtype=np.complex128)
        for blk in self.blocks():
            self.G2[blk.rows] = blk.K1 @ rho

    def blocks(self):
        """Iterate over the :class:`_KernelBlock` of all targets."""
        T = self.targets.M
        for start in range(0, T, self.block_rows):
            rows = slice(start, min(start + self.block_rows, T))
            yield _KernelBlock(rows, self.phi_s, self.phi_t)

    def directions(self, freqs: Iterable[int]) -> _Directions:
        return _Directions(self.nodes, self.targets, freqs)

    def dG2(self, h: _Directions, blk: _KernelBlock) -> np.ndarray:
        """:math:`DG_2[h]` on the rows of :code:`blk`"""
        rows = blk.rows
        i2 = difference_kernel_integral(blk.inv_D, self.dphi_s,
                                        h.hbar_s, h.hbar_t[rows])
        i3 = difference_kernel_integral(-blk.K1 * blk.inv_D, self.dphi_s,
                                        h.h_s, h.h_t[rows])
        i1 = bounded_kernel_integral(blk.K1, h.dh_s, self.targets,
                                     rows=rows)
        return i1 + i2 + i3

    def dG(self, h: _Directions) -> np.ndarray:
        """:math:`DG[h]` at fixed :math:`\\Omega`, shape (T, K)"""
        w = self.w[:, None]
        wdphi = w * self.dphi_t[:, None]
        out = 2.0 * self.omega * (h.hbar_t * wdphi
                                  + self.cphi_t[:, None] * w * h.dh_t)
        out += w * h.dh_t * self.G2[:, None]
        for blk in self.blocks():
            out[blk.rows] += wdphi[blk.rows] * self.dG2(h, blk)
        return out

    def d2G2(self, h: _Directions, k: _Directions,
             blk: _KernelBlock) -> np.ndarray:
        """:math:`D^2 G_2[h, k]` on the rows of :code:`blk` for a single
        direction :code:`k`"""
        rows = blk.rows
        k_s, kbar_s, pk = k.h_s[:, 0], k.hbar_s[:, 0], k.dh_s[:, 0]
        k_t, kbar_t = k.h_t[rows, 0], k.hbar_t[rows, 0]
        E1 = (k_s[None, :] - k_t[:, None]) * blk.inv_D
        E2 = (kbar_s[None, :] - kbar_t[:, None]) * blk.inv_D
        P = self.dphi_s[None, :]
        K1 = blk.K1

        base_a = blk.inv_D * (pk[None, :] - E1 * P)
        base_b = blk.inv_D * (2.0 * K1 * E1 * P - E2 * P
                              - K1 * pk[None, :])
        out = difference_kernel_integral(base_a, None, h.hbar_s,
                                         h.hbar_t[rows])
        out += difference_kernel_integral(base_b, None, h.h_s, h.h_t[rows])
        out += bounded_kernel_integral(E2 - K1 * E1, h.dh_s, self.targets,
                                       rows=rows)
        return out

    def d2G(self, h: _Directions, k: _Directions) -> np.ndarray:
        """:math:`D^2 G[h, k]` at fixed :math:`\\Omega`, shape (T, K)"""
        w = self.w[:, None]
        out = 2.0 * self.omega * (h.hbar_t * w * k.dh_t
                                  + k.hbar_t * w * h.dh_t)
        for blk in self.blocks():
            rows = blk.rows
            wr = w[rows]
            out[rows] += wr * h.dh_t[rows] * self.dG2(k, blk)
            out[rows] += wr * k.dh_t[rows] * self.dG2(h, blk)
            out[rows] += (wr * self.dphi_t[rows, None]
                          * self.d2G2(h, k, blk))
        return out

    def omega_term(self, h: _Directions) -> np.ndarray:
        """:math:`\\partial_\\Omega DG[h] = 2 (h(\\bar{w}) w \\Phi' +
        \\overline{\\Phi} w h')`"""
        w = self.w[:, None]
        return 2.0 * (h.hbar_t * w * self.dphi_t[:, None]
                      + self.cphi_t[:, None] * w * h.dh_t)

    def sine(self, values: np.ndarray) -> np.ndarray:
        g, _, _ = sine_coefficients(values.imag, self.targets, self.N)
        return g

    def jacobian(self) -> np.ndarray:
        """matrix of :math:`\\partial_f F`"""
        return self.sine(self.dG(self.directions(self.indices)))

    def dQ_values(self) -> np.ndarray:
        """samples of :math:`DG[1/w] - Q \\overline{\\Phi} w \\Phi'`"""
        k = self.directions([-1])
        return (self.dG(k)[:, 0]
                - self.Q * self.cphi_t * self.w * self.dphi_t)

    def dQ_jacobian(self) -> np.ndarray:
        """matrix of :math:`\\partial_Q \\partial_f F`"""
        h = self.directions(self.indices)
        k = self.directions([-1])
        cols = self.d2G(h, k) - 0.5 * self.Q * self.omega_term(h)
        return self.sine(cols)


def assemble_jacobian(Q: float, f: PerturbationCoeffs, M: int = None,
                      guard: str = 'strict') -> LinearOperatorMatrix:
    """
    Jacobian :math:`\\partial_f F(Q, f)` assembled from the contour
    integrals.  Column :math:`k-2` is the sine spectrum of
    :math:`\\Im\\, DG[w^k]` with

    .. math::

        DG[h] = 2\\Omega \\left(h(\\bar{w}) w \\Phi'(w)
        + \\overline{\\Phi(w)} w h'(w)\\right) + w h'(w) G_2(w)
        + w \\Phi'(w) DG_2[h](w)

    :param Q: ellipse parameter
    :param f: perturbation of the base point
    :param int M: grid size, defaults to the smallest power of two
        :math:`\\geq 4(N+1)`
    :param str guard: boundary check policy
    """
    lin = Linearization(Q, f, M=M, guard=guard)
    return LinearOperatorMatrix(lin.jacobian(), lin.Q, f_norm=lin.f_norm)


def dQ_functional(Q: float, f: PerturbationCoeffs, M: int = None,
                  guard: str = 'strict') -> ResidualSpectrum:
    """
    :math:`\\partial_Q F(Q, f)` as a sine spectrum.  :math:`Q` moves the
    map along :math:`1/w` and the slaved speed by
    :math:`d\\Omega/dQ = -Q/2`.
    """
    lin = Linearization(Q, f, M=M, guard=guard)
    g, _, tail = sine_coefficients(lin.dQ_values().imag, lin.targets,
                                   lin.N)
    return ResidualSpectrum(g, tail_norm=tail)


def dQ_jacobian_integral(Q: float, f: PerturbationCoeffs, M: int = None,
                         guard: str = 'strict') -> LinearOperatorMatrix:
    """
    Mixed derivative :math:`\\partial_Q \\partial_f F(Q, f)` assembled
    from the contour integrals, including the slaved speed term
    :math:`\\frac{d\\Omega}{dQ} \\partial_\\Omega DG`.
    """
    lin = Linearization(Q, f, M=M, guard=guard)
    return LinearOperatorMatrix(lin.dQ_jacobian(), lin.Q,
                                f_norm=lin.f_norm)

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
Mean-value contour integrals over the unit circle.

All integrals are of the form

.. math::

    \\fint_{\\mathbb{T}} F(\\xi)\\, d\\xi
    = \\frac{1}{2 \\pi i} \\int_{\\mathbb{T}} F(\\xi)\\, d\\xi
    \\approx \\frac{1}{M} \\sum_{j=0}^{M-1} F(\\xi_j) \\xi_j

evaluated with the periodic trapezoid rule on the integer grid.  Kernels
with a removable diagonal singularity are sampled with targets on the
half-offset grid, so the diagonal is never touched.
"""
__all__ = ['QuadratureRule', 'bounded_kernel_integral',
           'cauchy_pair_integral', 'difference_kernel_integral',
           'mean_integral', 'pair_kernel']

import numpy as np

from typing import Union

from ..utils.errors import (GridError, KernelBoundError)
from .boundary import (BoundaryMap, Grid, GridSamples, check_boundary,
                       eval_map, eval_map_derivative)

#: number of target rows processed per block
_BLOCK_ROWS = 512


class QuadratureRule(object):
    """
    Trapezoid rule with :math:`M` nodes :math:`\\xi_j` (integer grid)
    and a target grid, half-offset by default.
    """

    def __init__(self, M: int, target_offset: bool = True,
                 n_targets: int = None):
        """
        :param int M: number of quadrature nodes
        :param bool target_offset: place targets on the half-offset grid
        :param int n_targets: number of targets (defaults to :code:`M`)
        """
        self._nodes = Grid(M)
        self._targets = Grid(M if n_targets is None else n_targets,
                             offset=target_offset)

    @property
    def M(self) -> int:
        return self._nodes.M

    @property
    def nodes(self) -> Grid:
        return self._nodes

    @property
    def targets(self) -> Grid:
        return self._targets

    @property
    def target_offset(self) -> bool:
        return self._targets.offset

    @property
    def weights(self) -> np.ndarray:
        """:math:`\\xi_j / M`, so that :math:`\\fint F = \\sum w_j F_j`"""
        return self._nodes.nodes / self.M

    def is_staggered(self) -> bool:
        """
        :code:`True` if no target coincides with a node.  Half-offset
        targets of size :math:`T` avoid the :math:`M` nodes iff
        :math:`M \\leq T`.
        """
        return self._targets.offset and self.M <= self._targets.M


def mean_integral(f_samples: GridSamples) -> complex:
    """
    Trapezoid approximation of :math:`\\fint f(\\xi)\\, d\\xi`, i.e. the
    coefficient of :math:`\\xi^{-1}` of :math:`f`.  Exact for
    :math:`f = \\xi^k` with :math:`|k| \\leq M-2`.

    :param f_samples: samples on the integer grid
    """
    if f_samples.offset:
        raise GridError('mean_integral needs samples on the integer grid')
    w = f_samples.nodes
    return complex(np.dot(f_samples.values, w) / f_samples.M)


def _quadrature_weights(M: int) -> np.ndarray:
    return Grid(M).nodes / M


def pair_kernel(phi_src: np.ndarray, phi_tgt: np.ndarray):
    """
    Difference matrix :math:`D = \\Phi(\\xi_j) - \\Phi(w_i)` and the
    Cauchy-pair kernel

    .. math::

        K_1(\\xi, w) = \\frac{\\Phi(\\bar{\\xi}) - \\Phi(\\bar{w})}
        {\\Phi(\\xi) - \\Phi(w)}

    for source samples :code:`phi_src` (length :math:`M`) and target
    samples :code:`phi_tgt` (length :math:`T`), both of shape
    :code:`(T, M)`.  Sources and targets must not coincide.
    """
    D = phi_src[None, :] - phi_tgt[:, None]
    K1 = (np.conj(phi_src)[None, :] - np.conj(phi_tgt)[:, None]) / D
    return D, K1


def bounded_kernel_integral(
        kernel: np.ndarray, density: Union[GridSamples, np.ndarray],
        targets: Grid, max_kernel: float = None,
        rows: slice = None) -> Union[GridSamples, np.ndarray]:
    """
    Apply :func:`mean_integral` row-wise to a bounded kernel,

    .. math::

        \\text{out}(w_i) = \\frac{1}{M} \\sum_j K(\\xi_j, w_i)
        \\rho(\\xi_j) \\xi_j

    :param kernel: samples :math:`K(\\xi_j, w_i)`, shape :code:`(T, M)`
    :param density: :math:`\\rho` on the integer grid, either
        :class:`GridSamples` or an array of shape :code:`(M, K)` holding
        :code:`K` densities as columns
    :param targets: target grid of size :code:`T`
    :param max_kernel: largest admissible :math:`|K|`, defaults to
        :math:`M/(2\\pi)` (half the peak of a Cauchy kernel
        :math:`1/(\\xi - w)` sampled on staggered grids)
    :param rows: block of target rows held by :code:`kernel`, for
        kernels assembled a block at a time (stacked densities only)
    :return: :class:`GridSamples` on :code:`targets`, or a
        :code:`(T, K)` array for stacked densities
    :raises ~vstatelib.utils.errors.KernelBoundError: the kernel is not
        bounded on the grid
    """
    kernel = np.asarray(kernel)
    if isinstance(density, GridSamples):
        if density.offset:
            raise GridError('density must live on the integer grid')
        rho = density.values
    else:
        rho = np.asarray(density)
    T, M = kernel.shape
    if rows is not None and rho.ndim == 1:
        raise GridError('a block of rows needs stacked densities')
    n_rows = targets.M if rows is None else len(range(targets.M)[rows])
    if rho.shape[0] != M or T != n_rows:
        raise GridError(
            'kernel of shape {} does not match {} density samples and {} '
            'targets'.format(kernel.shape, rho.shape[0], targets.M))

    bound = M / (2.0 * np.pi) if max_kernel is None else max_kernel
    peak = float(np.max(np.abs(kernel)))
    if peak > bound:
        raise KernelBoundError(peak, bound)

    wq = _quadrature_weights(M)
    if rho.ndim == 1:
        return GridSamples(kernel @ (rho * wq), targets)
    return kernel @ (rho * wq[:, None])


def difference_kernel_integral(base: np.ndarray, density: np.ndarray,
                               src: np.ndarray,
                               tgt: np.ndarray) -> np.ndarray:
    """
    Evaluate

    .. math::

        \\fint B(\\xi, w) \\left(h(\\xi) - h(w)\\right) \\rho(\\xi)\\, d\\xi

    for many directions :math:`h` at once.  The trapezoid sum is split
    algebraically as :math:`A h_{src} - h_{tgt} (A 1)` with
    :math:`A_{ij} = B(\\xi_j, w_i) \\rho(\\xi_j) \\xi_j / M`, which equals
    the sum over the removable kernel :math:`B (h(\\xi) - h(w))` term by
    term.

    :param base: :math:`B(\\xi_j, w_i)`, shape :code:`(T, M)`
    :param density: :math:`\\rho(\\xi_j)`, shape :code:`(M,)`, or
        :code:`None` when already folded into :code:`base`
    :param src: :math:`h(\\xi_j)`, shape :code:`(M,)` or :code:`(M, K)`
    :param tgt: :math:`h(w_i)`, shape :code:`(T,)` or :code:`(T, K)`
    :return: shape :code:`(T,)` or :code:`(T, K)`
    """
    T, M = base.shape
    src = np.asarray(src)
    tgt = np.asarray(tgt)
    if src.shape[0] != M or tgt.shape[0] != T or src.ndim != tgt.ndim:
        raise GridError('direction samples do not match kernel shape '
                        '{}'.format(base.shape))
    wq = _quadrature_weights(M)
    if density is not None:
        wq = wq * density
    A = base * wq[None, :]
    row_sum = A.sum(axis=1)
    if src.ndim == 1:
        return A @ src - tgt * row_sum
    return A @ src - tgt * row_sum[:, None]


def cauchy_pair_integral(b: BoundaryMap, targets: Grid, M: int = None,
                         mode: str = 'staggered',
                         guard: str = 'strict') -> GridSamples:
    """
    Evaluate the Cauchy-pair integral

    .. math::

        G_2(w) = \\fint \\frac{\\Phi(\\bar{\\xi}) - \\Phi(\\bar{w})}
        {\\Phi(\\xi) - \\Phi(w)} \\Phi'(\\xi)\\, d\\xi

    at each target.  For the ellipse :math:`G_2(w) = (Q^2 - 1)/w`.

    :param b: boundary map
    :param targets: target grid
    :param int M: number of quadrature nodes, defaults to
        :code:`targets.M`
    :param str mode: :code:`'staggered'` (targets must avoid the nodes)
        or :code:`'diagonal'` (targets are the nodes and the diagonal
        uses the limit :math:`-\\bar{w}^2 \\overline{\\Phi'(w)}/\\Phi'(w)`)
    :param str guard: boundary check policy, see
        :func:`~vstatelib.contour.boundary.check_boundary`
    """
    nodes = Grid(targets.M if M is None else M)
    if mode == 'staggered':
        rule = QuadratureRule(nodes.M, target_offset=targets.offset,
                              n_targets=targets.M)
        if not rule.is_staggered():
            raise GridError(
                '{!r} is not staggered against {} quadrature nodes, use '
                "mode='diagonal' for same-grid targets".format(targets,
                                                               nodes.M))
    elif mode == 'diagonal':
        if targets != nodes:
            raise GridError("mode='diagonal' needs targets on the node "
                            'grid')
    else:
        raise ValueError(
            "mode must be 'staggered' or 'diagonal', got {!r}".format(mode))
    check_boundary(b, M=nodes.M, guard=guard)

    phi_s = eval_map(b, nodes).values
    rho = eval_map_derivative(b, nodes).values * _quadrature_weights(
        nodes.M)
    phi_t = eval_map(b, targets).values
    if mode == 'diagonal':
        dphi_t = eval_map_derivative(b, targets).values
        w = targets.nodes
        diag = -np.conj(w) ** 2 * np.conj(dphi_t) / dphi_t

    out = np.empty(targets.M, dtype=np.complex128)
    for start in range(0, targets.M, _BLOCK_ROWS):
        rows = slice(start, min(start + _BLOCK_ROWS, targets.M))
        if mode == 'diagonal':
            with np.errstate(divide='ignore', invalid='ignore'):
                _, K1 = pair_kernel(phi_s, phi_t[rows])
            idx = np.arange(rows.start, rows.stop)
            K1[idx - rows.start, idx] = diag[rows]
        else:
            _, K1 = pair_kernel(phi_s, phi_t[rows])
        out[rows] = K1 @ rho
    return GridSamples(out, targets)

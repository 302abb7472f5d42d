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
Spectral representation of patch boundaries.

A patch boundary is the image of the unit circle :math:`\\mathbb{T}`
under the conformal map

.. math::

    \\Phi(w) = w + \\frac{Q}{w} + \\sum_{n=2}^{N+1} a_n w^n

where :math:`w + Q/w` traces the ellipse with semi-axes :math:`1+Q` and
:math:`1-Q` and the real coefficients :math:`a_n` form the perturbation
:math:`f(w)`.
"""
__all__ = ['BoundaryMap', 'EllipseParam', 'Grid', 'GridSamples',
           'PerturbationCoeffs', 'boundary_curve', 'check_boundary',
           'chord_arc_constant', 'coercivity_guard', 'conjugate_samples',
           'eval_map', 'eval_map_derivative', 'min_grid_size']

import numpy as np
import warnings

from scipy import fft
from typing import (Dict, Iterable, Tuple, Union)

from ..utils.errors import (CoercivityError, GridError)
from ..utils.warnings import CoercivityWarning


def _is_power_of_two(n: int) -> bool:
    return isinstance(n, (int, np.integer)) and n > 0 and (n & (n - 1)) == 0


def min_grid_size(N: int, factor: int = 4) -> int:
    """
    Smallest power of two :math:`\\geq` :code:`factor * (N + 1)`.

    :param int N: number of perturbation modes
    :param int factor: oversampling factor
    """
    size = 4
    while size < factor * (N + 1):
        size *= 2
    return size


class EllipseParam(float):
    """
    Aspect parameter :math:`Q = (a-b)/(a+b)` of a Kirchhoff ellipse with
    semi-axes :math:`a \\geq b`.  Must satisfy :math:`0 < Q < 1`.
    """

    def __new__(cls, Q):
        value = float(Q)
        if not 0.0 < value < 1.0:
            raise ValueError(
                'ellipse parameter Q = {} is not in (0, 1)'.format(Q))
        return super().__new__(cls, value)

    def __init__(self, Q):
        super().__init__()

    @property
    def semi_axes(self) -> Tuple[float, float]:
        """semi-axes :math:`(1+Q, 1-Q)` of the normalized ellipse"""
        return 1.0 + self, 1.0 - self

    @property
    def radius(self) -> float:
        """bi-Lipschitz radius :math:`(1-Q)/2` of perturbations"""
        return 0.5 * (1.0 - self)


class PerturbationCoeffs(object):
    """
    Real coefficients :math:`a_n` (:math:`n = 2, \\ldots, N+1`) of the
    boundary perturbation :math:`f(w) = \\sum a_n w^n`.  Instances are
    immutable.
    """

    def __init__(self, a: Iterable[float]):
        """
        :param a: coefficients :math:`(a_2, \\ldots, a_{N+1})`
        """
        a = np.asarray(a)
        if a.ndim != 1 or a.size == 0:
            raise ValueError('coefficients must be a non-empty 1D array')
        if np.iscomplexobj(a):
            if np.any(a.imag != 0.0):
                raise TypeError('perturbation coefficients must be real')
            a = a.real
        a = np.array(a, dtype=np.float64)
        if not np.all(np.isfinite(a)):
            raise ValueError('perturbation coefficients must be finite')
        a.setflags(write=False)
        self._a = a

    @classmethod
    def zeros(cls, N: int) -> 'PerturbationCoeffs':
        """The unperturbed ellipse with :code:`N` modes."""
        return cls(np.zeros(N))

    @classmethod
    def from_modes(cls, modes: Dict[int, float],
                   N: int) -> 'PerturbationCoeffs':
        """
        Build from a :code:`{n: a_n}` dictionary.

        :Example:

            >>> PerturbationCoeffs.from_modes({3: 0.1}, N=4).a
            array([0. , 0.1, 0. , 0. ])
        """
        a = np.zeros(N)
        for n, val in modes.items():
            if not 2 <= n <= N + 1:
                raise ValueError(
                    'mode {} outside of 2 ... {}'.format(n, N + 1))
            a[n - 2] = val
        return cls(a)

    @property
    def a(self) -> np.ndarray:
        """coefficients :math:`(a_2, \\ldots, a_{N+1})` (read-only)"""
        return self._a

    @property
    def N(self) -> int:
        """number of modes"""
        return self._a.size

    @property
    def indices(self) -> np.ndarray:
        """mode indices :math:`2, \\ldots, N+1`"""
        return np.arange(2, self.N + 2)

    def coeff(self, n: int) -> float:
        """:math:`a_n`, zero for modes that are not stored"""
        if 2 <= n <= self.N + 1:
            return float(self._a[n - 2])
        return 0.0

    def resized(self, N: int) -> 'PerturbationCoeffs':
        """Zero-pad or truncate to :code:`N` modes."""
        a = np.zeros(N)
        n = min(N, self.N)
        a[:n] = self._a[:n]
        return PerturbationCoeffs(a)

    def sup_derivative_bound(self) -> float:
        """:math:`\\sum n |a_n|`, an upper bound of :math:`\\sup |f'|`"""
        return float(np.sum(self.indices * np.abs(self._a)))

    def __len__(self):
        return self.N

    def __eq__(self, other):
        if not isinstance(other, PerturbationCoeffs):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __repr__(self):
        return 'PerturbationCoeffs(N={})'.format(self.N)


class BoundaryMap(object):
    """
    Conformal parametrization :math:`\\Phi = \\alpha_Q + f` of a patch
    boundary.
    """

    def __init__(self, ellipse: Union[EllipseParam, float],
                 pert: PerturbationCoeffs):
        """
        :param ellipse: ellipse parameter :math:`Q`
        :param pert: perturbation coefficients
        """
        if not isinstance(ellipse, EllipseParam):
            ellipse = EllipseParam(ellipse)
        if not isinstance(pert, PerturbationCoeffs):
            pert = PerturbationCoeffs(pert)
        self._ellipse = ellipse
        self._pert = pert
        self._scale = 1.0

    @classmethod
    def kirchhoff(cls, Q: float, N: int = 1) -> 'BoundaryMap':
        """The Kirchhoff ellipse :math:`\\alpha_Q` (zero perturbation)."""
        return cls(Q, PerturbationCoeffs.zeros(N))

    @property
    def ellipse(self) -> EllipseParam:
        return self._ellipse

    @property
    def Q(self) -> EllipseParam:
        """ellipse parameter"""
        return self._ellipse

    @property
    def pert(self) -> PerturbationCoeffs:
        return self._pert

    @property
    def N(self) -> int:
        return self._pert.N

    @property
    def scale(self) -> float:
        """dilation factor applied to :math:`\\Phi`"""
        return self._scale

    def scaled(self, s: float) -> 'BoundaryMap':
        """
        Return the dilated map :math:`s \\Phi`.  Only used to exercise
        the dilation invariance of the contour functional; dilated maps
        are not members of the normalized family :math:`\\alpha_Q + f`.
        """
        if s <= 0.0:
            raise ValueError('dilation factor must be positive')
        new = BoundaryMap(self._ellipse, self._pert)
        new._scale = self._scale * float(s)
        return new

    def __repr__(self):
        return 'BoundaryMap(Q={!r}, N={})'.format(float(self.Q), self.N)


class Grid(object):
    """
    Uniform grid of :math:`M` points on the unit circle, either the
    integer grid :math:`w_j = e^{2\\pi i j/M}` or the half-offset grid
    :math:`w_j = e^{2\\pi i (j+1/2)/M}`.
    """

    def __init__(self, M: int, offset: bool = False):
        """
        :param int M: number of points, a power of two :math:`\\geq 4`
        :param bool offset: :code:`True` for the half-offset grid
        """
        if not _is_power_of_two(M) or M < 4:
            raise GridError(
                'grid size M = {} is not a power of two >= 4'.format(M))
        self._M = int(M)
        self._offset = bool(offset)

    @property
    def M(self) -> int:
        return self._M

    @property
    def offset(self) -> bool:
        return self._offset

    @property
    def shift(self) -> float:
        """fractional index shift, 0 or 1/2"""
        return 0.5 if self._offset else 0.0

    @property
    def angles(self) -> np.ndarray:
        """node angles :math:`\\theta_j` in :math:`[0, 2\\pi)`"""
        return 2.0 * np.pi * (np.arange(self._M) + self.shift) / self._M

    @property
    def nodes(self) -> np.ndarray:
        """complex nodes :math:`w_j`"""
        return np.exp(1j * self.angles)

    def powers(self, freqs: Iterable[int]) -> np.ndarray:
        """
        Matrix :math:`w_j^k` of shape :code:`(M, len(freqs))`, evaluated
        as :math:`e^{i k \\theta_j}` with the phase reduced modulo
        :math:`M` (exact for every integer :math:`k`).
        """
        freqs = np.asarray(freqs, dtype=np.int64)
        idx = 2 * np.outer(np.arange(self._M), freqs) % (2 * self._M)
        phase = idx + (2.0 * self.shift) * freqs[None, :]
        return np.exp(1j * np.pi * phase / self._M)

    def synthesize(self, freqs: Iterable[int],
                   coeffs: Iterable[complex]) -> np.ndarray:
        """
        Evaluate the Laurent polynomial :math:`\\sum c_k w^k` at the grid
        nodes by an inverse FFT.  Frequencies may be negative or exceed
        :math:`M`; the half-offset phase :math:`e^{i\\pi k/M}` is applied
        per signed frequency.
        """
        freqs = np.asarray(freqs, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        if freqs.shape != coeffs.shape:
            raise ValueError('freqs and coeffs must have the same shape')
        coeff_grid = np.zeros(self._M, dtype=np.complex128)
        if self._offset:
            coeffs = coeffs * np.exp(1j * np.pi * freqs / self._M)
        np.add.at(coeff_grid, freqs % self._M, coeffs)
        return fft.ifft(coeff_grid) * self._M

    def analyze(self, samples: np.ndarray, axis: int = 0) -> np.ndarray:
        """
        Laurent coefficients :math:`\\hat{c}_k` of grid samples, in FFT
        order with signed frequencies :attr:`frequencies`, such that
        :code:`samples = sum(c_k * w**k)`.
        """
        samples = np.asarray(samples)
        if samples.shape[axis] != self._M:
            raise GridError('samples of length {} do not live on a grid of '
                            'size {}'.format(samples.shape[axis], self._M))
        coeffs = fft.fft(samples, axis=axis) / self._M
        if self._offset:
            shape = [1] * coeffs.ndim
            shape[axis] = self._M
            phase = np.exp(-1j * np.pi * self.frequencies / self._M)
            coeffs = coeffs * phase.reshape(shape)
        return coeffs

    @property
    def frequencies(self) -> np.ndarray:
        """signed integer frequencies in FFT order"""
        return np.rint(fft.fftfreq(self._M) * self._M).astype(np.int64)

    def staggered(self) -> 'Grid':
        """grid of the same size with the opposite offset"""
        return Grid(self._M, offset=not self._offset)

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self._M == other._M and self._offset == other._offset

    def __hash__(self):
        return hash((self._M, self._offset))

    def __repr__(self):
        return 'Grid(M={}, offset={})'.format(self._M, self._offset)


class GridSamples(object):
    """Complex samples of a boundary quantity on a :class:`Grid`."""

    def __init__(self, values: np.ndarray, grid: Grid):
        values = np.array(values)
        if values.shape != (grid.M,):
            raise GridError(
                'expected {} samples, got shape {}'.format(grid.M,
                                                          values.shape))
        values.setflags(write=False)
        self._values = values
        self._grid = grid

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def offset(self) -> bool:
        return self._grid.offset

    @property
    def M(self) -> int:
        return self._grid.M

    @property
    def nodes(self) -> np.ndarray:
        return self._grid.nodes

    def conj(self) -> 'GridSamples':
        return GridSamples(np.conj(self._values), self._grid)

    def __len__(self):
        return self._grid.M

    def __repr__(self):
        return 'GridSamples({!r})'.format(self._grid)


def _check_aliasing(b: BoundaryMap, grid: Grid):
    if grid.M < 2 * (b.N + 1):
        raise GridError(
            'grid size M = {} aliases a map with N = {} modes, need '
            'M >= {}'.format(grid.M, b.N, 2 * (b.N + 1)))


def eval_map(b: BoundaryMap, grid: Grid) -> GridSamples:
    """
    Samples of :math:`\\Phi(w_j) = w_j + Q/w_j + \\sum a_n w_j^n`.

    :param b: boundary map
    :param grid: sampling grid, :math:`M \\geq 2(N+1)`
    """
    _check_aliasing(b, grid)
    freqs = np.concatenate(([1, -1], b.pert.indices))
    coeffs = np.concatenate(([1.0, float(b.Q)], b.pert.a)) * b.scale
    return GridSamples(grid.synthesize(freqs, coeffs), grid)


def eval_map_derivative(b: BoundaryMap, grid: Grid) -> GridSamples:
    """
    Samples of :math:`\\Phi'(w_j) = 1 - Q/w_j^2 + \\sum n a_n w_j^{n-1}`.
    """
    _check_aliasing(b, grid)
    idx = b.pert.indices
    freqs = np.concatenate(([0, -2], idx - 1))
    coeffs = np.concatenate(([1.0, -float(b.Q)], idx * b.pert.a)) * b.scale
    return GridSamples(grid.synthesize(freqs, coeffs), grid)


def conjugate_samples(b: BoundaryMap, grid: Grid) -> GridSamples:
    """
    Samples of :math:`\\Phi(\\overline{w_j})`.  Real coefficients give
    :math:`\\Phi(\\bar{w}) = \\overline{\\Phi(w)}` on the circle, so this
    is the elementwise conjugate of :func:`eval_map`.
    """
    return eval_map(b, grid).conj()


def _fprime_samples(b: BoundaryMap, grid: Grid) -> np.ndarray:
    idx = b.pert.indices
    return grid.synthesize(idx - 1, idx * b.pert.a)


def coercivity_guard(b: BoundaryMap,
                     margin: float = 0.05) -> Tuple[bool, dict]:
    """
    Check that the perturbation stays inside the bi-Lipschitz regime

    .. math::

        \\sup_{w \\in \\mathbb{T}} |f'(w)| \\leq \\frac{1-Q}{2}
        (1 - \\text{margin})

    where :math:`\\frac{1-Q}{2}|w - \\xi| \\leq |\\Phi(w) - \\Phi(\\xi)|`
    is guaranteed.  The supremum is taken on a 4x oversampled grid.

    :param b: boundary map
    :param float margin: safety margin in :math:`[0, 1)`
    :return: (passed, report) where report holds :code:`'ratio'`
        (:math:`\\sup |f'| / ((1-Q)/2)`), :code:`'sup_fprime'`,
        :code:`'radius'` and :code:`'margin'`
    """
    if not 0.0 <= margin < 1.0:
        raise ValueError('margin must be in [0, 1)')
    radius = b.Q.radius
    if np.any(b.pert.a != 0.0):
        grid = Grid(min_grid_size(b.N, factor=8))
        sup_fprime = float(np.max(np.abs(_fprime_samples(b, grid))))
    else:
        sup_fprime = 0.0
    ratio = sup_fprime / radius
    report = {'ratio': ratio,
              'sup_fprime': sup_fprime,
              'radius': radius,
              'margin': margin}
    return ratio <= 1.0 - margin, report


def chord_arc_constant(b: BoundaryMap, M: int = None) -> float:
    """
    Discrete lower bi-Lipschitz constant of the normalized map

    .. math::

        \\min_{j, k} \\frac{|\\Phi(\\xi_j) - \\Phi(w_k)|}{|\\xi_j - w_k|}

    between the integer grid :math:`\\xi_j` and the half-offset grid
    :math:`w_k` of size :code:`M`, together with the pointwise limit
    :math:`\\min |\\Phi'|`.
    """
    if M is None:
        M = min_grid_size(b.N)
    b = b.scaled(1.0 / b.scale)
    src = Grid(M)
    tgt = src.staggered()
    phi_s = eval_map(b, src).values
    phi_t = eval_map(b, tgt).values
    chord = np.abs(phi_s[None, :] - phi_t[:, None])
    arc = np.abs(src.nodes[None, :] - tgt.nodes[:, None])
    ratio = float(np.min(chord / arc))
    dphi = np.abs(eval_map_derivative(b, src).values)
    return min(ratio, float(np.min(dphi)))


def check_boundary(b: BoundaryMap, M: int = None, guard: str = 'strict',
                   margin: float = 0.05, chord_floor: float = 0.05) -> dict:
    """
    Gate for operations that need a well conditioned boundary.

    * :code:`guard='strict'` requires :func:`coercivity_guard`.
    * :code:`guard='relaxed'` accepts a failed guard (issuing a
      :class:`~vstatelib.utils.warnings.CoercivityWarning`) as long as
      :func:`chord_arc_constant` stays above
      :code:`chord_floor * (1-Q)/2`.

    :return: the coercivity report, with :code:`'chord_arc'` added when
        it was computed
    :raises ~vstatelib.utils.errors.CoercivityError: gate failed
    """
    if guard not in ('strict', 'relaxed'):
        raise ValueError(
            "guard must be 'strict' or 'relaxed', got {!r}".format(guard))
    passed, report = coercivity_guard(b, margin=margin)
    if passed:
        return report

    if guard == 'strict':
        raise CoercivityError(
            'sup|f\'| is {:.3f} of the radius (1-Q)/2, allowed {:.3f}; '
            'reduce the perturbation (e.g. a smaller eps_step) or use '
            "guard='relaxed'".format(report['ratio'], 1.0 - margin),
            ratio=report['ratio'])

    chord = chord_arc_constant(b, M)
    report['chord_arc'] = chord
    floor = chord_floor * b.Q.radius
    if chord < floor:
        raise CoercivityError(
            'chord-arc constant {:.3e} below floor {:.3e}; the boundary '
            'is close to self-intersecting or forming a cusp, reduce '
            'eps_step'.format(chord, floor),
            ratio=report['ratio'])
    warnings.warn(
        'sup|f\'| is {:.3f} of the coercivity radius, continuing with '
        'chord-arc constant {:.3e}'.format(report['ratio'], chord),
        CoercivityWarning)
    return report


def boundary_curve(b: BoundaryMap,
                   n_theta: int = None) -> Tuple[np.ndarray, np.ndarray,
                                                np.ndarray]:
    """
    Trace of the patch boundary for plotting.

    :param b: boundary map
    :param int n_theta: number of samples (power of two), defaults to
        the larger of 512 and the alias-free size for the map
    :return: :code:`(theta, x, y)` arrays
    """
    if n_theta is None:
        n_theta = max(512, min_grid_size(b.N, factor=2))
    grid = Grid(n_theta)
    phi = eval_map(b, grid).values
    return grid.angles, phi.real.copy(), phi.imag.copy()

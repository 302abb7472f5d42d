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
Continuation of the V-state branches bifurcating from the ellipse.

Near :math:`(Q_m, 0)` the nontrivial zeros of :math:`F` form a curve

.. math::

    \\varepsilon \\mapsto \\left(Q(\\varepsilon),\;
    \\varepsilon v_m + \\varepsilon \\psi(\\varepsilon)\\right), \\quad
    Q(0) = Q_m, \; \\psi(0) = 0

with :math:`\\psi` in the complement :math:`\\{a_{m+1} = 0\\}` of the
kernel.  The branch is traced in the amplitude
:math:`\\varepsilon = a_{m+1}` by a bordered Newton method.
"""
__all__ = ['Branch', 'BranchConfig', 'BranchPoint', 'bordered_jacobian',
           'half_turn', 'initial_point', 'newton_correct', 'trace_branch',
           'verify_vstate']

import numpy as np
import warnings

from scipy import linalg
from typing import (List, Tuple)

from ..contour.boundary import (BoundaryMap, Grid, PerturbationCoeffs,
                                min_grid_size)
from ..utils.decorators import silenceable
from ..utils.errors import (CoercivityError, ConvergenceError,
                            KernelBoundError)
from ..utils.warnings import (BranchWarning, TruncationWarning)
from .core import kirchhoff_omega
from .functional import (eval_F, eval_G)
from .linop import Linearization
from .spectrum import (BifurcationPoint, find_Qm, kernel_vector)


class BranchPoint(object):
    """One solution :math:`(\\varepsilon, Q, a)` on a V-state branch."""

    def __init__(self, eps: float, Q: float, coeffs: PerturbationCoeffs,
                 residual_inf: float, newton_iters: int, M: int,
                 tail_norm: float = 0.0, verify: float = None):
        """
        :param float eps: amplitude, equal to :math:`a_{m+1}`
        :param float Q: ellipse parameter
        :param coeffs: perturbation coefficients
        :param float residual_inf: :math:`\\max_n |g_n|` at convergence
        :param int newton_iters: Newton iterations used
        :param int M: grid size of the solve
        :param float tail_norm: unresolved residual energy beyond
            :math:`N`
        :param float verify: out-of-sample certificate, see
            :func:`verify_vstate`
        """
        self._eps = float(eps)
        self._Q = float(Q)
        self._coeffs = coeffs
        self._residual_inf = float(residual_inf)
        self._newton_iters = int(newton_iters)
        self._M = int(M)
        self._tail_norm = float(tail_norm)
        self._verify = None if verify is None else float(verify)

    @property
    def eps(self) -> float:
        return self._eps

    @property
    def Q(self) -> float:
        return self._Q

    @property
    def coeffs(self) -> PerturbationCoeffs:
        return self._coeffs

    @property
    def residual_inf(self) -> float:
        return self._residual_inf

    @property
    def newton_iters(self) -> int:
        return self._newton_iters

    @property
    def M(self) -> int:
        return self._M

    @property
    def N(self) -> int:
        return self._coeffs.N

    @property
    def tail_norm(self) -> float:
        return self._tail_norm

    @property
    def verify(self) -> float:
        return self._verify

    @property
    def omega(self) -> float:
        """angular velocity :math:`(1-Q^2)/4`"""
        return float(kirchhoff_omega(self._Q))

    @property
    def boundary(self) -> BoundaryMap:
        return BoundaryMap(self._Q, self._coeffs)

    def with_verify(self, verify: float) -> 'BranchPoint':
        return BranchPoint(self._eps, self._Q, self._coeffs,
                           self._residual_inf, self._newton_iters, self._M,
                           tail_norm=self._tail_norm, verify=verify)

    @property
    def info(self) -> dict:
        return {'eps': self._eps,
                'Q': self._Q,
                'omega': self.omega,
                'coeffs': [float(x) for x in self._coeffs.a],
                'residual': self._residual_inf,
                'verify': self._verify,
                'newton_iters': self._newton_iters,
                'N': self.N,
                'M': self._M}

    def __repr__(self):
        return 'BranchPoint(eps={!r}, Q={!r})'.format(self._eps, self._Q)


class BranchConfig(object):
    """
    Validated settings of a branch trace.  Instances are read-only; use
    :meth:`replace` for variations.
    """

    def __init__(self, m: int = 3, N: int = 128, M: int = 512,
                 eps_max: float = 0.03, eps_step: float = 0.00375,
                 newton_tol: float = 1e-10, newton_max_iters: int = 25,
                 verify_refine_factor: int = 4, direction: int = 1,
                 max_halvings: int = 5, tail_tol: float = 1e-8,
                 max_modes: int = 512, verify_tol: float = None,
                 guard: str = 'relaxed', allow_large_m: bool = False):
        """
        :param int m: fold index of the branch
        :param int N: number of perturbation modes
        :param int M: grid size
        :param float eps_max: largest amplitude :math:`|\\varepsilon|`
        :param float eps_step: amplitude step
        :param float newton_tol: solver tolerance on :math:`\\max|g_n|`
        :param int newton_max_iters: Newton iterations per point
        :param int verify_refine_factor: grid refinement of
            :func:`verify_vstate`, a power of two :math:`\\geq 4`
        :param int direction: :code:`+1` or :code:`-1`, sign of
            :math:`\\varepsilon`
        :param int max_halvings: consecutive step halvings before the
            trace gives up
        :param float tail_tol: largest admissible unresolved residual
            energy before the modes are doubled
        :param int max_modes: cap on the number of modes
        :param float verify_tol: certificate threshold, defaults to
            :code:`10 * newton_tol`
        :param str guard: boundary check policy
        :param bool allow_large_m: allow :math:`m > 64`
        """
        if not isinstance(m, (int, np.integer)) or m < 3:
            raise ValueError('m must be an integer >= 3')
        if m > 64 and not allow_large_m:
            raise ValueError(
                'm = {} > 64 leaves almost no room between Q_m and 1, '
                'pass allow_large_m=True to trace it anyway'.format(m))
        if N < m + 2:
            raise ValueError('N = {} modes cannot hold the kernel of '
                             'm = {}'.format(N, m))
        grid = Grid(M)
        if grid.M < 2 * (N + 1):
            raise ValueError('grid size M = {} aliases N = {} '
                             'modes'.format(M, N))
        if max_modes < N:
            raise ValueError('max_modes must be >= N')
        if not eps_step > 0.0:
            raise ValueError('eps_step must be positive')
        if eps_max < 0.0:
            raise ValueError('eps_max must be non-negative')
        if newton_tol <= 0.0 or newton_max_iters < 1:
            raise ValueError('invalid Newton settings')
        if (verify_refine_factor < 4
                or verify_refine_factor & (verify_refine_factor - 1)):
            raise ValueError('verify_refine_factor must be a power of two '
                             '>= 4')
        if direction not in (1, -1):
            raise ValueError('direction must be +1 or -1')
        if max_halvings < 0:
            raise ValueError('max_halvings must be >= 0')
        if guard not in ('strict', 'relaxed'):
            raise ValueError("guard must be 'strict' or 'relaxed'")
        if verify_tol is None:
            verify_tol = 10.0 * newton_tol

        self._info = {
            'm': int(m),
            'N': int(N),
            'M': int(M),
            'eps_max': float(eps_max),
            'eps_step': float(eps_step),
            'newton_tol': float(newton_tol),
            'newton_max_iters': int(newton_max_iters),
            'verify_refine_factor': int(verify_refine_factor),
            'direction': int(direction),
            'max_halvings': int(max_halvings),
            'tail_tol': float(tail_tol),
            'max_modes': int(max_modes),
            'verify_tol': float(verify_tol),
            'guard': guard,
            'allow_large_m': bool(allow_large_m),
        }

    @property
    def info(self) -> dict:
        """copy of all settings"""
        return dict(self._info)

    def replace(self, **kwargs) -> 'BranchConfig':
        """A new config with some settings changed."""
        settings = self.info
        if 'newton_tol' in kwargs and 'verify_tol' not in kwargs:
            settings['verify_tol'] = None
        settings.update(kwargs)
        return BranchConfig(**settings)

    def __getattr__(self, item):
        if item.startswith('_'):
            raise AttributeError(item)
        try:
            return self._info[item]
        except KeyError:
            raise AttributeError(
                "'BranchConfig' object has no attribute "
                "'{}'".format(item))

    def __repr__(self):
        return 'BranchConfig(m={m}, N={N}, M={M}, eps_max={eps_max}, ' \
               'eps_step={eps_step})'.format(**self._info)


class Branch(object):
    """Result of :func:`trace_branch`."""

    def __init__(self, config: BranchConfig, bifurcation: BifurcationPoint,
                 origin: BranchPoint, points: List[BranchPoint],
                 truncated: bool, diagnostics: dict):
        self._config = config
        self._bifurcation = bifurcation
        self._origin = origin
        self._points = tuple(points)
        self._truncated = bool(truncated)
        self._diagnostics = dict(diagnostics)

    @property
    def config(self) -> BranchConfig:
        return self._config

    @property
    def bifurcation(self) -> BifurcationPoint:
        return self._bifurcation

    @property
    def origin(self) -> BranchPoint:
        """the bifurcation point :math:`(\\varepsilon = 0, Q_m, 0)`"""
        return self._origin

    @property
    def points(self) -> Tuple[BranchPoint, ...]:
        """solutions with :math:`\\varepsilon \\neq 0`, ordered by
        :math:`|\\varepsilon|`"""
        return self._points

    @property
    def truncated(self) -> bool:
        """:code:`True` if the trace stopped before :code:`eps_max`"""
        return self._truncated

    @property
    def diagnostics(self) -> dict:
        return dict(self._diagnostics)

    @property
    def eps(self) -> np.ndarray:
        return np.array([p.eps for p in self._points])

    @property
    def Q(self) -> np.ndarray:
        return np.array([p.Q for p in self._points])

    def extrapolated_gap(self, deg: int = 2, count: int = None) -> float:
        """
        :math:`|Q(0) - Q_m|` from a least-squares polynomial fit of
        :math:`Q(\\varepsilon)` through the :code:`count` points of
        smallest :math:`|\\varepsilon|` (default :code:`deg + 1`).  For
        odd :math:`m` the half-turn maps :math:`\\varepsilon` to
        :math:`-\\varepsilon` at fixed :math:`Q`, so the fit is a
        polynomial in :math:`\\varepsilon^2`.
        """
        count = deg + 1 if count is None else count
        if count < deg + 1 or len(self._points) < count:
            raise ValueError('need at least {} points for a degree {} '
                             'fit'.format(max(count, deg + 1), deg))
        order = np.argsort(np.abs(self.eps))[:count]
        x = self.eps[order]
        if self._bifurcation.m % 2:
            x = x * x
        coef = np.polynomial.polynomial.polyfit(x, self.Q[order], deg)
        return abs(coef[0] - self._bifurcation.Q_m)

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, item):
        return self._points[item]

    def __repr__(self):
        return 'Branch(m={}, points={}, truncated={})'.format(
            self._bifurcation.m, len(self._points), self._truncated)


def half_turn(coeffs: PerturbationCoeffs) -> PerturbationCoeffs:
    """
    Coefficients of the patch rotated by :math:`\\pi`,
    :math:`\\Phi(w) \\mapsto -\\Phi(-w)`, i.e.
    :math:`a_n \\mapsto (-1)^{n+1} a_n`.
    """
    sign = np.where(coeffs.indices % 2 == 0, -1.0, 1.0)
    return PerturbationCoeffs(sign * coeffs.a)


def initial_point(m: int, N: int = 128, M: int = None) -> BranchPoint:
    """
    The bifurcation point :math:`(\\varepsilon, Q, f) = (0, Q_m, 0)` of
    the :math:`m`-th branch.
    """
    bif = find_Qm(m)
    if M is None:
        M = min_grid_size(N)
    return BranchPoint(0.0, bif.Q_m, PerturbationCoeffs.zeros(N), 0.0, 0,
                       M)


def bordered_jacobian(m: int, Q: float, f: PerturbationCoeffs, eps: float,
                      M: int = None,
                      guard: str = 'relaxed') -> Tuple[np.ndarray, float]:
    """
    Bordered Newton matrix in the unknowns :math:`(a_2, \\ldots,
    a_{N+1}, \\varepsilon\\, \\delta Q)`

    .. math::

        \\begin{pmatrix} \\partial_f F & c \\\\
        e_{m+1}^T & 0 \\end{pmatrix}

    where :math:`c = \\partial_Q F(Q, f)/\\varepsilon` for
    :math:`\\varepsilon \\neq 0` and
    :math:`c = \\partial_Q \\partial_f F(Q, f)\\, v_m` at
    :math:`\\varepsilon = 0`.  :math:`\\partial_Q F` vanishes on the
    ellipse family, so scaling the :math:`Q` unknown by
    :math:`\\varepsilon` keeps the matrix regular through the
    bifurcation point; there the :math:`e_m` row of :math:`c` is the
    transversality coefficient.

    :return: :code:`(matrix, condition_number)`
    """
    lin = Linearization(Q, f, M=M, guard=guard)
    N = f.N
    mat = np.zeros((N + 1, N + 1))
    mat[:N, :N] = lin.jacobian()
    if eps != 0.0:
        mat[:N, N] = lin.sine(lin.dQ_values()[:, None])[:, 0] / eps
    else:
        mat[:N, N] = lin.dQ_jacobian() @ kernel_vector(m, Q, N).a
    mat[N, m - 1] = 1.0
    sv = linalg.svdvals(mat)
    cond = np.inf if sv[-1] == 0.0 else float(sv[0] / sv[-1])
    return mat, cond


def newton_correct(m: int, eps: float,
                   guess: Tuple[float, PerturbationCoeffs],
                   M: int = None, tol: float = 1e-10, max_iters: int = 25,
                   guard: str = 'relaxed') -> BranchPoint:
    """
    Solve :math:`F(Q, f) = 0` with :math:`a_{m+1} = \\varepsilon` by
    bordered Newton iteration from :code:`guess`.

    For even :math:`m` the kernel direction holds odd powers only and
    the branch is invariant under :func:`half_turn`; the iterates are
    kept in that subspace (:math:`a_n = 0` for even :math:`n`).

    :param int m: fold index
    :param float eps: amplitude
    :param guess: :code:`(Q, coeffs)` starting point
    :param int M: grid size, defaults to the smallest power of two
        :math:`\\geq 4(N+1)`
    :param float tol: tolerance on :math:`\\max_n |g_n|`
    :param int max_iters: iteration cap
    :param str guard: boundary check policy
    :raises ~vstatelib.utils.errors.ConvergenceError: no convergence
    :raises ~vstatelib.utils.errors.CoercivityError: an iterate left
        the admissible boundary regime
    """
    Q = float(guess[0])
    a = np.array(guess[1].a, dtype=np.float64)
    N = a.size
    if m + 1 > N + 1:
        raise ValueError('N = {} modes cannot hold a_{}'.format(N, m + 1))
    if M is None:
        M = min_grid_size(N)
    symmetric = m % 2 == 0
    if symmetric:
        a = 0.5 * (a + half_turn(PerturbationCoeffs(a)).a)
    a[m - 1] = eps

    res = np.inf
    for it in range(max_iters + 1):
        f = PerturbationCoeffs(a)
        resid = eval_F(Q, f, M=M, guard=guard)
        res = resid.sup_norm
        if not np.isfinite(res):
            raise ConvergenceError('residual is not finite', res, it)
        if res < tol:
            return BranchPoint(eps, Q, f, res, it, M,
                               tail_norm=resid.tail_norm)
        if it == max_iters:
            break

        mat, _ = bordered_jacobian(m, Q, f, eps, M=M, guard=guard)
        rhs = np.concatenate((-resid.g, [0.0]))
        try:
            sol = linalg.solve(mat, rhs)
        except linalg.LinAlgError as err:
            raise ConvergenceError('singular bordered system: ' + str(err),
                                   res, it)
        a = a + sol[:N]
        if symmetric:
            a = 0.5 * (a + half_turn(PerturbationCoeffs(a)).a)
        a[m - 1] = eps
        if eps != 0.0:
            Q += sol[N] / eps
        if not 0.0 < Q < 1.0:
            raise ConvergenceError('Q = {:.4f} left (0, 1)'.format(Q), res,
                                   it + 1)
    raise ConvergenceError('Newton iteration did not converge', res,
                           max_iters)


def verify_vstate(p: BranchPoint, refine: int = 4,
                  guard: str = 'relaxed') -> float:
    """
    Out-of-sample steadiness certificate: :math:`\\sup |\\Im\\, G|` on a
    half-offset grid :code:`refine` times finer than the solve, with as
    many quadrature nodes.  None of its targets is a collocation point
    of the solve.
    """
    Mv = refine * p.M
    targets = Grid(Mv, offset=True)
    G = eval_G(kirchhoff_omega(p.Q), p.boundary, targets, M=Mv, guard=guard)
    return float(np.max(np.abs(G.values.imag)))


def _predict(history: list, eps: float, v_m: np.ndarray,
             Q_m: float) -> Tuple[float, np.ndarray]:
    if len(history) < 2:
        return Q_m, eps * v_m
    (e0, Q0, a0), (e1, Q1, a1) = history[-2:]
    t = (eps - e1) / (e1 - e0)
    return Q1 + t * (Q1 - Q0), a1 + t * (a1 - a0)


def _pad(a: np.ndarray, N: int) -> np.ndarray:
    out = np.zeros(N)
    out[:a.size] = a
    return out


@silenceable
def trace_branch(cfg: BranchConfig) -> Branch:
    """
    Trace the :math:`m`-th branch in :math:`\\varepsilon = k\\,`
    :code:`eps_step` up to :code:`eps_max`.

    * The first predictor is :math:`\\varepsilon v_m` at :math:`Q_m`,
      later ones are secant extrapolations of the last two points.
    * A point whose unresolved residual exceeds :code:`tail_tol` or
      whose certificate exceeds :code:`verify_tol` is re-solved with
      doubled :math:`N` and :math:`M` (up to :code:`max_modes`).
    * A failed correction, or a certificate that stays above
      :code:`verify_tol` with :code:`max_modes` modes, halves the step
      (at most :code:`max_halvings` times in a row) and issues a
      :class:`~vstatelib.utils.warnings.BranchWarning`.
    * Consecutive points must satisfy
      :math:`\\|(\\Delta Q, \\Delta a)\\|_\\infty \\leq C |\\Delta\\varepsilon|`
      with :math:`C` at most ten times its running value.

    On failure the partial branch is returned with
    :attr:`Branch.truncated` set.

    :param cfg: branch settings
    :param bool silent: suppress :mod:`vstatelib` warnings
    """
    m = cfg.m
    bif = find_Qm(m)
    N, M = cfg.N, cfg.M
    origin = initial_point(m, N, M)
    v_m = kernel_vector(m, bif.Q_m, cfg.max_modes).a

    history = [(0.0, bif.Q_m, np.zeros(N))]
    points = []
    step = cfg.eps_step
    halvings = total_halvings = refinements = 0
    C = 0.0
    truncated = False
    reason = ''
    eps_prev = 0.0
    while cfg.eps_max - abs(eps_prev) > 1e-12 * cfg.eps_max:
        eps = eps_prev + cfg.direction * min(step,
                                             cfg.eps_max - abs(eps_prev))
        Qg, ag = _predict(history, eps, v_m[:N], bif.Q_m)
        failure = None
        try:
            p = newton_correct(m, eps, (Qg, PerturbationCoeffs(ag)), M=M,
                               tol=cfg.newton_tol,
                               max_iters=cfg.newton_max_iters,
                               guard=cfg.guard)
        except (ConvergenceError, CoercivityError, KernelBoundError) as err:
            failure = str(err)
        else:
            verify = verify_vstate(p, cfg.verify_refine_factor,
                                   guard=cfg.guard)
            if p.tail_norm > cfg.tail_tol or verify >= cfg.verify_tol:
                if 2 * N <= cfg.max_modes:
                    warnings.warn(
                        'eps = {:.6g} is under-resolved with N = {} (tail '
                        '{:.2e}, certificate {:.2e}), doubling the '
                        'modes'.format(eps, N, p.tail_norm, verify),
                        TruncationWarning)
                    N, M = 2 * N, 2 * M
                    refinements += 1
                    history = [(e, q, _pad(a, N)) for e, q, a in history]
                    continue
                if verify >= cfg.verify_tol:
                    failure = ('certificate {:.2e} exceeds {:.1e} with the '
                               'maximal N = {}'.format(verify,
                                                       cfg.verify_tol, N))
                else:
                    warnings.warn(
                        'tail {:.2e} at eps = {:.6g} exceeds {:.1e} with '
                        'the maximal N = {}'.format(p.tail_norm, eps,
                                                    cfg.tail_tol, N),
                        TruncationWarning)

        if failure is not None:
            if halvings >= cfg.max_halvings:
                truncated = True
                reason = 'step underflow at eps = {:.6g}: {}'.format(
                    eps, failure)
                warnings.warn(reason, BranchWarning)
                break
            halvings += 1
            total_halvings += 1
            step *= 0.5
            warnings.warn('eps = {:.6g} failed ({}), halving the step to '
                          '{:.3g}'.format(eps, failure, step),
                          BranchWarning)
            continue

        e1, Q1, a1 = history[-1]
        jump = max(abs(p.Q - Q1), np.max(np.abs(p.coeffs.a - a1)))
        jump /= abs(eps - e1)
        if len(points) >= 2 and jump > 10.0 * C:
            truncated = True
            reason = ('discontinuity at eps = {:.6g}: jump {:.3g} against '
                      'C = {:.3g}'.format(eps, jump, C))
            warnings.warn(reason, BranchWarning)
            break
        C = max(C, jump)

        points.append(p.with_verify(verify))
        history.append((eps, p.Q, np.array(p.coeffs.a)))
        eps_prev = eps
        halvings = 0
        step = min(2.0 * step, cfg.eps_step)

    diagnostics = {'halvings': total_halvings,
                   'refinements': refinements,
                   'continuity_C': C,
                   'final_N': N,
                   'final_M': M,
                   'reason': reason}
    return Branch(cfg, bif, origin, points, truncated, diagnostics)

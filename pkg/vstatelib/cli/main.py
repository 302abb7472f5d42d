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
Command-line front end, installed as the :code:`vstate` console script.

Example::

    vstate dispersion --m-min 3 --m-max 20 --out dispersion.csv
    vstate linop-check --m 3 --modes 64 --grid 512 --out linop.json
    vstate branch --m 3 --eps-max 0.03 --eps-step 0.00375 --out branch.json

Exit codes: 0 success, 2 usage error, 3 tolerance breach, 4 solver
failure.  Usage errors are detected from the arguments alone, before any
computation starts; errors raised while computing are not usage errors.
"""
__all__ = ['EXIT_OK', 'EXIT_SOLVER', 'EXIT_TOLERANCE', 'EXIT_USAGE',
           'build_parser', 'cmd_branch', 'cmd_dispersion',
           'cmd_linop_check', 'main']

import argparse
import numpy as np
import os
import sys

from astropy.table import (Table, vstack)
from typing import (List, Tuple)

from ..contour.boundary import (Grid, PerturbationCoeffs, boundary_curve)
from ..utils.errors import (GridError, ToleranceError, VStateError)
from ..vstate.continuation import (Branch, BranchConfig, trace_branch)
from ..vstate.functional import eval_F
from ..vstate.linop import (Linearization, closed_form_LQ)
from ..vstate.spectrum import (find_Qm, kernel_vector, transversality)
from .manifest import (RunManifest, dumps)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_SOLVER = 4

#: tolerances of :func:`cmd_linop_check`
LINOP_TOLERANCES = {
    'closed_vs_assembled_supnorm': 1e-8,
    'fd_relative_error': 1e-6,
    'kernel_residual': 1e-8,
    'transversality_gap': 1e-7,
}


def cmd_dispersion(m_min: int, m_max: int) -> Table:
    """
    Dispersion table with columns :code:`m, Q_m, f_residual,
    transversality`, one row per fold index.
    """
    if not 3 <= m_min <= m_max:
        raise ValueError('need 3 <= m_min <= m_max, got {} and '
                         '{}'.format(m_min, m_max))
    points = [find_Qm(m) for m in range(m_min, m_max + 1)]
    return Table([[p.m for p in points],
                  [p.Q_m for p in points],
                  [p.lambda_residual for p in points],
                  [p.transversality for p in points]],
                 names=('m', 'Q_m', 'f_residual', 'transversality'))


def cmd_linop_check(m: int, N: int, M: int, fd_step: float = 1e-6,
                    seed: int = 0) -> dict:
    """
    Cross-check the closed form linearization against the assembled
    contour integrals at :math:`Q_m`.

    :return: report with :code:`closed_vs_assembled_supnorm`,
        :code:`fd_relative_error` (assembled Jacobian against central
        differences of :math:`F` at a random admissible perturbation),
        :code:`kernel_residual`, :code:`transversality_closed`,
        :code:`transversality_integral`, the tolerances and the list of
        :code:`failed` checks
    :raises ~vstatelib.utils.errors.ToleranceError: a check failed, the
        report is attached
    """
    if N < m + 2:
        raise ValueError('N = {} modes cannot hold the kernel of '
                         'm = {}'.format(N, m))
    bif = find_Qm(m)
    Q = bif.Q_m
    zero = PerturbationCoeffs.zeros(N)
    v = kernel_vector(m, Q, N).a

    lin = Linearization(Q, zero, M=M)
    jac = lin.jacobian()
    closed = closed_form_LQ(Q, N).entries
    t_int = float((lin.dQ_jacobian() @ v)[m - 1])
    t_closed = transversality(m, Q)

    # random perturbation well inside the coercivity radius
    rng = np.random.RandomState(seed)
    a = rng.standard_normal(N) * 0.6 ** np.arange(N)
    f = PerturbationCoeffs(0.003 * a / np.max(np.abs(a)))
    jac_f = Linearization(Q, f, M=M).jacobian()
    fd = np.empty_like(jac_f)
    for k in range(N):
        da = np.zeros(N)
        da[k] = fd_step
        gp = eval_F(Q, PerturbationCoeffs(f.a + da), M=M).g
        gm = eval_F(Q, PerturbationCoeffs(f.a - da), M=M).g
        fd[:, k] = (gp - gm) / (2.0 * fd_step)

    report = {
        'm': m,
        'N': N,
        'M': M,
        'Q_m': Q,
        'closed_vs_assembled_supnorm': float(np.max(np.abs(jac - closed))),
        'fd_relative_error': float(np.max(np.abs(jac_f - fd))
                                   / np.max(np.abs(jac_f))),
        'kernel_residual': float(np.max(np.abs(jac @ v))),
        'transversality_closed': t_closed,
        'transversality_integral': t_int,
        'transversality_gap': abs(t_int - t_closed),
        'tolerances': dict(LINOP_TOLERANCES),
    }
    failed = [key for key, tol in sorted(LINOP_TOLERANCES.items())
              if not report[key] <= tol]
    report['failed'] = failed
    if failed:
        raise ToleranceError(failed, report)
    return report


def cmd_branch(cfg: BranchConfig,
               boundary_every: int = 1) -> Tuple[dict, Table, Branch]:
    """
    Trace a branch and collect its products.

    :param cfg: branch settings
    :param int boundary_every: keep the boundary trace of every
        :code:`boundary_every`-th point (the origin is always kept)
    :return: :code:`(document, boundary_table, branch)` where the
        document holds :code:`m, Q_m, truncated, diagnostics` and one
        record per point, the origin first
    """
    if boundary_every < 1:
        raise ValueError('boundary_every must be >= 1')
    branch = trace_branch(cfg, silent=True)
    records = [branch.origin] + list(branch.points)

    doc = {'m': cfg.m,
           'Q_m': branch.bifurcation.Q_m,
           'transversality': branch.bifurcation.transversality,
           'truncated': branch.truncated,
           'diagnostics': branch.diagnostics,
           'points': [p.info for p in records]}

    traces = []
    for idx, p in enumerate(records):
        if idx % boundary_every:
            continue
        theta, x, y = boundary_curve(p.boundary)
        traces.append(Table([np.full(theta.size, idx),
                             np.full(theta.size, p.eps), theta, x, y],
                            names=('point', 'eps', 'theta', 'x', 'y')))
    return doc, vstack(traces), branch


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', required=True,
                        help='output file (JSON or CSV per command)')
    common.add_argument('--timestamp', action='store_true',
                        help='record the start time in the manifest')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    ap = argparse.ArgumentParser(
        prog='vstate',
        description='V-states bifurcating from the Kirchhoff ellipses')
    sub = ap.add_subparsers(dest='command')
    sub.required = True

    disp = sub.add_parser('dispersion', parents=[common],
                          help='table of bifurcation points Q_m (CSV)')
    disp.add_argument('--m-min', type=int, default=3)
    disp.add_argument('--m-max', type=int, default=20)

    chk = sub.add_parser('linop-check', parents=[common],
                         help='cross-check of the linearization (JSON)')
    chk.add_argument('--m', type=int, default=3)
    chk.add_argument('--modes', type=int, default=64)
    chk.add_argument('--grid', type=int, default=512)

    br = sub.add_parser('branch', parents=[common],
                        help='trace a bifurcating branch (JSON + CSV)')
    br.add_argument('--m', type=int, default=3)
    br.add_argument('--modes', type=int, default=128)
    br.add_argument('--grid', type=int, default=512)
    br.add_argument('--eps-max', type=float, default=0.03)
    br.add_argument('--eps-step', type=float, default=0.00375)
    br.add_argument('--tol', type=float, default=1e-10)
    br.add_argument('--refine', type=int, default=4,
                    help='grid refinement of the steadiness certificate')
    br.add_argument('--direction', type=int, default=1, choices=(1, -1))
    br.add_argument('--boundary-every', type=int, default=1)
    br.add_argument('--allow-large-m', action='store_true')
    return ap


def _boundary_path(out: str) -> str:
    root, _ = os.path.splitext(out)
    return root + '_boundary.csv'


def _write_text(path: str, text: str):
    with open(path, 'w', encoding='utf-8') as fp:
        fp.write(text)
    print('Wrote', path)


def _write_table(table: Table, path: str):
    table.write(path, format='ascii.csv', overwrite=True)
    print('Wrote', path)


def _prepare_dispersion(args):
    if not 3 <= args.m_min <= args.m_max:
        raise ValueError('need 3 <= m_min <= m_max, got {} and '
                         '{}'.format(args.m_min, args.m_max))
    manifest = RunManifest('dispersion',
                           {'m_min': args.m_min, 'm_max': args.m_max},
                           timestamp=args.timestamp)
    return (args.m_min, args.m_max), manifest


def _run_dispersion(args, job, manifest) -> int:
    table = cmd_dispersion(*job)
    manifest.record(max_f_residual=float(np.max(table['f_residual'])))
    _write_table(table, args.out)
    print('Wrote', manifest.write_sidecar(args.out))
    return EXIT_OK


def _prepare_linop_check(args):
    if args.m < 3:
        raise ValueError('fold index m must be >= 3, got {}'.format(args.m))
    if args.modes < args.m + 2:
        raise ValueError('N = {} modes cannot hold the kernel of '
                         'm = {}'.format(args.modes, args.m))
    Grid(args.grid)
    if args.modes >= args.grid // 2:
        raise GridError('grid of size {} resolves fewer than N = {} sine '
                        'modes'.format(args.grid, args.modes))
    manifest = RunManifest('linop-check',
                           {'m': args.m, 'N': args.modes, 'M': args.grid},
                           timestamp=args.timestamp)
    return (args.m, args.modes, args.grid), manifest


def _run_linop_check(args, job, manifest) -> int:
    status = EXIT_OK
    try:
        report = cmd_linop_check(*job)
    except ToleranceError as err:
        report = err.report
        status = EXIT_TOLERANCE
        print('vstate: ' + str(err), file=sys.stderr)
    manifest.record(**{key: report[key] for key in LINOP_TOLERANCES})
    report['manifest'] = manifest.info
    _write_text(args.out, dumps(report))
    return status


def _prepare_branch(args):
    if args.boundary_every < 1:
        raise ValueError('boundary_every must be >= 1')
    cfg = BranchConfig(m=args.m, N=args.modes, M=args.grid,
                       eps_max=args.eps_max, eps_step=args.eps_step,
                       newton_tol=args.tol,
                       verify_refine_factor=args.refine,
                       direction=args.direction,
                       allow_large_m=args.allow_large_m)
    manifest = RunManifest('branch', cfg.info, timestamp=args.timestamp)
    return (cfg, args.boundary_every), manifest


def _run_branch(args, job, manifest) -> int:
    doc, table, branch = cmd_branch(*job)
    if len(branch):
        manifest.record(
            max_residual=max(p.residual_inf for p in branch),
            max_verify=max(p.verify for p in branch))
    doc['manifest'] = manifest.info
    _write_text(args.out, dumps(doc))
    boundary = _boundary_path(args.out)
    _write_table(table, boundary)
    print('Wrote', manifest.write_sidecar(boundary))
    if branch.truncated:
        print('vstate: branch truncated: '
              + branch.diagnostics['reason'], file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_OK


#: sub-command name -> (argument check, run)
_COMMANDS = {'dispersion': (_prepare_dispersion, _run_dispersion),
             'linop-check': (_prepare_linop_check, _run_linop_check),
             'branch': (_prepare_branch, _run_branch)}


def main(argv: List[str] = None) -> int:
    """
    Entry point of the :code:`vstate` console script.

    :param argv: arguments, defaults to :data:`sys.argv`
    :return: exit code
    """
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    prepare, run = _COMMANDS[args.command]
    try:
        job, manifest = prepare(args)
    except (ValueError, GridError) as err:
        print('vstate: error: ' + str(err), file=sys.stderr)
        return EXIT_USAGE

    try:
        return run(args, job, manifest)
    except VStateError as err:
        print('vstate: solver failure: ' + str(err), file=sys.stderr)
        return EXIT_SOLVER


if __name__ == '__main__':
    raise SystemExit(main())

# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
import json
import numpy as np
import os
import unittest as ut

from astropy.table import Table
from unittest import mock

from . import TestBase
from .. import main as cli_main
from ..main import (EXIT_OK, EXIT_SOLVER, EXIT_TOLERANCE, EXIT_USAGE,
                    cmd_dispersion, cmd_linop_check)
from ...utils.errors import (ConvergenceError, ToleranceError)


class TestDispersion(TestBase):
    """Test the :code:`dispersion` sub-command."""

    def test_table(self):
        table = cmd_dispersion(3, 12)
        self.assertEqual(table.colnames,
                         ['m', 'Q_m', 'f_residual', 'transversality'])
        self.assertEqual(list(table['m']), list(range(3, 13)))
        self.assertEqual(table['Q_m'][0], 0.5)
        self.assertEqual(table['transversality'][0], 2.25)
        self.assertAlmostEqual(table['Q_m'][1], np.sqrt(np.sqrt(2.0) - 1.0),
                               delta=1e-12)
        self.assertTrue(np.all(np.diff(table['Q_m']) > 0.0))
        self.assertTrue(np.all(table['f_residual'] < 1e-14))

    def test_cli(self):
        out = self.path('dispersion.csv')
        code, stdout, _ = self.run_cli('dispersion', '--m-min', '3',
                                       '--m-max', '8', '--out', out)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('Wrote', stdout)
        with open(out) as fp:
            self.assertEqual(fp.readline().strip(),
                             'm,Q_m,f_residual,transversality')
        table = Table.read(out, format='ascii.csv')
        self.assertEqual(len(table), 6)
        with open(self.path('dispersion.manifest.json')) as fp:
            manifest = json.load(fp)
        self.assertEqual(manifest['command'], 'dispersion')
        self.assertEqual(manifest['config'], {'m_min': 3, 'm_max': 8})
        self.assertNotIn('timestamp', manifest)

    def test_usage(self):
        out = self.path('dispersion.csv')
        code, _, err = self.run_cli('dispersion', '--m-min', '5',
                                    '--m-max', '4', '--out', out)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('m_min', err)
        self.assertRaises(ValueError, cmd_dispersion, 2, 5)


class TestLinopCheck(TestBase):
    """Test the :code:`linop-check` sub-command."""

    def test_report(self):
        report = cmd_linop_check(3, 16, 128)
        self.assertEqual(report['failed'], [])
        self.assertLess(report['closed_vs_assembled_supnorm'], 1e-8)
        self.assertLess(report['fd_relative_error'], 1e-6)
        self.assertLess(report['kernel_residual'], 1e-8)
        self.assertEqual(report['transversality_closed'], 2.25)
        self.assertAlmostEqual(report['transversality_integral'], 2.25,
                               delta=1e-7)

    def test_cli(self):
        out = self.path('linop.json')
        code, _, _ = self.run_cli('linop-check', '--m', '4', '--modes',
                                  '16', '--grid', '128', '--out', out)
        self.assertEqual(code, EXIT_OK)
        with open(out) as fp:
            report = json.load(fp)
        for key in ('closed_vs_assembled_supnorm', 'fd_relative_error',
                    'kernel_residual', 'transversality_closed',
                    'transversality_integral', 'manifest'):
            self.assertIn(key, report)
        self.assertEqual(report['manifest']['config'],
                         {'m': 4, 'N': 16, 'M': 128})

    def test_tolerance_breach(self):
        report = {'failed': ['kernel_residual'],
                  'closed_vs_assembled_supnorm': 0.0,
                  'fd_relative_error': 0.0,
                  'kernel_residual': 1.0,
                  'transversality_gap': 0.0}
        out = self.path('linop.json')
        with mock.patch.object(
                cli_main, 'cmd_linop_check',
                side_effect=ToleranceError(['kernel_residual'], report)):
            code, _, err = self.run_cli('linop-check', '--out', out)
        self.assertEqual(code, EXIT_TOLERANCE)
        self.assertIn('kernel_residual', err)
        with open(out) as fp:
            self.assertEqual(json.load(fp)['failed'], ['kernel_residual'])

    def test_bad_grid(self):
        code, _, _ = self.run_cli('linop-check', '--grid', '100', '--out',
                                  self.path('linop.json'))
        self.assertEqual(code, EXIT_USAGE)
        code, _, err = self.run_cli('linop-check', '--modes', '64',
                                    '--grid', '128', '--out',
                                    self.path('linop.json'))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('sine modes', err)
        self.assertFalse(os.path.exists(self.path('linop.json')))


class TestBranch(TestBase):
    """Test the :code:`branch` sub-command."""

    args = ('branch', '--m', '3', '--modes', '64', '--grid', '256',
            '--eps-max', '0.01', '--eps-step', '0.005')

    def test_cli(self):
        out = self.path('branch.json')
        code, stdout, _ = self.run_cli(*self.args, '--out', out)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(stdout.count('Wrote'), 3)
        with open(out) as fp:
            doc = json.load(fp)
        self.assertEqual(doc['m'], 3)
        self.assertEqual(doc['Q_m'], 0.5)
        self.assertFalse(doc['truncated'])
        self.assertEqual(len(doc['points']), 3)

        origin = doc['points'][0]
        self.assertEqual(origin['eps'], 0.0)
        self.assertEqual(origin['Q'], 0.5)
        self.assertTrue(all(a == 0.0 for a in origin['coeffs']))
        for p in doc['points'][1:]:
            self.assertLess(p['verify'], 1e-8)
            self.assertLess(p['residual'], 1e-10)
            self.assertAlmostEqual(p['omega'], 0.25 * (1.0 - p['Q'] ** 2),
                                   delta=1e-15)
            self.assertEqual(p['coeffs'][2], p['eps'])
        self.assertEqual(doc['manifest']['config']['N'], 64)

        table = Table.read(self.path('branch_boundary.csv'),
                           format='ascii.csv')
        self.assertEqual(table.colnames, ['point', 'eps', 'theta', 'x', 'y'])
        self.assertEqual(sorted(set(table['point'])), [0, 1, 2])
        with open(self.path('branch_boundary.manifest.json')) as fp:
            manifest = json.load(fp)
        self.assertEqual(manifest['command'], 'branch')
        self.assertEqual(manifest, doc['manifest'])

    def test_reproducible(self):
        texts = []
        for name in ('a.json', 'b.json'):
            out = self.path(name)
            self.run_cli(*self.args, '--out', out)
            with open(out, 'rb') as fp:
                texts.append(fp.read())
        self.assertEqual(texts[0], texts[1])

    def test_solver_failure(self):
        with mock.patch.object(
                cli_main, 'cmd_branch',
                side_effect=ConvergenceError('stalled', 1e-3, 25)):
            code, _, err = self.run_cli(*self.args, '--out',
                                        self.path('branch.json'))
        self.assertEqual(code, EXIT_SOLVER)
        self.assertIn('stalled', err)

    def test_internal_error(self):
        # a ValueError raised while computing is a bug, not a usage error
        with mock.patch.object(cli_main, 'cmd_branch',
                               side_effect=ValueError('broken')):
            with self.assertRaises(ValueError):
                self.run_cli(*self.args, '--out', self.path('branch.json'))

    def test_usage(self):
        code, _, _ = self.run_cli('branch', '--m', '2', '--out',
                                  self.path('branch.json'))
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = self.run_cli('branch', '--m', '3', '--eps-step', '-1',
                                  '--out', self.path('branch.json'))
        self.assertEqual(code, EXIT_USAGE)
        code, _, err = self.run_cli(*self.args, '--boundary-every', '0',
                                    '--out', self.path('branch.json'))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('boundary_every', err)
        code, _, _ = self.run_cli('nothing')
        self.assertEqual(code, EXIT_USAGE)


if __name__ == '__main__':
    ut.main()

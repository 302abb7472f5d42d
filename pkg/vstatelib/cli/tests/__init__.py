# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""Shared fixtures for the :mod:`vstatelib.cli` test suite."""
__all__ = ['TestBase']

import io
import os
import tempfile
import unittest as ut

from unittest import mock

from ..main import main


class TestBase(ut.TestCase):
    """Base test case running the CLI inside a temporary directory."""

    def setUp(self):
        self._tmpdir = tempfile.TemporaryDirectory(prefix='vstate-test_')
        self.tmp = self._tmpdir.name

    def tearDown(self):
        self._tmpdir.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.tmp, name)

    @staticmethod
    def run_cli(*argv):
        """:return: :code:`(exit_code, stdout, stderr)`"""
        with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
                mock.patch('sys.stderr', new_callable=io.StringIO) as err:
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

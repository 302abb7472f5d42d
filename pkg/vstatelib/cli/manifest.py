# This file is part of the vstatelib package, a Python toolkit for
# computing rotating vortex patches (V-states) of the 2D Euler
# equations.
#
# Copyright 2026 vstatelib contributors
#
# License: Standard 3-clause BSD; see "LICENSES/LICENSE.txt" for full
#   license terms and contributor agreement.
#
"""Run manifests embedded in (or written next to) every CLI product."""
__all__ = ['RunManifest', 'dumps']

import astropy
import json
import numpy as np
import os
import platform
import scipy

from astropy.time import Time
from typing import (Any, Dict)


class RunManifest(object):
    """
    Provenance record of one CLI run: the command, the full echo of its
    configuration, the package versions and the tolerances that were
    actually achieved.
    """

    def __init__(self, command: str, config: Dict[str, Any],
                 timestamp: bool = False):
        """
        :param str command: sub-command name
        :param dict config: every setting the run depends on
        :param bool timestamp: record the UTC start time; off by default
            so that identical invocations produce identical files
        """
        self._command = command
        self._config = dict(config)
        self._achieved = {}  # type: Dict[str, Any]
        self._timestamp = Time.now().isot if timestamp else None
        self._build_info()

    def _build_info(self):
        """Builds the :attr:`versions` dictionary."""
        from .. import __version__

        self._versions = {
            'vstatelib': __version__,
            'numpy': np.__version__,
            'scipy': scipy.__version__,
            'astropy': astropy.__version__,
            'python': platform.python_version(),
        }

    @property
    def command(self) -> str:
        return self._command

    @property
    def config(self) -> Dict[str, Any]:
        return dict(self._config)

    @property
    def versions(self) -> Dict[str, str]:
        return dict(self._versions)

    @property
    def timestamp(self):
        """ISO start time, :code:`None` unless requested"""
        return self._timestamp

    @property
    def achieved(self) -> Dict[str, Any]:
        """tolerances and residuals reached by the run"""
        return dict(self._achieved)

    def record(self, **values):
        """Add achieved tolerances to the manifest."""
        self._achieved.update(values)

    @property
    def info(self) -> Dict[str, Any]:
        info = {'command': self._command,
                'config': self.config,
                'versions': self.versions,
                'achieved': self.achieved}
        if self._timestamp is not None:
            info['timestamp'] = self._timestamp
        return info

    def to_json(self) -> str:
        return dumps(self.info)

    def sidecar_path(self, product: str) -> str:
        """path of the manifest file that accompanies :code:`product`"""
        root, _ = os.path.splitext(product)
        return root + '.manifest.json'

    def write_sidecar(self, product: str) -> str:
        path = self.sidecar_path(product)
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(self.to_json())
        return path


def _to_builtin(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError('{!r} is not JSON serializable'.format(obj))


def dumps(doc) -> str:
    """Deterministic JSON text (sorted keys, fixed indent)."""
    return json.dumps(doc, indent=2, sort_keys=True,
                      default=_to_builtin) + '\n'

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
Decorators for the :mod:`vstatelib` package.
"""
__all__ = ['silenceable']

import functools
import inspect
import warnings

from typing import (Tuple, Type, Union)

from .warnings import VStateWarning


def silenceable(wfunc=None, *,
                silent: bool = False,
                categories: Tuple[Type[Warning], ...] = (VStateWarning,)):
    """
    Decorator that lets the caller suppress :mod:`vstatelib` warnings
    emitted while the decorated function runs.  The decorated function
    gains a :data:`silent` keyword, which is consumed by the decorator
    and never passed through (unless the wrapped function declares it).

    :param wfunc: function or method to be wrapped
    :param silent: default silencing behavior
    :param categories: warning categories that are ignored when
        silenced

    :example:
        The :data:`silent` setting can be passed in three ways (listed
        by predominance):

        #. The wrapped function keyword :data:`silent`.
        #. If the wrapped function is a method, then through a
           :data:`self.silent` attribute.
        #. The decorator keyword.

        **Defined with function keywords**::

            >>> @silenceable
            ... def foo(x):
            ...     warnings.warn('noisy', VStateWarning)
            ...     return x
            >>> foo(2, silent=True)
            2

        **Defined with decorator keywords**::

            >>> @silenceable(silent=True)
            ... def foo(x):
            ...     warnings.warn('noisy', VStateWarning)
            ...     return x
            >>> foo(2)   # no warning shown
            2
    """
    def decorator(func):
        func_sig = inspect.signature(func)
        passes_silent = 'silent' in func_sig.parameters

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            # 1. function keywords
            # 2. self attributes
            # 3. decorator keywords
            _silent = silent  # type: Union[bool, None]
            if 'self' in func_sig.parameters and len(args) != 0:
                self_silent = getattr(args[0], 'silent', None)
                if isinstance(self_silent, bool):
                    _silent = self_silent
            if passes_silent:
                bound_args = func_sig.bind_partial(*args, **kwargs)
                if bound_args.arguments.get('silent', None) is not None:
                    _silent = bound_args.arguments['silent']
            elif 'silent' in kwargs:
                val = kwargs.pop('silent')
                if val is not None:
                    _silent = val

            if not _silent:
                return func(*args, **kwargs)
            with warnings.catch_warnings():
                for category in categories:
                    warnings.simplefilter('ignore', category)
                return func(*args, **kwargs)

        return wrapper

    if wfunc is not None:
        # This is a decorator call without arguments, e.g. @silenceable
        return decorator(wfunc)
    else:
        # This is a factory call, e.g. @silenceable()
        return decorator

"""Fourier analysis on compact quantum group duals."""

import json as _json

from ._cqg import *  # noqa: F401,F403
from ._cqg import _run_experiment

__version__ = version()


def run_experiment(name, **options):
    """Run one experiment and return its output as a dict.

    Keyword options mirror the command line flags: seed, trials, cases, kmax,
    dual, q, N, nmax, eps, resolution.
    """
    return _json.loads(_run_experiment(name, options))

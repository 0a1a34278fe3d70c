"""Exact pseudohermitian calculus on odd spheres."""

import json

from ._core import *  # noqa: F401,F403
from ._core import __version__, _analyze, _conventions, _run_suite, _spectrum


def run_suite(n=1, degree=4, suites=("all",), samples=0, seed=20240611):
    """Run verification suites; returns the report as a dict."""
    return json.loads(_run_suite(n, degree, list(suites), samples, seed))


def analyze(e, oracle=False):
    """Mode table, embeddability and Hessian of a DeformationTensor."""
    return json.loads(_analyze(e, oracle))


def spectrum(n=1, degree=4):
    return json.loads(_spectrum(n, degree))


def conventions(n=1):
    return json.loads(_conventions(n))

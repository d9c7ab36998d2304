"""Zero-indexed oscillation series, their prime-side closed forms and the
Goldbach summatory constants. Thin layer over the compiled ``_core`` module."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import run_acceptance as _run_acceptance


def run_acceptance(table, n_zeros=100_000, n_max=1_000_000, seed=1, check_determinism=True):
    """Acceptance report as a dict (same content as ``zosc accept``)."""
    return _json.loads(_run_acceptance(table, n_zeros, n_max, seed, check_determinism))

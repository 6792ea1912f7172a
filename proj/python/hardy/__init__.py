"""Python bindings for the hardy C++ library.

Grid functions are numpy complex arrays of samples at e^{2 pi i k / N}.
"""
import json

from ._hardy import *  # noqa: F401,F403
from ._hardy import unwind_json as _unwind_json


def unwind(samples, strategy, max_terms=64, stop_tol=1e-10):
    """Unwinding expansion of `samples`.

    `strategy` is a dict in the CLI's JSON form, e.g. {"kind": "moebius", "points": [[0.1, 0.2]]}
    or {"kind": "greedy_afd"}.
    """
    return _unwind_json(samples, json.dumps(strategy), max_terms, stop_tol)

"""Backend selection for the hot kernels.

The compiled extension (``prismatic._ckernels``) is used when it was built
and the graph fits in 64-bit masks; otherwise the pure-Python reference in
``prismatic._pykernels`` runs. Set ``PRISMATIC_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from prismatic import _pykernels

NONE = _pykernels.NONE
FOUND = _pykernels.FOUND
BUDGET = _pykernels.BUDGET

_compiled = None
if os.environ.get("PRISMATIC_PURE_PYTHON", "") in ("", "0"):
    try:
        from prismatic import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _pick(n, limit=64):
    if _compiled is not None and n <= limit:
        return _compiled
    return _pykernels


def hamilton_cycle(adj, n, deadline=None):
    return _pick(n).hamilton_cycle(list(adj), n, deadline)


def max_independent_set(adj, n):
    return _pick(n).max_independent_set(list(adj), n)


def toughness_scan(adj, n):
    return _pick(n, limit=30).toughness_scan(list(adj), n)


def count_components(adj, alive):
    return _pick(len(adj)).count_components(list(adj), alive)

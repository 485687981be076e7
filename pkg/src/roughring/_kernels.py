"""Backend selection for the brute-force kernels.

The compiled extension is used when it was built; otherwise the pure-Python
twin is loaded. ``ROUGHRING_PURE_PYTHON=1`` forces the fallback.
"""

import os
from array import array

from . import _pykernels

if os.environ.get("ROUGHRING_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

RING_AXIOMS = _pykernels.RING_AXIOMS
CONGRUENCE_OPS = _pykernels.CONGRUENCE_OPS
P21_1, P21_2, P21_3, P21_4, P21_5 = (_pykernels.P21_1, _pykernels.P21_2, _pykernels.P21_3,
                                     _pykernels.P21_4, _pykernels.P21_5)
T21_1, T21_2, T21_3, T21_4 = _pykernels.T21_1, _pykernels.T21_2, _pykernels.T21_3, _pykernels.T21_4


def as_buffer(values):
    return array("q", values)


def get_backend(name=None):
    """Return the kernel module for ``name`` ('cython', 'python') or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def scan_single(maps, nmaps, nsrc, nsub, law):
    return _impl.scan_single(as_buffer(maps), nmaps, nsrc, nsub, law)


def scan_pair(maps, nmaps, nsrc, nsub, law, require_meet):
    return _impl.scan_pair(as_buffer(maps), nmaps, nsrc, nsub, law, require_meet)


def ring_violation(add, mul, n, zero):
    return _impl.ring_violation(as_buffer(add), as_buffer(mul), n, zero)


def congruence_violation(add, mul, n, block_of):
    return _impl.congruence_violation(as_buffer(add), as_buffer(mul), n, as_buffer(block_of))

"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imports; set the environment
variable ``STABLECOVERS_PURE_PYTHON=1`` to force the fallback. Both
backends stay importable for benchmarking and cross-checking.
"""
import os

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("STABLECOVERS_PURE_PYTHON"):
    backend = compiled
    BACKEND = "cython"
else:
    backend = python
    BACKEND = "python"

count_transitive = backend.count_transitive
count_affine_points = backend.count_affine_points
transpositions = python.transpositions

__all__ = [
    "BACKEND",
    "backend",
    "compiled",
    "count_affine_points",
    "count_transitive",
    "python",
    "transpositions",
]

"""Backend selection for the GF(p) kernels.

The compiled extension is used when it was built; setting the environment
variable HEISURF_PURE_PYTHON=1 forces the pure-Python implementation.
"""

import os

if os.environ.get("HEISURF_PURE_PYTHON") == "1":
    from ._pykernels import ModPoly, rank_mod
    BACKEND = "python"
else:
    try:
        from ._ckernels import ModPoly, rank_mod
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import ModPoly, rank_mod
        BACKEND = "python"

__all__ = ["BACKEND", "ModPoly", "rank_mod"]

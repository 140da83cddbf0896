"""Hot search kernels, compiled when available.

Set ``ENDOGRAPH_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
search_homs = _pykernels.search_homs

if os.environ.get("ENDOGRAPH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        search_homs = _ckernels.search_homs
        BACKEND = "cython"

__all__ = ["BACKEND", "search_homs"]

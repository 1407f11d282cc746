"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``CATINS_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("CATINS_PURE_PYTHON"):
    from catins import _pykernels as impl
else:
    try:
        from catins import _kernels as impl
    except ImportError:
        from catins import _pykernels as impl

BACKEND = "python" if impl.__name__.endswith("_pykernels") else "cython"

cocharge_label = impl.cocharge_label
insertion_rows = impl.insertion_rows
catabolism_F = impl.catabolism_F
catabolism_F_bounded = impl.catabolism_F_bounded

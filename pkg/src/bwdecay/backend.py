"""Import-time selection between the compiled and pure-Python kernels.

The compiled extension is optional: the package builds and works without
a C compiler, it is just slower in the E1 inner loops.  Selection order:

1. ``BWDECAY_BACKEND=python`` forces the pure kernels.
2. ``BWDECAY_BACKEND=cython`` requires the extension and fails loudly
   when it is missing.
3. Unset: use the extension when importable, else fall back silently.

``BACKEND`` records the choice ("cython" or "python") for callers that
want to report it, such as the CLI metadata line and the benchmark.
"""

from __future__ import annotations

import os

_requested = os.environ.get("BWDECAY_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _requested == "cython":
    from . import _kernels as kernels  # type: ignore[attr-defined]

    BACKEND = "cython"
elif _requested == "":
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"
else:
    raise ImportError(
        "BWDECAY_BACKEND must be 'python', 'cython' or unset, "
        "got {!r}".format(_requested)
    )

__all__ = ["BACKEND", "kernels"]

"""Kernel backend selection.

The hot inner loops (resolvent stacks, numerical-range sweeps, grid
evaluations) exist twice: a numba @njit version and a vectorized pure-numpy
version. The environment variable CROUZEIX_LAB_BACKEND picks one at import
time:

    auto  (default)  use numba if it imports, else numpy
    numba            require numba, fail loudly if unavailable
    numpy            force the pure-numpy path

Results agree between backends to rounding; the numpy path exists so the
package runs where JIT compilation is unwanted and as an oracle for the
kernel parity tests.
"""

import os

_CHOICE = os.environ.get("CROUZEIX_LAB_BACKEND", "auto").strip().lower()
if _CHOICE not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"CROUZEIX_LAB_BACKEND must be auto, numba or numpy, got {_CHOICE!r}"
    )

if _CHOICE == "numpy":
    NUMBA_AVAILABLE = False
else:
    try:
        import numba  # noqa: F401

        NUMBA_AVAILABLE = True
    except ImportError:
        if _CHOICE == "numba":
            raise
        NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE


def active_backend():
    return "numba" if USE_NUMBA else "numpy"

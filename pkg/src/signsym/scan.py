"""Exhaustive statistics scans, with a compiled kernel when available.

The compiled module is built from Cython at install time; when it is
missing (or ``SIGNSYM_PURE=1`` is set) the pure-Python fallback with the
same contracts is used.  ``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

from . import _scan_py

if os.environ.get("SIGNSYM_PURE") == "1":
    _impl = _scan_py
    BACKEND = "python"
else:
    try:
        from . import _scan_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _scan_py
        BACKEND = "python"


def fmaj_pair_counts(n: int) -> dict[tuple[int, int], int]:
    """Counts of (fmaj of inverse, fmaj) over the whole rank-n signed group."""
    return _impl.fmaj_pair_counts(n)


def maj_counts(n: int) -> dict[int, int]:
    """Distribution of the major index over plain permutations of 1..n."""
    return _impl.maj_counts(n)


def inv_counts(n: int) -> dict[int, int]:
    """Distribution of the inversion number over plain permutations of 1..n."""
    return _impl.inv_counts(n)

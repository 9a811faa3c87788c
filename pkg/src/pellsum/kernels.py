"""Backend selection for the residue and enumeration hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module is used.  Setting ``PELLSUM_PURE=1``
forces the Python path.  Both return identical results.
"""

from __future__ import annotations

import os
from typing import Sequence

from pellsum import _pykernels

try:
    if os.environ.get("PELLSUM_PURE"):
        raise ImportError("pure-Python kernels requested")
    from pellsum import _ckernels as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"

# residues are multiplied in 64-bit words by the compiled kernels
_NATIVE_MOD_LIMIT = 2**31


def _pick(m: int):
    if _native is not None and m < _NATIVE_MOD_LIMIT:
        return _native
    return _pykernels


def residues(coeffs: Sequence[int], init: Sequence[int], m: int, count: int) -> list[int]:
    return _pick(m).residues(list(coeffs), list(init), m, count)


def state_cycle(coeffs: Sequence[int], init: Sequence[int], m: int) -> tuple[int, int]:
    return _pick(m).state_cycle(list(coeffs), list(init), m)


def windows_vanish(
    coeffs: Sequence[int], init: Sequence[int], m: int, N: int, horizon: int
) -> bool:
    return _pick(m).windows_vanish(list(coeffs), list(init), m, N, horizon)


def count_tilings(n: int, k: int, a: int, b: int) -> int:
    impl = _native if _native is not None else _pykernels
    return impl.count_tilings(n, k, a, b)

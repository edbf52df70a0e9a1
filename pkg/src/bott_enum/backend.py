"""Kernel backend selection.

Prefers the compiled extension :mod:`bott_enum._core`; falls back to the pure
Python :mod:`bott_enum._core_py`.  Override with the environment variable
``BOTT_ENUM_BACKEND`` set to ``c`` or ``py`` (``auto`` is the default).

Both kernels are exact.  The compiled one keeps per-monomial torus weights in
a machine word, so calls whose weights could overflow 63 bits are routed to
the pure kernel transparently.
"""

from __future__ import annotations

import os

from . import _core_py

_CHOICE = os.environ.get("BOTT_ENUM_BACKEND", "auto").strip().lower()


def _load():
    if _CHOICE not in ("auto", "c", "py"):
        raise ValueError(f"BOTT_ENUM_BACKEND must be auto, c or py, not {_CHOICE!r}")
    if _CHOICE in ("auto", "c"):
        try:
            from . import _core

            return _core, "c"
        except ImportError:
            if _CHOICE == "c":
                raise
    return _core_py, "py"


_impl, BACKEND = _load()


def _int64_safe(d: int, weights) -> bool:
    top = max((abs(w) for w in weights), default=0)
    return (d + 1) * top < 1 << 62


def slice_count(gens, nvars: int, d: int) -> int:
    """Number of degree-d monomials in nvars variables divisible by a generator."""
    return _impl.slice_count(tuple(map(tuple, gens)), nvars, d)


def complement_esym(gens, nvars: int, d: int, weights, k: int) -> tuple[int, int]:
    """Complement count and e_k of complement weights for a degree-d slice."""
    gens = tuple(map(tuple, gens))
    weights = tuple(weights)
    impl = _impl
    if BACKEND == "c" and not _int64_safe(d, weights):
        impl = _core_py
    return impl.complement_esym(gens, nvars, d, weights, k)

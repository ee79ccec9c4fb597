"""Kernel selection: compiled extension when importable, else pure Python.

``use_backend("python")`` forces the fallback (tests and benchmarks run both).
Inputs the compiled kernels cannot represent in int64 are routed to the
pure-Python kernels, which use exact integers.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

__all__ = ["bfs_ball", "pi0_lengths", "active_backend", "available_backends",
           "use_backend"]

_active = _compiled if _compiled is not None else _pykernels


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def active_backend() -> str:
    return "cython" if _active is _compiled else "python"


def use_backend(name: str) -> str:
    """Switch kernels; returns the previously active backend name."""
    global _active
    previous = active_backend()
    if name == "python":
        _active = _pykernels
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def bfs_ball(gen_parity, gen_t, nu, depth):
    try:
        return _active.bfs_ball(gen_parity, gen_t, nu, depth)
    except OverflowError:
        return _pykernels.bfs_ball(gen_parity, gen_t, nu, depth)


def pi0_lengths(parity, t_flat, nu):
    try:
        return _active.pi0_lengths(parity, t_flat, nu)
    except OverflowError:
        return _pykernels.pi0_lengths(parity, t_flat, nu)

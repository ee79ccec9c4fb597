"""
Height, positivity and coordinates for roots of the toroidal system.

The fundamental basis is ``alpha_0 = eps`` and ``alpha_j = sigma_j - eps``.
A root ``k*eps + sum m_i sigma_i`` has coordinates
``(k + sum m_i, m_1, ..., m_nu)`` in it, and the absolute value of its height
is the l1-norm of those coordinates.
"""

from __future__ import annotations

import itertools

from .core import LatticeVector, RootVector

__all__ = [
    "m_plus_minus", "height_radical", "height", "pi0_coordinates",
    "from_pi0_coordinates", "is_positive", "is_negative",
    "is_strictly_positive_isotropic", "is_in_toroidal", "is_in_baby",
    "enumerate_roots", "sign",
]


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def m_plus_minus(sigma: LatticeVector) -> tuple[int, int]:
    """Sum of the positive and of the negative coordinates of ``sigma``."""
    plus = sum(m for m in sigma if m > 0)
    minus = sum(m for m in sigma if m < 0)
    return plus, minus


def height_radical(sigma: LatticeVector) -> int:
    plus, minus = m_plus_minus(sigma)
    return 2 * plus if plus >= -minus else 2 * minus


def height(alpha: RootVector) -> int:
    k = alpha.k
    plus, minus = m_plus_minus(alpha.sigma)
    if k == -1 and plus == -minus:
        return k - 2 * plus
    return k + (2 * plus if plus >= -minus else 2 * minus)


def pi0_coordinates(alpha: RootVector) -> tuple[int, ...]:
    return (alpha.k + sum(alpha.sigma),) + tuple(alpha.sigma)


def from_pi0_coordinates(coords) -> RootVector:
    """Inverse of :func:`pi0_coordinates`; raises if the result is not a root."""
    n0, *rest = coords
    return RootVector(n0 - sum(rest), tuple(rest))


def _require_nonzero(alpha: RootVector) -> None:
    if alpha.k == 0 and not any(alpha.sigma):
        raise ValueError("the zero root is neither positive nor negative")


def is_positive(alpha: RootVector) -> bool:
    _require_nonzero(alpha)
    total = sum(alpha.sigma)
    if alpha.k == -1:
        return total > 0
    return total >= 0


def is_negative(alpha: RootVector) -> bool:
    return not is_positive(alpha)


def is_strictly_positive_isotropic(sigma: LatticeVector) -> bool:
    return any(sigma) and all(m >= 0 for m in sigma)


def is_in_toroidal(alpha: RootVector) -> bool:
    # RootVector already enforces k in {-1, 0, 1}
    return alpha.k in (-1, 0, 1)


def is_in_baby(alpha: RootVector) -> bool:
    """Membership in the smallest system: pm eps + S_b, or S_b + S_b."""
    odd = sum(m & 1 for m in alpha.sigma)
    if alpha.k == 0:
        return odd <= 2
    return odd <= 1


def enumerate_roots(nu: int, max_abs_height: int) -> list[RootVector]:
    """All roots with ``|height| <= max_abs_height``.

    The scan covers fundamental-basis coordinates in the box ``[-H, H]^(nu+1)``
    and keeps roots by their computed height. The box is complete because the
    coordinate l1-norm of a root equals its absolute height. Sorted by
    (|height|, -height, coordinates).
    """
    if max_abs_height < 0:
        raise ValueError("max_abs_height must be non-negative")
    H = max_abs_height
    found = []
    for rest in itertools.product(range(-H, H + 1), repeat=nu):
        total = sum(rest)
        for k in (-1, 0, 1):
            if abs(k + total) > H:
                continue
            alpha = RootVector(k, rest)
            h = height(alpha)
            if abs(h) <= H:
                found.append(((abs(h), -h, k + total, rest), alpha))
    found.sort(key=lambda item: item[0])
    return [alpha for _, alpha in found]

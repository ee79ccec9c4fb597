"""
Length with respect to the fundamental basis, and minimal words.

Generator ``j`` of a :data:`Pi0Word` is the reflection at the ``j``-th
fundamental root: ``eps`` for ``j = 0`` and ``sigma_j - eps`` for ``j >= 1``.

>>> from a1weyl.core import WeylElement
>>> length_pi0(WeylElement(1, (3,)))
6
>>> reduced_word_pi0(WeylElement(-1, (1,)))
[0, 1, 0]
"""

from __future__ import annotations

from collections.abc import Sequence

from . import _backend
from .core import (
    RootVector, WeylElement, IsotropicRootError, evaluate_word, inverse,
    multiply, unit_vector, zero_vector,
)
from .roots import height, sign

__all__ = [
    "Pi0Word", "fundamental_root", "generator", "pi0_generators",
    "evaluate_pi0_word", "length_pi0", "lengths_pi0", "reflection_length",
    "reduced_word_pi0", "word_position_counts", "length_wrt_conjugated_basis",
]

# indices into the fundamental basis, read left to right
Pi0Word = Sequence[int]


def fundamental_root(nu: int, j: int) -> RootVector:
    if j == 0:
        return RootVector(1, zero_vector(nu))
    return RootVector(-1, unit_vector(nu, j))


def generator(nu: int, j: int) -> WeylElement:
    """Reflection at the ``j``-th fundamental root, in canonical form."""
    if j == 0:
        return WeylElement(-1, zero_vector(nu))
    return WeylElement(-1, tuple(-c for c in unit_vector(nu, j)))


def pi0_generators(nu: int) -> list[WeylElement]:
    return [generator(nu, j) for j in range(nu + 1)]


def evaluate_pi0_word(word: Pi0Word, nu: int) -> WeylElement:
    for j in word:
        if not 0 <= j <= nu:
            raise ValueError(f"generator index {j} out of range 0..{nu}")
    return evaluate_word([fundamental_root(nu, j) for j in word], nu)


def length_pi0(w: WeylElement) -> int:
    h = height(RootVector(1, w.t))
    d = 1 if w.parity == 1 else 0
    return abs(h) - sign(h) * d


def lengths_pi0(elements: Sequence[WeylElement]) -> list[int]:
    """Batch version of :func:`length_pi0`, run through the active kernel."""
    if not elements:
        return []
    nu = elements[0].nu
    parity = [w.parity for w in elements]
    t_flat = []
    for w in elements:
        if w.nu != nu:
            raise ValueError("mixed nullity in batch")
        t_flat.extend(w.t)
    return list(_backend.pi0_lengths(parity, t_flat, nu))


def reflection_length(alpha: RootVector) -> int:
    if alpha.k == 0:
        raise IsotropicRootError(f"no reflection at isotropic root {alpha}")
    return abs(height(alpha))


def _fill(n_odd: int, n_even: int, odd: list[int], even: list[int]) -> list[int]:
    # pad with generator 0, which does not move the translation part
    odd = sorted(odd + [0] * (n_odd - len(odd)))
    even = sorted(even + [0] * (n_even - len(even)))
    word = []
    for i in range(n_odd + n_even):
        word.append(odd[i // 2] if i % 2 == 0 else even[i // 2])
    return word


def reduced_word_pi0(w: WeylElement) -> list[int]:
    """A word of minimal length for ``w``, built by slot filling.

    Generator ``i >= 1`` is placed ``|m_i|`` times, where ``m_i`` is the i-th
    translation coordinate. For odd elements positives go to even slots and
    negatives to odd slots; for even elements the roles swap. Remaining slots
    take generator 0. Within a slot class generators ascend left to right.
    """
    t = w.t
    pos = [i for i, m in enumerate(t, start=1) for _ in range(max(m, 0))]
    neg = [i for i, m in enumerate(t, start=1) for _ in range(max(-m, 0))]
    k = length_pi0(w)
    n_odd, n_even = (k + 1) // 2, k // 2
    if w.parity == -1:
        return _fill(n_odd, n_even, neg, pos)
    return _fill(n_odd, n_even, pos, neg)


def word_position_counts(word: Pi0Word, nu: int) -> tuple[list[int], list[int]]:
    """Occurrences of each generator at odd (P) and even (N) 1-based positions."""
    P = [0] * (nu + 1)
    N = [0] * (nu + 1)
    for pos, j in enumerate(word, start=1):
        if pos % 2:
            P[j] += 1
        else:
            N[j] += 1
    return P, N


def length_wrt_conjugated_basis(w0: WeylElement, w: WeylElement) -> int:
    """Length of ``w`` over the reflections at ``w0`` applied to the fundamental basis."""
    return length_pi0(multiply(multiply(inverse(w0), w), w0))

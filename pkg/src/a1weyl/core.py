"""
The A1-type Weyl group of nullity nu, acting on A = Z eps + Z^nu.

Every group element is stored in its canonical form ``(parity, t)``, where
``parity`` is the sign of the element (the parity of the number of reflections
in any expression of it) and ``t`` is its translation part in the radical.
Equality of elements is equality of these two fields, so elements can be
hashed and deduplicated directly.

>>> w = multiply(reflection(root(1, (1, 0))), reflection(root(1, (0, 1))))
>>> w
WeylElement(parity=1, t=(-1, 1))
>>> act(w, EPS(2))
RootVector(k=1, sigma=(2, -2))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "LatticeVector", "RootVector", "WeylElement", "Word",
    "NullityMismatchError", "IsotropicRootError",
    "root", "EPS", "zero_vector", "unit_vector",
    "pairing", "reflection", "identity_element", "multiply", "inverse",
    "conjugate", "act", "evaluate_word", "word_epsilon_T", "canonical_word",
    "is_alternating", "power",
]

# coordinates in the fixed Z-basis sigma_1..sigma_nu of the radical
LatticeVector = tuple[int, ...]


class NullityMismatchError(ValueError):
    """Two values living in root systems of different nullity were combined."""


class IsotropicRootError(ValueError):
    """A reflection was requested at an isotropic root (k == 0)."""


def _vector(coords: Iterable[int]) -> LatticeVector:
    out = tuple(int(c) for c in coords)
    if not out:
        raise ValueError("nullity must be at least 1")
    return out


@dataclass(frozen=True, slots=True)
class RootVector:
    """The element ``k*eps + sigma`` of A, a root of the toroidal system."""

    k: int
    sigma: LatticeVector

    def __post_init__(self):
        if self.k not in (-1, 0, 1):
            raise ValueError(f"k must be -1, 0 or 1, got {self.k!r}")
        object.__setattr__(self, "sigma", _vector(self.sigma))

    @property
    def nu(self) -> int:
        return len(self.sigma)

    @property
    def is_isotropic(self) -> bool:
        return self.k == 0

    def __neg__(self) -> RootVector:
        return RootVector(-self.k, tuple(-m for m in self.sigma))

    def to_json(self) -> dict:
        return {"k": self.k, "sigma": list(self.sigma)}

    @classmethod
    def from_json(cls, obj) -> RootVector:
        return cls(obj["k"], obj["sigma"])


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Canonical form ``(parity, t)`` of a Weyl group element."""

    parity: int
    t: LatticeVector

    def __post_init__(self):
        if self.parity not in (-1, 1):
            raise ValueError(f"parity must be -1 or +1, got {self.parity!r}")
        object.__setattr__(self, "t", _vector(self.t))

    @property
    def nu(self) -> int:
        return len(self.t)

    def to_json(self) -> dict:
        return {"eps": self.parity, "t": list(self.t)}

    @classmethod
    def from_json(cls, obj) -> WeylElement:
        return cls(obj["eps"], obj["t"])


# a product of reflections, read left to right
Word = Sequence[RootVector]


def root(k: int, sigma: Iterable[int]) -> RootVector:
    return RootVector(k, tuple(sigma))


def zero_vector(nu: int) -> LatticeVector:
    return (0,) * nu


def unit_vector(nu: int, i: int) -> LatticeVector:
    """sigma_i as a coordinate vector, 1-based as in sigma_1..sigma_nu."""
    if not 1 <= i <= nu:
        raise ValueError(f"index {i} out of range 1..{nu}")
    return tuple(1 if j == i else 0 for j in range(1, nu + 1))


def EPS(nu: int) -> RootVector:
    return RootVector(1, zero_vector(nu))


def _check_nu(a: int, b: int) -> None:
    if a != b:
        raise NullityMismatchError(f"nullity mismatch: {a} != {b}")


def pairing(beta: RootVector, alpha: RootVector) -> int:
    """(beta, alpha^vee); the form only sees the eps-coefficients."""
    _check_nu(beta.nu, alpha.nu)
    return 2 * beta.k * alpha.k


def reflection(alpha: RootVector) -> WeylElement:
    if alpha.k == 0:
        raise IsotropicRootError(f"reflection at isotropic root {alpha}")
    return WeylElement(-1, tuple(alpha.k * m for m in alpha.sigma))


def identity_element(nu: int) -> WeylElement:
    return WeylElement(1, zero_vector(nu))


def multiply(w1: WeylElement, w2: WeylElement) -> WeylElement:
    # T(w1 w2) = parity(w2) T(w1) + T(w2)
    _check_nu(w1.nu, w2.nu)
    p2 = w2.parity
    return WeylElement(w1.parity * p2,
                       tuple(p2 * a + b for a, b in zip(w1.t, w2.t)))


def inverse(w: WeylElement) -> WeylElement:
    p = w.parity
    return WeylElement(p, tuple(-p * a for a in w.t))


def conjugate(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Return ``w1 w2 w1^-1``."""
    return multiply(multiply(w1, w2), inverse(w1))


def power(w: WeylElement, n: int) -> WeylElement:
    if n < 0:
        w, n = inverse(w), -n
    result = identity_element(w.nu)
    base = w
    while n:
        if n & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        n >>= 1
    return result


def act(w: WeylElement, alpha: RootVector) -> RootVector:
    """w(alpha) = parity*k*eps + sigma - 2k T(w)."""
    _check_nu(w.nu, alpha.nu)
    k = alpha.k
    if k == 0:
        return alpha
    return RootVector(w.parity * k,
                      tuple(s - 2 * k * a for s, a in zip(alpha.sigma, w.t)))


def _check_letters(word: Word) -> int:
    nu = None
    for letter in word:
        if letter.k == 0:
            raise IsotropicRootError(f"isotropic letter {letter} in word")
        if nu is None:
            nu = letter.nu
        else:
            _check_nu(nu, letter.nu)
    return nu


def evaluate_word(word: Word, nu: int | None = None) -> WeylElement:
    """Left-to-right product of the reflections at the letters of ``word``.

    ``nu`` is only needed to build the identity for an empty word.
    """
    word_nu = _check_letters(word)
    if word_nu is None:
        if nu is None:
            raise ValueError("empty word needs an explicit nullity")
        return identity_element(nu)
    if nu is not None:
        _check_nu(nu, word_nu)
    result = identity_element(word_nu)
    for letter in word:
        result = multiply(result, reflection(letter))
    return result


def word_epsilon_T(word: Word, nu: int | None = None) -> tuple[int, LatticeVector]:
    """Sign and translation of a word, read off the alternating letter sum.

    Independent of ``multiply``: the translation is
    ``sum_i (-1)^(n-i) sgn(a_i) p(a_i)`` over the letters ``a_1..a_n``.
    """
    word_nu = _check_letters(word)
    if word_nu is None:
        if nu is None:
            raise ValueError("empty word needs an explicit nullity")
        word_nu = nu
    n = len(word)
    acc = [0] * word_nu
    for i, letter in enumerate(word, start=1):
        coef = letter.k if (n - i) % 2 == 0 else -letter.k
        for j, m in enumerate(letter.sigma):
            acc[j] += coef * m
    return (-1) ** n, tuple(acc)


def canonical_word(w: WeylElement) -> list[RootVector]:
    """The unique expression ``w_eps^d w_(eps+T(w))`` with d = 1 iff w is even."""
    if w == identity_element(w.nu):
        return []
    tail = RootVector(1, w.t)
    if w.parity == -1:
        return [tail]
    return [EPS(w.nu), tail]


def is_alternating(word: Word) -> bool:
    """Even length and vanishing alternating sum; equivalent to word == 1."""
    nu = _check_letters(word)
    if len(word) % 2:
        return False
    if nu is None:
        return True
    acc = [0] * nu
    for i, letter in enumerate(word, start=1):
        coef = letter.k if i % 2 == 0 else -letter.k
        for j, m in enumerate(letter.sigma):
            acc[j] += coef * m
    return not any(acc)

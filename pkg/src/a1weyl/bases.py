"""
Root bases, their W-orbits, and the family of pairwise non-conjugate bases.

A basis is an ordered list of ``nu + 1`` roots. As a matrix, row ``i`` holds the
coordinates of element ``i`` in the fixed basis ``(eps, sigma_1, ..., sigma_nu)``;
coordinates of a vector ``v`` in the root basis are then ``v @ B^-1``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction

from .core import RootVector, WeylElement, act
from .length import fundamental_root
from .roots import enumerate_roots, is_in_baby

__all__ = [
    "RootBasis", "NotARootBasisError", "basis_matrix", "integer_inverse",
    "is_root_basis", "fundamental_basis", "apply_to_basis", "invariant_matrix",
    "find_conjugator", "pi_n_family", "root_coordinates",
    "is_classical_root_basis", "root_bases_nu1",
]

RootBasis = tuple[RootVector, ...]


class NotARootBasisError(ValueError):
    pass


def basis_matrix(pi: Sequence[RootVector]) -> list[list[int]]:
    return [[alpha.k, *alpha.sigma] for alpha in pi]


def integer_inverse(matrix: Sequence[Sequence[int]]) -> list[list[int]] | None:
    """Exact inverse of a square integer matrix, or None unless it is unimodular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        pv = aug[col][col]
        det *= pv
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    if abs(det) != 1:
        return None
    return [[int(x) for x in row[n:]] for row in aug]


def _check_arity(pi: Sequence[RootVector]) -> int:
    if not pi:
        raise ValueError("empty basis")
    nu = pi[0].nu
    if len(pi) != nu + 1 or any(alpha.nu != nu for alpha in pi):
        raise ValueError(f"a basis in nullity {nu} needs {nu + 1} roots, got {len(pi)}")
    return nu


def _sigma_rows(pi: Sequence[RootVector]) -> list[list[int]] | None:
    inv = integer_inverse(basis_matrix(pi))
    if inv is None:
        return None
    # sigma_j is the unit row e_j, so its coordinates are row j of the inverse
    return inv[1:]


def is_root_basis(pi: Sequence[RootVector]) -> bool:
    _check_arity(pi)
    if not all(alpha.k != 0 and is_in_baby(alpha) for alpha in pi):
        return False
    rows = _sigma_rows(pi)
    if rows is None:
        return False
    # strictly positive isotropic roots are the nonnegative combinations of the
    # sigma_j, so checking the generators suffices
    return all(c >= 0 for row in rows for c in row)


def fundamental_basis(nu: int) -> RootBasis:
    return tuple(fundamental_root(nu, j) for j in range(nu + 1))


def apply_to_basis(w: WeylElement, pi: Sequence[RootVector]) -> RootBasis:
    return tuple(act(w, alpha) for alpha in pi)


def invariant_matrix(pi: Sequence[RootVector]) -> list[list[int]]:
    """Coordinates of sigma_1..sigma_nu in ``pi``; constant on W-orbits."""
    if not is_root_basis(pi):
        raise NotARootBasisError(f"not a root basis: {pi}")
    return _sigma_rows(pi)


def root_coordinates(pi: Sequence[RootVector], alpha: RootVector) -> list[int]:
    inv = integer_inverse(basis_matrix(pi))
    if inv is None:
        raise NotARootBasisError("basis is not unimodular")
    v = [alpha.k, *alpha.sigma]
    n = len(v)
    return [sum(v[i] * inv[i][j] for i in range(n)) for j in range(n)]


def _solve_pair(alpha: RootVector, image: RootVector) -> WeylElement | None:
    parity = image.k * alpha.k
    diff = [a - b for a, b in zip(alpha.sigma, image.sigma)]
    if any(d % 2 for d in diff):
        return None
    return WeylElement(parity, tuple(alpha.k * d // 2 for d in diff))


def find_conjugator(pi1: Sequence[RootVector],
                    pi2: Sequence[RootVector]) -> WeylElement | None:
    """Some ``w`` with ``w(pi1) == pi2`` as sets, or None.

    Bijections are tried in ``itertools.permutations`` order; each fixes a
    candidate from its first pair and is then checked on every pair.
    """
    nu = _check_arity(pi1)
    if _check_arity(pi2) != nu:
        raise ValueError("bases of different nullity")
    if any(alpha.k == 0 for alpha in (*pi1, *pi2)):
        raise ValueError("basis elements must be non-isotropic")
    for perm in itertools.permutations(range(nu + 1)):
        w = _solve_pair(pi1[0], pi2[perm[0]])
        if w is None:
            continue
        if all(act(w, pi1[i]) == pi2[perm[i]] for i in range(nu + 1)):
            return w
    return None


def pi_n_family(nu: int, n: int) -> RootBasis:
    """The basis whose sigma_1 row is ``(2n-1, 1, 2n-2, 0, ...)``; nu >= 2, n > 1."""
    if nu < 2:
        raise ValueError("the family needs nullity at least 2")
    if n <= 1:
        raise ValueError("the family is indexed by n > 1")

    def vec(*head):
        return tuple(head) + (0,) * (nu - len(head))

    elems = [
        RootVector(1, vec(2, 2)),
        RootVector(-1, vec(-1, -2 * n)),
        RootVector(-1, vec(-2, -1)),
    ]
    for i in range(3, nu + 1):
        sigma = [-2, -2] + [0] * (nu - 2)
        sigma[i - 1] += 1
        elems.append(RootVector(-1, tuple(sigma)))
    return tuple(elems)


def is_classical_root_basis(pi: Sequence[RootVector], roots: Sequence[RootVector]) -> bool:
    """Every given root has all-nonnegative or all-nonpositive coordinates in ``pi``."""
    for alpha in roots:
        c = root_coordinates(pi, alpha)
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            return False
    return True


def root_bases_nu1(max_abs_height: int) -> list[RootBasis]:
    """Exhaustive search for nullity-1 root bases among low-height roots."""
    candidates = [a for a in enumerate_roots(1, max_abs_height) if a.k != 0]
    return [(a, b) for a, b in itertools.product(candidates, repeat=2)
            if is_root_basis((a, b))]

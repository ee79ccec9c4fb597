"""
Brute-force checks that do not go through the closed-form length.

``bfs_lengths`` computes word lengths literally, as shortest paths in the
Cayley graph. The nullity-1 helpers reproduce the classical affine picture:
inversion counting with the textbook positive roots and the action of powers
of the translation ``t_1 = w_(alpha_1) w_(alpha_0)``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from . import _backend
from .core import RootVector, WeylElement, act, identity_element, multiply
from .length import lengths_pi0, pi0_generators
from .roots import pi0_coordinates

__all__ = [
    "LengthReport", "Ball", "bfs_ball", "bfs_lengths", "level_sizes",
    "is_positive_classical", "inversion_count_nu1", "classical_affine_length",
    "affine_translation_action", "verify_theorem_lft",
]


@dataclass(frozen=True)
class LengthReport:
    element: WeylElement
    formula_length: int
    bfs_distance: int
    witness: tuple[int, ...]
    agree: bool

    def to_json(self) -> dict:
        return {
            "element": self.element.to_json(),
            "formula_length": self.formula_length,
            "bfs_distance": self.bfs_distance,
            "witness": list(self.witness),
            "agree": self.agree,
        }


@dataclass
class Ball:
    """Flat BFS output: row ``i`` is the ``i``-th element discovered."""

    nu: int
    elements: list[WeylElement]
    dist: list[int]
    parent: list[int]
    via: list[int]

    def witness(self, i: int) -> tuple[int, ...]:
        word = []
        while self.parent[i] >= 0:
            word.append(self.via[i])
            i = self.parent[i]
        return tuple(reversed(word))


def _check_generators(generators: Sequence[WeylElement]) -> int:
    if not generators:
        raise ValueError("need at least one generator")
    nu = generators[0].nu
    one = identity_element(nu)
    for g in generators:
        if multiply(g, g) != one:
            raise ValueError(f"generator {g} is not an involution")
    return nu


def bfs_ball(generators: Sequence[WeylElement], depth: int) -> Ball:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    nu = _check_generators(generators)
    gen_parity = [g.parity for g in generators]
    gen_t = [a for g in generators for a in g.t]
    parity, t_flat, dist, parent, via = _backend.bfs_ball(gen_parity, gen_t, nu, depth)
    elements = [WeylElement(p, tuple(t_flat[i * nu:(i + 1) * nu]))
                for i, p in enumerate(parity)]
    return Ball(nu, elements, list(dist), list(parent), list(via))


def bfs_lengths(generators: Sequence[WeylElement],
                depth: int) -> dict[WeylElement, tuple[int, tuple[int, ...]]]:
    """Exact word length and a witness (generator indices) within ``depth``."""
    ball = bfs_ball(generators, depth)
    return {w: (ball.dist[i], ball.witness(i)) for i, w in enumerate(ball.elements)}


def level_sizes(generators: Sequence[WeylElement], depth: int) -> list[int]:
    counts = Counter(bfs_ball(generators, depth).dist)
    return [counts[d] for d in range(max(counts) + 1)]


def is_positive_classical(alpha: RootVector) -> bool:
    """Nonzero with all fundamental-basis coordinates nonnegative (nullity 1)."""
    c = pi0_coordinates(alpha)
    return any(c) and all(x >= 0 for x in c)


def inversion_count_nu1(w: WeylElement, bound: int) -> int:
    """Positive roots ``k eps + m sigma_1`` with ``|m| <= bound`` sent to negative roots.

    The count stabilises once ``bound`` exceeds the length of ``w``.
    """
    if w.nu != 1:
        raise ValueError("inversion counting is only defined for nullity 1")
    count = 0
    for m in range(-bound, bound + 1):
        for k in (-1, 1):
            alpha = RootVector(k, (m,))
            if not is_positive_classical(alpha):
                continue
            image = act(w, alpha)
            if not is_positive_classical(image):
                count += 1
    return count


def classical_affine_length(s: int, n: int) -> int:
    """Length of ``w_eps^s t_1^n`` from the affine formulas."""
    if s not in (0, 1):
        raise ValueError("s must be 0 or 1")
    return 2 * abs(n) if s == 0 else abs(2 * n + 1)


def affine_translation_action(n: int, m: int, k: int,
                              twisted: bool = False) -> tuple[int, int]:
    """Fundamental-basis coordinates of ``t_1^n (k eps + m sigma_1)``.

    With ``twisted`` the image is further hit by ``w_eps`` on the left.
    """
    if k not in (-1, 0, 1):
        raise ValueError("k must be -1, 0 or 1")
    first = m - (2 * n + 1) * k if twisted else m - (2 * n - 1) * k
    return first, m - 2 * n * k


def verify_theorem_lft(nu: int, depth: int) -> list[LengthReport]:
    """Compare the closed form with BFS distance on the whole ball.

    Disagreements come first; otherwise reports follow BFS discovery order.
    """
    ball = bfs_ball(pi0_generators(nu), depth)
    formula = lengths_pi0(ball.elements)
    reports = []
    for i, w in enumerate(ball.elements):
        reports.append(LengthReport(w, formula[i], ball.dist[i], ball.witness(i),
                                    formula[i] == ball.dist[i]))
    reports.sort(key=lambda r: r.agree)  # stable: failures first
    return reports


"""Pure-Python kernels. Same contracts and output order as ``_kernels.pyx``."""

from __future__ import annotations

from collections.abc import Sequence


def bfs_ball(gen_parity: Sequence[int], gen_t: Sequence[int], nu: int, depth: int):
    """Breadth-first ball around the identity under right multiplication.

    Generators are given in canonical form, ``gen_t`` flattened row-major.
    Returns ``(parity, t_flat, dist, parent, via)`` in discovery order; row 0
    is the identity with parent -1 and via -1.
    """
    gens = [(gen_parity[g], tuple(gen_t[g * nu:(g + 1) * nu]))
            for g in range(len(gen_parity))]
    start = (1, (0,) * nu)
    seen = {start}
    order = [start]
    dist = [0]
    parent = [-1]
    via = [-1]
    lo, hi = 0, 1
    for d in range(1, depth + 1):
        for idx in range(lo, hi):
            p, t = order[idx]
            for g, (q, s) in enumerate(gens):
                key = (p * q, tuple(q * a + b for a, b in zip(t, s)))
                if key in seen:
                    continue
                seen.add(key)
                order.append(key)
                dist.append(d)
                parent.append(idx)
                via.append(g)
        lo, hi = hi, len(order)
        if lo == hi:
            break
    parity = [p for p, _ in order]
    t_flat = [a for _, t in order for a in t]
    return parity, t_flat, dist, parent, via


def pi0_lengths(parity: Sequence[int], t_flat: Sequence[int], nu: int) -> list[int]:
    """Closed-form fundamental-basis length for a batch of elements."""
    out = []
    for i, p in enumerate(parity):
        plus = minus = 0
        for a in t_flat[i * nu:(i + 1) * nu]:
            if a > 0:
                plus += a
            else:
                minus += a
        h = 1 + 2 * plus if plus >= -minus else 1 + 2 * minus
        if p == 1:
            out.append(abs(h) - (1 if h > 0 else -1))
        else:
            out.append(abs(h))
    return out

"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Prints one row per (workload, backend) with the best wall time.
"""

import argparse
import random
import time

from a1weyl import _backend
from a1weyl.core import WeylElement
from a1weyl.length import lengths_pi0, pi0_generators
from a1weyl.oracle import bfs_ball


def workloads():
    rng = random.Random(0)
    batch = [WeylElement(rng.choice((-1, 1)), tuple(rng.randint(-1000, 1000) for _ in range(3)))
             for _ in range(200_000)]
    flat = [x for w in batch for x in w.t]
    parity = [w.parity for w in batch]

    def raw_bfs(nu, depth):
        gens = pi0_generators(nu)
        gp, gt = [g.parity for g in gens], [x for g in gens for x in g.t]
        return lambda: _backend.bfs_ball(gp, gt, nu, depth)

    return [
        ("raw bfs nu=3 depth=40", raw_bfs(3, 40)),
        ("raw bfs nu=4 depth=20", raw_bfs(4, 20)),
        ("raw lengths 2e5", lambda: _backend.pi0_lengths(parity, flat, 3)),
        ("bfs nu=2 depth=60", lambda: bfs_ball(pi0_generators(2), 60)),
        ("bfs nu=3 depth=24", lambda: bfs_ball(pi0_generators(3), 24)),
        ("bfs nu=4 depth=14", lambda: bfs_ball(pi0_generators(4), 14)),
        ("lengths 2e5 x nu=3", lambda: lengths_pi0(batch)),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _backend.available_backends()
    previous = _backend.active_backend()
    print(f"{'workload':<24}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    try:
        for name, fn in workloads():
            row = {}
            for b in backends:
                _backend.use_backend(b)
                row[b] = best_of(fn, args.repeat)
            line = f"{name:<24}" + "".join(f"{row[b]:>11.3f}s" for b in backends)
            if len(backends) == 2:
                line += f"{row['python'] / row['cython']:>11.1f}x"
            print(line)
    finally:
        _backend.use_backend(previous)


if __name__ == "__main__":
    main()

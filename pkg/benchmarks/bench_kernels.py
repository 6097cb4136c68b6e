"""Compare the compiled and pure-Python partition kernels.

    python benchmarks/bench_kernels.py [--nmax 11] [--repeat 3]

Prints one row per graph size: seconds per call for each backend and the
speed-up.  Graphs are the edgeless graph E_n (the worst case, Bell(n) leaves)
and a seeded random graph with edge probability 0.3.
"""

from __future__ import annotations

import argparse
import random
import timeit

from graphstirling._kernels import _pykernels
from graphstirling.graphs import Graph

try:
    from graphstirling._kernels import _ckernels
except ImportError:
    _ckernels = None


def _random_masks(n: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.3]
    return Graph.from_edges(n, edges).neighbor_masks()


def _time(fn, masks, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(masks), number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'graph':>10} {'n':>3} {'python s':>10} {'cython s':>10} {'speed-up':>9}")
    for n in range(6, args.nmax + 1):
        for label, masks in (("edgeless", [0] * n), ("G(n,0.3)", _random_masks(n, n))):
            py = _time(_pykernels.count_independent_partitions, masks, args.repeat)
            if _ckernels is None:
                print(f"{label:>10} {n:>3} {py:>10.4f} {'-':>10} {'-':>9}")
                continue
            assert list(_ckernels.count_independent_partitions(masks)) == list(
                _pykernels.count_independent_partitions(masks)
            )
            cy = _time(_ckernels.count_independent_partitions, masks, args.repeat)
            print(f"{label:>10} {n:>3} {py:>10.4f} {cy:>10.5f} {py / cy:>8.0f}x")


if __name__ == "__main__":
    main()

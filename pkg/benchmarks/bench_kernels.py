"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from pellsum import _pykernels, kernels

CASES = [
    ("state_cycle pell m=1..600", lambda k: [k.state_cycle([2, 1], [0, 1], m) for m in range(2, 601)]),
    ("state_cycle genPell(3,2) m=97", lambda k: k.state_cycle([2, 0, 0, 1], [0, 0, 0, 1], 97)),
    ("residues fibonacci 10^6 terms", lambda k: k.residues([1, 1], [0, 1], 1000003, 10**6)),
    ("windows_vanish pell N=4 m=4", lambda k: k.windows_vanish([2, 1], [0, 1], 4, 4, 2 * 10**5)),
    ("count_tilings k=1 n=16", lambda k: k.count_tilings(16, 1, 2, 1)),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    native = kernels._native
    if native is None:
        print("compiled kernels not built; only timing Python")
    print(f"{'case':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in CASES:
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if native is None:
            print(f"{name:34} {py:10.4f}")
            continue
        assert fn(native) == fn(_pykernels)
        cy = min(timeit.repeat(lambda: fn(native), number=1, repeat=args.repeat))
        print(f"{name:34} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from hadamard_kit import _backend
from hadamard_kit.constructions import paley_one, sylvester
from hadamard_kit.search import _candidates

C16, C20, C14, C12 = (_candidates(n) for n in (16, 20, 14, 12))
W512 = sylvester(512).words()
W1020 = paley_one(1019).words()
ALL12 = np.concatenate([C12, C12 ^ np.uint64(0xFFF)])

CASES = [
    ("search first n=16", lambda k: k.clique_search(C16, 8, 15, k.MODE_FIRST)),
    ("search first n=20", lambda k: k.clique_search(C20, 10, 19, k.MODE_FIRST)),
    ("search max n=14", lambda k: k.clique_search(C14, 7, 13, k.MODE_MAX)),
    ("gram order 512", lambda k: k.gram(W512, 512)),
    ("gram order 1020", lambda k: k.gram(W1020, 1020)),
    ("pair histogram n=12", lambda k: k.pair_histogram(ALL12, 12)),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _backend.python_kernels)]
    if _backend.compiled_kernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    else:
        backends.insert(0, ("compiled", _backend.compiled_kernels))
    print(f"{'case':<22}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for label, case in CASES:
        times = [best_of(lambda: case(k), args.repeat) for _, k in backends]
        row = f"{label:<22}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            row += f"  {times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

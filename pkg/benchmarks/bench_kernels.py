"""Compare the compiled and pure-Python kernels on exhaustive workloads.

    python3 benchmarks/bench_kernels.py [--n 8] [--repeat 3]
"""

from __future__ import annotations

import argparse
import itertools
import timeit

from catins import _pykernels

try:
    from catins import _kernels
except ImportError:
    _kernels = None


def workloads(impl, words, labelings, shape):
    return {
        "cocharge_label": lambda: [impl.cocharge_label(w) for w in words],
        "insertion_rows": lambda: [impl.insertion_rows(w) for w in words],
        "catabolism_F": lambda: [impl.catabolism_F(z) for z in labelings],
        "catabolism_F_bounded": lambda: [impl.catabolism_F_bounded(z, shape) for z in labelings],
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    words = list(itertools.permutations(range(1, args.n + 1)))
    labelings = [_pykernels.cocharge_label(w) for w in words]
    shape = (args.n // 2, args.n - args.n // 2)

    impls = {"python": _pykernels}
    if _kernels is not None:
        impls["cython"] = _kernels
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{len(words)} words of length {args.n}, best of {args.repeat}")
    print(f"{'kernel':22}" + "".join(f"{name:>12}" for name in impls) + ("     speedup" if len(impls) == 2 else ""))
    for kernel in workloads(_pykernels, words, labelings, shape):
        times = []
        for impl in impls.values():
            fn = workloads(impl, words, labelings, shape)[kernel]
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = f"{kernel:22}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

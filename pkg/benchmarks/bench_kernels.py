"""Time the compiled histogram kernels against the pure Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from olc import _fallback

try:
    from olc import _kernels
except ImportError:  # extension not built
    _kernels = None

CASES = {
    "perm_hist": [(2, 2, 2), (3, 3, 2), (3, 3, 3)],
    "part_hist": [(3, 3, 3), (2, 2, 2, 2, 2), (4, 4, 3)],
    "match_hist": [(3, 3, 2, 2), (4, 4, 4), (2,) * 6],
}


def _args(kernel: str, sizes: tuple[int, ...]):
    boxes = [j for j, s in enumerate(sizes) for _ in range(s)]
    m = len(sizes)
    if kernel == "perm_hist":
        return boxes, [1] * m
    if kernel == "part_hist":
        return boxes, [0] * m, True
    return boxes, m, True


def best_of(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    if _kernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'kernel':<11} {'boxes':<20} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for kernel, cases in CASES.items():
        for sizes in cases:
            args = _args(kernel, sizes)
            slow = best_of(getattr(_fallback, kernel), args, a.repeat)
            if _kernels is None:
                print(f"{kernel:<11} {str(sizes):<20} {slow:>10.4f} {'-':>11} {'-':>8}")
                continue
            if getattr(_kernels, kernel)(*args) != getattr(_fallback, kernel)(*args):
                raise SystemExit(f"{kernel}{sizes}: backends disagree")
            fast = best_of(getattr(_kernels, kernel), args, a.repeat)
            print(f"{kernel:<11} {str(sizes):<20} {slow:>10.4f} {fast:>11.4f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled step kernel against the pure-Python reference.

    python benchmarks/bench_backends.py [--repeat 3]
"""
import argparse
import time

from plcover import search
from plcover.builder import build_cover
from plcover.search import SearchConfig

CASES = [(2, 12), (2, 13), (2, 14), (3, 12), (5, 12), (7, 11)]


def timed(cfg, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        cover = build_cover(cfg, keep=False)
        best = min(best, time.perf_counter() - t0)
    return cover.count, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernel = search._kernel
    if kernel is None:
        print("compiled kernel not available; only the pure-Python path will be timed")
    print(f"{'p':>3} {'E':>3} {'intervals':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for p, E in CASES:
        cfg = SearchConfig(p, E)
        search._kernel = None
        n_py, t_py = timed(cfg, args.repeat)
        search._kernel = kernel
        if kernel is None:
            print(f"{p:>3} {E:>3} {n_py:>10} {t_py:>10.3f} {'-':>10} {'-':>8}")
            continue
        n_c, t_c = timed(cfg, args.repeat)
        assert n_c == n_py
        print(f"{p:>3} {E:>3} {n_py:>10} {t_py:>10.3f} {t_c:>10.3f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()

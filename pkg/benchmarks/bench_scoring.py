#!/usr/bin/env python3
"""Benchmark the compiled scoring kernel against the NumPy fallback.

The workload mirrors retrieval: score a full 500-pair catalog (300-d
vectors) against a handful of context keywords, many contexts in a row.
"""

import argparse
import time

import numpy as np

from punkit.scoring import KERNEL_BACKEND, available_kernels


def run(kernel, pun, alt, contexts, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for ctx in contexts:
            kernel(pun, alt, ctx)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=500)
    parser.add_argument("--dim", type=int, default=300)
    parser.add_argument("--contexts", type=int, default=200)
    parser.add_argument("--keywords", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    pun = np.ascontiguousarray(rng.normal(size=(args.pairs, args.dim)))
    alt = np.ascontiguousarray(rng.normal(size=(args.pairs, args.dim)))
    contexts = [np.ascontiguousarray(rng.normal(size=(args.keywords, args.dim)))
                for _ in range(args.contexts)]

    kernels = available_kernels()
    print(f"active backend: {KERNEL_BACKEND}")
    print(f"workload: {args.contexts} contexts x {args.pairs} pairs x "
          f"{args.dim} dims, {args.keywords} keywords, best of {args.repeats}")

    reference = None
    timings = {}
    for name, kernel in sorted(kernels.items()):
        out = kernel(pun, alt, contexts[0])
        if reference is None:
            reference = out
        else:
            assert np.allclose(out, reference, rtol=1e-12), "kernels disagree"
        timings[name] = run(kernel, pun, alt, contexts, args.repeats)

    base = timings.get("numpy")
    for name, secs in sorted(timings.items()):
        per_ctx = 1000 * secs / args.contexts
        speedup = f"  ({base / secs:.2f}x vs numpy)" if base and name != "numpy" else ""
        print(f"{name:>8}: {secs:.4f}s total, {per_ctx:.3f} ms/context{speedup}")

    if "cython" not in kernels:
        print("compiled kernel not importable; showing fallback only")


if __name__ == "__main__":
    main()

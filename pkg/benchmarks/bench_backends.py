"""Compare the pure-Python and compiled mask kernels.

Two views: microbenchmarks of the five kernel functions on fixed mask
tuples, and the law suite run end to end under each backend.  Run with

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time
import timeit

from softsets import _backend, _kernels_py
from softsets.laws import check_exhaustive, check_random, law_catalog
from softsets.model import new_context

try:
    from softsets import _kernels_cy
except ImportError:
    _kernels_cy = None

N_PARAMS = 8
N_OBJECTS = 16


def _sample_masks(rng, n_params, n_objects):
    full = (1 << n_objects) - 1
    return tuple(rng.randint(0, full) for _ in range(n_params))


def run_micro(repeat: int) -> None:
    rng = random.Random(0)
    a = _sample_masks(rng, N_PARAMS, N_OBJECTS)
    b = _sample_masks(rng, N_PARAMS, N_OBJECTS)
    full = (1 << N_OBJECTS) - 1
    calls = [
        ("intersection_masks", lambda k: k.intersection_masks(a, b)),
        ("union_masks", lambda k: k.union_masks(a, b)),
        ("difference_masks", lambda k: k.difference_masks(a, b)),
        ("complement_masks", lambda k: k.complement_masks(a, full)),
        ("subset_masks", lambda k: k.subset_masks(a, b)),
    ]
    loops = 200_000
    print(f"micro: {loops} calls per timing, |E|={N_PARAMS}, |U|={N_OBJECTS}")
    print(f"{'kernel':24} {'pure us':>10} {'compiled us':>12} {'speedup':>8}")
    for name, call in calls:
        pure = min(
            timeit.repeat(lambda: call(_kernels_py), number=loops, repeat=repeat)
        )
        pure_us = pure / loops * 1e6
        if _kernels_cy is None:
            print(f"{name:24} {pure_us:10.3f} {'n/a':>12} {'n/a':>8}")
            continue
        compiled = min(
            timeit.repeat(lambda: call(_kernels_cy), number=loops, repeat=repeat)
        )
        compiled_us = compiled / loops * 1e6
        print(
            f"{name:24} {pure_us:10.3f} {compiled_us:12.3f} "
            f"{pure / compiled:7.2f}x"
        )


def _law_suite() -> None:
    exhaustive_ctx = new_context(("x1", "x2"), ("e1", "e2"))
    random_ctx = new_context(
        tuple(f"x{i}" for i in range(1, 7)), tuple(f"e{i}" for i in range(1, 7))
    )
    for law in law_catalog():
        assert check_exhaustive(law, exhaustive_ctx).passed
        assert check_random(law, random_ctx, trials=2000, seed=0).passed


def run_macro(repeat: int) -> None:
    print()
    print("macro: full law suite, exhaustive at (2, 2) plus 2000 random")
    print("trials per law at (6, 6)")
    names = ["pure"] + (["compiled"] if _kernels_cy is not None else [])
    previous = _backend.backend_name()
    timings = {}
    try:
        for name in names:
            _backend.use(name)
            best = min(
                _timed(_law_suite) for _ in range(repeat)
            )
            timings[name] = best
            print(f"{name:>9}: {best:8.3f} s")
    finally:
        _backend.use(previous)
    if len(timings) == 2:
        print(f"  speedup: {timings['pure'] / timings['compiled']:.2f}x")


def _timed(fn) -> float:
    started = time.perf_counter()
    fn()
    return time.perf_counter() - started


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeat", type=int, default=3, help="timing repetitions (default 3)"
    )
    args = parser.parse_args()
    print(f"active backend at import: {_backend.backend_name()}")
    run_micro(args.repeat)
    run_macro(args.repeat)


if __name__ == "__main__":
    main()

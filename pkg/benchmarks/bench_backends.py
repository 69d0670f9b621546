"""Compare the numba and numpy kernel backends.

Kernels are timed on pre-drawn permutation blocks (sampling excluded), then
the end-to-end estimators are timed with sampling included.  Counts from the
two backends are checked for equality on every run.

    python benchmarks/bench_backends.py --samples 200000 --repeat 3
"""

import argparse
import time

import numpy as np

from sspower import EstimatorConfig, builtin_instance, estimate, new_game
from sspower import kernels
from sspower.estimators import batch_generator, permutation_blocks


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        started = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - started)
    return best, out


def games(seed):
    rng = np.random.default_rng(seed)
    out = {
        "eu_council": builtin_instance("eu_council").game(),
        "us_electoral": builtin_instance("us_electoral").game(),
    }
    for n in (10, 50, 100):
        w = rng.integers(1, 11, size=n)
        out[f"random_n{n}"] = new_game(int(w.sum()) // 2, w.tolist())
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    # compile once so the first timing is not dominated by JIT
    warm = next(permutation_blocks(4, 8, batch_generator(0, 0)))
    kernels.pivot_counts(warm, np.array([4, 3, 2, 1]), 5, "numba")
    kernels.originator_counts(warm, np.array([4, 3, 2, 1]), 5, "numba")

    print(f"{'game':<14}{'kernel':<12}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, game in games(args.seed).items():
        perms = np.vstack(list(permutation_blocks(game.n, args.samples, batch_generator(args.seed, 0))))
        for kind in ("pivot", "originator"):
            timings = {}
            results = {}
            for backend in kernels.BACKENDS:
                kernel = kernels.get_kernel(kind, backend)
                timings[backend], results[backend] = best_of(
                    lambda: kernel(perms, game.weights_array, np.int64(game.quota)), args.repeat
                )
            assert np.array_equal(results["numba"], results["numpy"]), (name, kind)
            print(f"{name:<14}{kind:<12}{1e3 * timings['numba']:>10.1f}{1e3 * timings['numpy']:>10.1f}"
                  f"{timings['numpy'] / timings['numba']:>9.1f}")

    print()
    print(f"{'end to end':<14}{'algorithm':<12}{'numba s':>10}{'numpy s':>10}{'us/sample':>11}")
    game = builtin_instance("eu_council").game()
    cfg = EstimatorConfig(args.samples, args.seed)
    for algorithm in ("a1", "a2"):
        t = {b: best_of(lambda: estimate(game, algorithm, cfg, backend=b), args.repeat)[0] for b in kernels.BACKENDS}
        print(f"{'eu_council':<14}{algorithm:<12}{t['numba']:>10.3f}{t['numpy']:>10.3f}"
              f"{1e6 * t['numba'] / args.samples:>11.2f}")


if __name__ == "__main__":
    main()

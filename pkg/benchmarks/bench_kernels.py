"""Benchmark the compiled canonicalization kernel against the numpy fallback.

Run:  python3 benchmarks/bench_kernels.py
"""
import random
import time

from invgraphs import _pairs, _purecore

try:
    from invgraphs import _fastcore
except ImportError:
    _fastcore = None

BACKENDS = [("pure", _purecore)] + ([("compiled", _fastcore)] if _fastcore else [])


def timed(fn, repeat=1):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench_min_image(impl, n, count=200, seed=1):
    rng = random.Random(seed)
    gather = _pairs.perm_gather_table(n)
    w = _pairs.weights(n)
    masks = [rng.getrandbits(_pairs.pair_count(n)) for _ in range(count)]
    bits = [_pairs.bits_from_mask(n, m) for m in masks]

    def run():
        return [impl.min_image(b, gather, w) for b in bits]

    return timed(run)


def bench_stabilizer(impl, n, count=200, seed=2):
    rng = random.Random(seed)
    gather = _pairs.perm_gather_table(n)
    w = _pairs.weights(n)
    bits = [
        _pairs.bits_from_mask(n, rng.getrandbits(_pairs.pair_count(n)))
        for _ in range(count)
    ]

    def run():
        return [impl.stabilizer_count(b, gather, w) for b in bits]

    return timed(run)


def bench_orbit_table(impl, n):
    gather = _pairs.perm_gather_table(n)
    w = _pairs.weights(n)

    def run():
        return impl.orbit_table(_pairs.pair_count(n), gather, w)

    return timed(run)


def main():
    if _fastcore is None:
        print("compiled kernel not built; timing the fallback only")
    rows = []
    for name, impl in BACKENDS:
        for n in (6, 7):
            t, _ = bench_min_image(impl, n)
            rows.append((f"min_image n={n} x200", name, t))
            t, _ = bench_stabilizer(impl, n)
            rows.append((f"stabilizer n={n} x200", name, t))
        for n in (6, 7):
            t, _ = bench_orbit_table(impl, n)
            rows.append((f"orbit_table n={n}", name, t))
    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  backend   seconds")
    for label, name, t in rows:
        print(f"{label:<{width}}  {name:<8}  {t:8.4f}")
    if _fastcore is not None:
        # sanity: both backends agree on a common workload
        for n in (5, 6):
            _, pure = bench_min_image(_purecore, n, count=50, seed=3)
            _, fast = bench_min_image(_fastcore, n, count=50, seed=3)
            assert pure == fast, f"backend mismatch at n={n}"
        print("backends agree on the shared workload")


if __name__ == "__main__":
    main()

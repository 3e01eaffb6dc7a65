"""Seeded Monte Carlo demonstrations.

These report frequencies next to exact reference values; nothing here is an
assertion about asymptotics.  Same seed and parameters give identical
output.
"""
import random
from fractions import Fraction
from . import grid, letters
from .graphs import SizeCapError
from .perms import all_perms

EXPERIMENT_KINDS = ("lettericity", "three-letter", "crossing-nested", "runs")


def _rng_for(seed: int, sample: int) -> random.Random:
    return random.Random(seed * 1_000_003 + sample)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def three_letter_trial(n: int, samples: int, seed: int) -> dict:
    """How often every other vertex tolerates three same-letter vertices.

    Fixes the ordered triple (1, 2, 3); a vertex blocks the encoding exactly
    when it agrees on the outer pair but disagrees on the middle vertex, so
    each tolerates independently with probability 3/4.
    """
    placeable = 0
    with_triple = 0
    for s in range(samples):
        g = letters.random_graph(n, _rng_for(seed, s))
        ok = True
        for v in range(4, n + 1):
            a1, a2, a3 = (v in g.adj[1], v in g.adj[2], v in g.adj[3])
            if a1 == a3 and a1 != a2:
                ok = False
                break
        if ok:
            placeable += 1
            pairs = [(1, 2), (1, 3), (2, 3)]
            bits = {g.has_edge(a, b) for a, b in pairs}
            if len(bits) == 1:
                with_triple += 1
    return {
        "kind": "three-letter",
        "n": n,
        "samples": samples,
        "seed": seed,
        "placeable_frequency": _fmt(placeable / samples),
        "clique_or_anticlique_and_placeable_frequency": _fmt(with_triple / samples),
        "reference": _fmt(float(Fraction(3, 4) ** (n - 3))),
    }


def crossing_nested_trial(n: int, samples: int, seed: int) -> dict:
    """How often a separated letter pattern survives on vertices 1,2,3,4.

    A vertex blocks the separated pattern exactly when it disagrees on both
    pairs {1,2} and {3,4}; each tolerates with probability 3/4.
    """
    placeable = 0
    for s in range(samples):
        g = letters.random_graph(n, _rng_for(seed, s))
        ok = True
        for v in range(5, n + 1):
            agree_xy = (v in g.adj[1]) == (v in g.adj[2])
            agree_st = (v in g.adj[3]) == (v in g.adj[4])
            if not agree_xy and not agree_st:
                ok = False
                break
        if ok:
            placeable += 1
    return {
        "kind": "crossing-nested",
        "n": n,
        "samples": samples,
        "seed": seed,
        "placeable_frequency": _fmt(placeable / samples),
        "reference": _fmt(float(Fraction(3, 4) ** (n - 4))),
    }


def run_trial(n: int, samples: int, seed: int) -> dict:
    """Estimated E[X_r] from random permutations next to the exact value."""
    if n > 8:
        raise SizeCapError("exact run expectation capped at n <= 8")
    total = 0
    for s in range(samples):
        rng = _rng_for(seed, s)
        p = tuple(rng.sample(range(1, n + 1), n))
        total += grid.min_monotone_runs(p)
    exact_total = 0
    count = 0
    for p in all_perms(n):
        exact_total += grid.min_monotone_runs(p)
        count += 1
    exact = Fraction(exact_total, count)
    return {
        "kind": "runs",
        "n": n,
        "samples": samples,
        "seed": seed,
        "estimate": _fmt(total / samples),
        "exact": f"{exact.numerator}/{exact.denominator}",
        "bound": _fmt(float(grid.descent_expectations(n)["run_bound"])) if n >= 6 else None,
    }


def run_experiment(kind: str, n: int, samples: int, seed: int) -> dict:
    if kind == "lettericity":
        out = letters.random_lettericity_trial(n, samples, seed)
        out["kind"] = "lettericity"
        return out
    if kind == "three-letter":
        return three_letter_trial(n, samples, seed)
    if kind == "crossing-nested":
        return crossing_nested_trial(n, samples, seed)
    if kind == "runs":
        return run_trial(n, samples, seed)
    raise ValueError(f"unknown experiment {kind!r}; choose from {EXPERIMENT_KINDS}")

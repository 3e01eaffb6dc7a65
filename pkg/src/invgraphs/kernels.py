"""Canonical-form kernels with backend selection.

The compiled Cython core is used when available; otherwise the numpy
fallback.  ``BACKEND`` records which one was picked.  The hot operations
are the min-over-relabelings canonical mask, automorphism (stabilizer)
counts, and the full per-n orbit tables that back graph catalogs and BFS
state deduplication.
"""
from functools import lru_cache

import numpy as np

from ._pairs import bits_from_mask, pair_count, perm_gather_table, weights

try:
    from . import _fastcore as _impl
except ImportError:  # extension not built
    from . import _purecore as _impl

BACKEND = _impl.NAME

# full orbit tables are only built for these sizes (2^21 masks at n=7)
ORBIT_TABLE_MAX_N = 7
# brute-force relabeling search stays tractable up to here
CANONICAL_MAX_N = 9


def canonical_mask(n: int, mask: int) -> int:
    """Minimal edge-mask integer over all vertex relabelings."""
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical form supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return 0
    if n <= ORBIT_TABLE_MAX_N:
        return int(orbit_table_for(n)[mask])
    return _impl.min_image(bits_from_mask(n, mask), perm_gather_table(n), weights(n))


def automorphism_count_mask(n: int, mask: int) -> int:
    """Number of relabelings mapping the labeled graph to itself."""
    if n > CANONICAL_MAX_N:
        raise ValueError(f"automorphism count supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return 1
    return _impl.stabilizer_count(bits_from_mask(n, mask), perm_gather_table(n), weights(n))


@lru_cache(maxsize=None)
def orbit_table_for(n: int) -> np.ndarray:
    """canon[mask] for every labeled graph on n vertices, n <= 7."""
    if not 2 <= n <= ORBIT_TABLE_MAX_N:
        raise ValueError(f"orbit table supports 2 <= n <= {ORBIT_TABLE_MAX_N}, got {n}")
    return _impl.orbit_table(pair_count(n), perm_gather_table(n), weights(n))


def orbit_representatives(n: int) -> list[int]:
    """One minimal mask per isomorphism class of graphs on n vertices."""
    if n <= 1:
        return [0]
    table = orbit_table_for(n)
    reps = np.unique(table)
    return [int(m) for m in reps]

"""Shared pair-indexing conventions for edge-mask graph encodings.

Vertices are 1..n.  Unordered pairs (i, j) with i < j are enumerated
lexicographically: (1,2), (1,3), ..., (1,n), (2,3), ...  A graph on n
vertices is encoded as an integer whose bit for pair index p carries weight
2**(E-1-p), E = C(n,2), so that comparing the integers compares the
upper-triangle bitstrings lexicographically, pair (1,2) first.
"""
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j), 1 <= i < j <= n, in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: p for p, pair in enumerate(pair_list(n))}


@lru_cache(maxsize=None)
def weights(n: int) -> np.ndarray:
    """Bit weight of each pair position in the mask integer."""
    e = pair_count(n)
    return np.array([1 << (e - 1 - p) for p in range(e)], dtype=np.int64)


def mask_from_edges(n: int, edges) -> int:
    idx = pair_index(n)
    e = pair_count(n)
    mask = 0
    for u, v in edges:
        p = idx[(u, v) if u < v else (v, u)]
        mask |= 1 << (e - 1 - p)
    return mask


def edges_from_mask(n: int, mask: int) -> list[tuple[int, int]]:
    e = pair_count(n)
    return [pair for p, pair in enumerate(pair_list(n)) if (mask >> (e - 1 - p)) & 1]


def bits_from_mask(n: int, mask: int) -> np.ndarray:
    e = pair_count(n)
    return np.array([(mask >> (e - 1 - p)) & 1 for p in range(e)], dtype=np.uint8)


@lru_cache(maxsize=4)
def perm_gather_table(n: int) -> np.ndarray:
    """Gather table of shape (n!, E) realizing the S_n action on pair slots.

    Row t, column q holds the pair index whose bit feeds output slot q when
    relabeling by the t-th permutation; the image multiset over all rows is
    the full isomorphism orbit of any mask.
    """
    verts = list(range(n))
    perms = np.array(list(permutations(verts)), dtype=np.int64)
    pidx = np.zeros((n, n), dtype=np.int32)
    for p, (i, j) in enumerate(pair_list(n)):
        pidx[i - 1, j - 1] = pidx[j - 1, i - 1] = p
    table = np.empty((len(perms), pair_count(n)), dtype=np.int32)
    for q, (a, b) in enumerate(pair_list(n)):
        table[:, q] = pidx[perms[:, a - 1], perms[:, b - 1]]
    return table

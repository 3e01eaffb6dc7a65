"""Numpy implementations of the canonicalization kernels.

Fallback used when the compiled extension is unavailable; same contracts as
``_fastcore``.
"""
import numpy as np

NAME = "pure"


def min_image(bits: np.ndarray, gather: np.ndarray, weights: np.ndarray) -> int:
    """Minimum mask integer over all relabeling images of ``bits``."""
    imgs = bits[gather].astype(np.int64)
    return int(imgs.dot(weights).min())


def stabilizer_count(bits: np.ndarray, gather: np.ndarray, weights: np.ndarray) -> int:
    """Number of relabelings fixing the mask (automorphisms)."""
    orig = int(bits.astype(np.int64).dot(weights))
    imgs = bits[gather].astype(np.int64)
    return int((imgs.dot(weights) == orig).sum())


def orbit_table(n_pairs: int, gather: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """canon[m] = minimal mask in the isomorphism orbit of m, for all masks."""
    size = 1 << n_pairs
    table = np.full(size, -1, dtype=np.int32)
    shifts = n_pairs - 1 - np.arange(n_pairs)
    for mask in range(size):
        if table[mask] >= 0:
            continue
        bits = ((mask >> shifts) & 1).astype(np.uint8)
        imgs = bits[gather].astype(np.int64).dot(weights)
        table[imgs] = mask
    return table

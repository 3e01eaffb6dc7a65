import random
from itertools import combinations, permutations

import numpy as np
import pytest

from invgraphs import _pairs, _purecore, kernels
from invgraphs.graphs import Graph, relabel

try:
    from invgraphs import _fastcore
except ImportError:
    _fastcore = None

BACKENDS = [_purecore] + ([_fastcore] if _fastcore else [])


def brute_min_mask(n, mask):
    best = None
    e = _pairs.pair_count(n)
    pairs = _pairs.pair_list(n)
    edges = [pairs[p] for p in range(e) if (mask >> (e - 1 - p)) & 1]
    for sigma in permutations(range(1, n + 1)):
        img = 0
        for u, v in edges:
            a, b = sorted((sigma[u - 1], sigma[v - 1]))
            img |= 1 << (e - 1 - _pairs.pair_index(n)[(a, b)])
        best = img if best is None else min(best, img)
    return best


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.NAME)
def test_min_image_matches_brute_force(impl):
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 6)
        mask = rng.getrandbits(_pairs.pair_count(n))
        got = impl.min_image(
            _pairs.bits_from_mask(n, mask),
            _pairs.perm_gather_table(n),
            _pairs.weights(n),
        )
        assert got == brute_min_mask(n, mask)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.NAME)
def test_stabilizer_matches_brute_force(impl):
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(2, 5)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        count = 0
        for sigma in permutations(range(1, n + 1)):
            m = {v: sigma[v - 1] for v in g.vertices()}
            if relabel(g, m).edges == g.edges:
                count += 1
        got = impl.stabilizer_count(
            _pairs.bits_from_mask(n, g.mask()),
            _pairs.perm_gather_table(n),
            _pairs.weights(n),
        )
        assert got == count


@pytest.mark.skipif(_fastcore is None, reason="compiled kernel not built")
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_backends_agree_on_orbit_tables(n):
    gather = _pairs.perm_gather_table(n)
    w = _pairs.weights(n)
    pure = _purecore.orbit_table(_pairs.pair_count(n), gather, w)
    fast = _fastcore.orbit_table(_pairs.pair_count(n), gather, w)
    assert (np.asarray(pure) == np.asarray(fast)).all()


def test_orbit_representative_counts():
    # numbers of isomorphism classes of graphs on n vertices
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    for n, count in expected.items():
        assert len(kernels.orbit_representatives(n)) == count


def test_canonical_respects_relabeling():
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(2, 7)
        mask = rng.getrandbits(_pairs.pair_count(n))
        g = Graph(n, _pairs.edges_from_mask(n, mask))
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        h = relabel(g, {v: sigma[v - 1] for v in g.vertices()})
        assert kernels.canonical_mask(n, g.mask()) == kernels.canonical_mask(n, h.mask())


def test_canonical_cap():
    with pytest.raises(ValueError):
        kernels.canonical_mask(10, 0)

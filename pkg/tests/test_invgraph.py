from itertools import permutations

import pytest

from invgraphs.graphs import (
    SizeCapError,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    join,
    path_graph,
)
from invgraphs.invgraph import (
    IntervalSystem,
    containment_graph,
    equivalent_permutations,
    from_interval_system,
    inversion_graph,
    parallel_lines_realization,
    recognize,
    to_interval_system,
    interval_system_from_json,
    interval_system_to_json,
)
from invgraphs.perms import all_perms, direct_sum, inverse, is_simple, skew_sum, symmetry_class


def test_inversion_graph_worked_examples():
    assert inversion_graph((3, 1, 5, 4, 2)).edges == frozenset(
        {(1, 3), (2, 3), (2, 4), (2, 5), (4, 5)}
    )
    assert inversion_graph((2, 4, 1, 3)).edges == frozenset({(1, 2), (1, 4), (3, 4)})
    assert inversion_graph((1, 2, 3, 4)).edges == frozenset()


def test_isomorphic_to_inverse_s6():
    for p in all_perms(6):
        assert is_isomorphic(inversion_graph(p), inversion_graph(inverse(p)))


def test_sums_become_union_and_join():
    for s in permutations(range(1, 4)):
        for t in permutations(range(1, 4)):
            assert is_isomorphic(
                inversion_graph(direct_sum(s, t)),
                disjoint_union(inversion_graph(s), inversion_graph(t)),
            )
            assert is_isomorphic(
                inversion_graph(skew_sum(s, t)),
                join(inversion_graph(s), inversion_graph(t)),
            )


def test_interval_system_round_trip():
    for p in all_perms(5):
        s = to_interval_system(p)
        assert containment_graph(s).edges == inversion_graph(p).edges
        assert from_interval_system(s) == p


def test_interval_reading_worked_example():
    s = IntervalSystem((1, 2, 3, 4, 5), (1, 4, 3, 5, 2))
    assert from_interval_system(s) == (1, 4, 3, 5, 2)


def test_single_interval():
    s = IntervalSystem((1,), (1,))
    assert from_interval_system(s) == (1,)


def test_interval_system_rejects_bad_orders():
    with pytest.raises(ValueError):
        IntervalSystem((1, 1), (1, 2))


def test_interval_json():
    s = to_interval_system((3, 1, 2))
    assert interval_system_from_json(interval_system_to_json(s)) == s


def test_parallel_lines_realization():
    r = parallel_lines_realization((3, 1, 5, 4, 2))
    assert r == {"lower": [1, 2, 3, 4, 5], "upper": [3, 1, 5, 4, 2]}


def test_recognize_examples():
    assert recognize(cycle_graph(5)) is None
    perm, mapping = recognize(path_graph(4))
    assert is_isomorphic(inversion_graph(perm), path_graph(4))
    assert recognize(empty_graph(3))[0] == (1, 2, 3)


def test_recognize_witness_on_s6():
    seen = set()
    for p in all_perms(6):
        g = inversion_graph(p)
        key = frozenset(g.edges)
        if key in seen:
            continue
        seen.add(key)
        got = recognize(g)
        assert got is not None
        q, mapping = got
        h = inversion_graph(q)
        for u in g.vertices():
            for v in g.vertices():
                if u < v:
                    assert g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])


def test_equivalent_permutations_examples():
    assert equivalent_permutations((3, 1, 4, 2)) == {(3, 1, 4, 2), (2, 4, 1, 3)}
    assert equivalent_permutations((1, 2, 3, 4)) == {(1, 2, 3, 4)}
    with pytest.raises(SizeCapError):
        equivalent_permutations(tuple(range(1, 9)))


def test_one_interval_example_has_eight_equivalents():
    # skeleton 2413 with its first entry inflated by 3142: one nontrivial
    # interval, so the four plot symmetries pair with the interval swap
    p = (4, 2, 5, 3, 7, 1, 6)
    assert not is_simple(p)
    equiv = equivalent_permutations(p)
    assert len(equiv) == 8
    assert symmetry_class(p) <= equiv


def test_simple_equivalents_are_the_symmetry_class():
    for p in all_perms(6):
        if not is_simple(p):
            continue
        equiv = equivalent_permutations(p)
        assert equiv == symmetry_class(p)
        assert len(equiv) in (1, 2, 4)


def test_circle_realization():
    from invgraphs.invgraph import circle_realization

    assert circle_realization((3, 1, 5, 4, 2)) == [1, 2, 3, 4, 5, 2, 4, 5, 1, 3]

from itertools import permutations

import pytest

from invgraphs.invgraph import inversion_graph
from invgraphs.perms import is_simple
from invgraphs.pins import (
    PinSequence,
    find_reaching_proper_pin_sequence,
    is_proper,
    pin_sequence_from_json,
    pin_sequence_to_json,
    pins_to_chain,
    validate_pin_sequence,
)
from invgraphs.prime import edge_classes, is_chain


def admissible_triples(p):
    entries = [(i + 1, v) for i, v in enumerate(p)]
    for x in entries:
        for y in entries:
            if x == y:
                continue
            imin, imax = sorted((x[0], y[0]))
            vmin, vmax = sorted((x[1], y[1]))
            for z in entries:
                if z in (x, y):
                    continue
                if imin <= z[0] <= imax and vmin <= z[1] <= vmax:
                    continue
                yield x, y, z


def test_paper_example_valid_but_not_proper():
    seq = PinSequence((3, 6, 1, 4, 2, 5), ((3, 1), (4, 4), (1, 3), (5, 2), (2, 6), (6, 5)))
    assert validate_pin_sequence(seq)
    assert seq.directions() == ("left", "right", "up", "right")
    assert not is_proper(seq)


def test_two_points_always_proper():
    seq = PinSequence((2, 1), ((1, 2), (2, 1)))
    assert validate_pin_sequence(seq) and is_proper(seq)


def test_alternating_down_left_is_proper():
    # staircase host read off the alternating down/left pin figure
    seq = PinSequence((2, 4, 1, 5, 3, 6), ((6, 6), (4, 5), (5, 3), (2, 4), (3, 1), (1, 2)))
    assert is_proper(seq)
    chain = pins_to_chain(seq)
    g = inversion_graph(seq.host)
    assert is_chain(g, chain)
    # disconnected case: p1 isolated, the rest a path
    assert not g.adj[chain[0]]


def test_rejects_foreign_points():
    with pytest.raises(ValueError):
        PinSequence((2, 1), ((1, 1),))


def test_reaching_construction_small():
    seq = find_reaching_proper_pin_sequence((3, 1, 4, 2), (1, 3), (2, 1), (4, 2))
    assert is_proper(seq)
    assert seq.points[0] == (1, 3) and seq.points[1] == (2, 1)
    assert seq.points[-1] == (4, 2)


def test_reaching_requires_outside_z():
    # (4, 4) lies inside the rectangle of (2, 5) and (5, 2)
    with pytest.raises(ValueError):
        find_reaching_proper_pin_sequence((3, 5, 1, 4, 2), (2, 5), (5, 2), (4, 4))


def test_reaching_sweep_s5():
    from invgraphs.graphs import connected_components, induced_subgraph, is_connected

    for p in permutations(range(1, 6)):
        if not is_simple(p):
            continue
        g = inversion_graph(p)
        for x, y, z in admissible_triples(p):
            seq = find_reaching_proper_pin_sequence(p, x, y, z)
            assert is_proper(seq)
            assert seq.points[-1] == z
            chain = pins_to_chain(seq)
            assert is_chain(g, chain)
            # connected, or an isolated first-or-second pin plus a path
            h = induced_subgraph(g, chain)
            if not is_connected(h):
                assert not g.has_edge(chain[0], chain[1])
                sizes = sorted(len(c) for c in connected_components(h))
                assert sizes == [1, len(chain) - 1]
                isolated = next(c for c in connected_components(h) if len(c) == 1)
                assert set(isolated) <= {1, 2}  # relabeled chain positions


def test_proper_pin_sequences_are_chains_s5():
    # also the edge-class corollary: p1p2 and p_s p_m share a Gallai class
    for p in permutations(range(1, 6)):
        if not is_simple(p):
            continue
        g = inversion_graph(p)
        classes = edge_classes(g)

        def class_of(e):
            for c in classes:
                if e in c:
                    return c
            raise AssertionError

        for x, y, z in admissible_triples(p):
            seq = find_reaching_proper_pin_sequence(p, x, y, z)
            chain = pins_to_chain(seq)
            if len(chain) < 3 or not g.has_edge(chain[0], chain[1]):
                continue
            s = max(i for i in range(len(chain) - 1) if g.has_edge(chain[i], chain[i + 1]))
            e1 = tuple(sorted((chain[0], chain[1])))
            e2 = tuple(sorted((chain[s], chain[-1])))
            assert g.has_edge(*e2)
            assert class_of(e1) is class_of(e2)


def test_pin_json_round_trip():
    seq = PinSequence((3, 1, 4, 2), ((1, 3), (2, 1), (4, 2)))
    assert pin_sequence_from_json(pin_sequence_to_json(seq)) == seq

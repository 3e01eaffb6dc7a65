import random
from itertools import combinations

import pytest

from invgraphs.graphs import (
    Graph,
    SizeCapError,
    complete_graph,
    generate_all_graphs,
    induced_subgraph,
    is_isomorphic,
    matching_graph,
    path_graph,
)
from invgraphs.invgraph import inversion_graph
from invgraphs.letters import (
    Lettering,
    cochromatic_number,
    decode,
    decode_matches,
    encode_chain,
    extend_lettering,
    lettericity,
    lettericity_exact,
    palindromic_savings,
    random_graph,
    random_lettericity_trial,
    threshold_lettering,
)
from invgraphs.prime import all_chains, is_prime


def test_decode_threshold_example():
    lt = threshold_lettering("abaabb")
    g = decode(lt)
    pi = (4, 3, 5, 6, 2, 1)
    assert len(g.edges) == 10
    for i, j in combinations(range(1, 7), 2):
        assert g.has_edge(i, j) == (pi[i - 1] > pi[j - 1])
    assert is_isomorphic(g, inversion_graph(pi))


def test_decode_trivial():
    empty = Lettering(2, (1, 2, 1), frozenset())
    assert decode(empty).edges == frozenset()
    clique = Lettering(1, (1, 1, 1, 1), frozenset({(1, 1)}))
    assert decode(clique).edges == complete_graph(4).edges


def test_lettericity_values():
    assert lettericity_exact(matching_graph(2))[0] == 2
    assert lettericity_exact(matching_graph(3))[0] == 3
    assert lettericity_exact(complete_graph(4))[0] == 1
    for n in range(3, 8):
        assert lettericity_exact(path_graph(n))[0] == (n + 4) // 3
    assert lettericity_exact(decode(threshold_lettering("abaabb")))[0] == 2


def test_lettericity_witness_is_valid_and_deterministic():
    k, lt, order = lettericity_exact(matching_graph(2))
    assert decode_matches(lt, order, matching_graph(2))
    assert lt.word == (1, 1, 2, 2)
    again = lettericity_exact(matching_graph(2))
    assert (k, lt) == (again[0], again[1])


def test_lettericity_none_when_capped():
    # K4 needs one letter; a 7-vertex graph needing 6 letters exceeds k_max=5
    assert lettericity_exact(matching_graph(2), k_max=1) is None
    with pytest.raises(SizeCapError):
        lettericity_exact(Graph(8), k_max=2)


def test_letters_encode_cliques_or_anticliques():
    rng = random.Random(20)
    for _ in range(25):
        g = random_graph(rng.randint(2, 6), rng)
        k, lt, order = lettericity_exact(g)
        for letter in range(1, lt.k + 1):
            members = [order[i] for i, a in enumerate(lt.word) if a == letter]
            pairs = list(combinations(members, 2))
            if not pairs:
                continue
            same = {g.has_edge(u, v) for u, v in pairs}
            assert len(same) == 1


def test_monotone_under_induced_subgraphs():
    rng = random.Random(21)
    for _ in range(500):
        n = rng.randint(2, 6)
        g = random_graph(n, rng)
        sub = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        h = induced_subgraph(g, sub)
        assert lettericity(h) <= lettericity(g)


def test_cochromatic_lower_bound():
    assert cochromatic_number(matching_graph(3)) == 2
    assert cochromatic_number(complete_graph(5)) == 1
    for g in generate_all_graphs(5):
        assert cochromatic_number(g) <= lettericity(g)


def test_extend_lettering_k4():
    inner = Lettering(1, (1, 1), frozenset({(1, 1)}))
    lt, order = extend_lettering(complete_graph(4), [1, 2], inner)
    assert lt.k == 3
    assert decode_matches(lt, order, complete_graph(4))


def test_extend_lettering_equal_halves():
    g = matching_graph(2)
    inner = Lettering(2, (1, 2, 1, 2), frozenset({(1, 1), (2, 2)}))
    order = [1, 3, 2, 4]
    assert decode_matches(inner, order, g)
    lt, new_order = extend_lettering(g, order, inner)
    assert lt.word == inner.word and new_order == order


def test_extend_lettering_random_with_monochrome_core():
    # any 4 vertices forming a clique or anticlique carry the palindromic
    # word l1 l2 l2 l1, which then extends to the whole graph
    rng = random.Random(22)
    done = 0
    while done < 30:
        g = random_graph(6, rng)
        core = next(
            (
                quad
                for quad in combinations(range(1, 7), 4)
                if len({g.has_edge(u, v) for u, v in combinations(quad, 2)}) == 1
            ),
            None,
        )
        if core is None:
            continue
        clique = g.has_edge(core[0], core[1])
        dec = frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}) if clique else frozenset()
        inner = Lettering(2, (1, 2, 2, 1), dec)
        order = list(core)
        lt, new_order = extend_lettering(g, order, inner)
        assert lt.k == 4
        assert decode_matches(lt, new_order, g)
        done += 1


def test_extend_lettering_validates_inner():
    with pytest.raises(ValueError):
        extend_lettering(complete_graph(4), [1, 2], Lettering(1, (1, 1), frozenset()))


def test_palindromic_savings_small():
    order, lt = palindromic_savings(Graph(2, [(1, 2)]))
    assert lt.k == 1 and order == [1, 2]


def test_palindromic_savings_seven_vertices():
    for g in generate_all_graphs(7):
        order, lt = palindromic_savings(g)
        assert lt.k >= 2
        assert decode_matches(lt, order, g)


def test_palindromic_savings_bound_21():
    rng = random.Random(23)
    # n = 21 guarantees k >= 3 by the pigeonhole bound
    for _ in range(5):
        g = random_graph(21, rng)
        order, lt = palindromic_savings(g)
        assert lt.k >= 3
        assert decode_matches(lt, order, g)


def test_encode_chain_trivial_pair():
    g = Graph(2, [(1, 2)])
    lt, order = encode_chain(g, (1, 2))
    assert lt.word == (1, 1) and lt.decoder == frozenset({(1, 1)})


def test_encode_chain_p4():
    g = inversion_graph((2, 4, 1, 3))
    lt, order = encode_chain(g, (2, 1, 4, 3))
    assert lt.k == 2
    assert decode_matches(lt, order, g)


def test_encode_chain_catalog_sweep():
    for n in range(4, 7):
        for g in generate_all_graphs(n):
            if not is_prime(g):
                continue
            for seq in all_chains(g, 6):
                if len(seq) % 2:
                    continue
                lt, order = encode_chain(g, seq)
                assert set(order) == set(seq)
                assert decode_matches(lt, order, g)


def test_encode_chain_rejects_non_chain():
    with pytest.raises(ValueError):
        encode_chain(path_graph(4), (1, 2, 3, 3))
    with pytest.raises(ValueError):
        encode_chain(path_graph(4), (1, 2, 3))


def test_two_module_word_composition():
    # chains inside disjoint modules compose by nesting the second chain's
    # word in the middle of the first; adjacency between disjoint modules is
    # constant, so the cross decoder entries never conflict
    g = Graph(
        7,
        [(1, 2), (2, 3), (3, 4), (5, 6)]
        + [(7, v) for v in range(1, 7)],
    )
    from invgraphs.prime import is_module

    assert is_module(g, {1, 2, 3, 4}) and is_module(g, {5, 6})
    lt1, order1 = encode_chain(g, (1, 2, 3, 4))
    lt2, order2 = encode_chain(g, (5, 6))
    s, t = lt1.k, lt2.k
    word = (
        lt1.word[:s]
        + tuple(a + s for a in lt2.word)
        + lt1.word[s:]
    )
    order = list(order1[:s]) + list(order2) + list(order1[s:])
    dec = set(lt1.decoder) | {(a + s, b + s) for a, b in lt2.decoder}
    if g.has_edge(order1[0], order2[0]):  # constant across the two modules
        dec |= {(a, s + b) for a in range(1, s + 1) for b in range(1, t + 1)}
        dec |= {(s + b, a) for a in range(1, s + 1) for b in range(1, t + 1)}
    composed = Lettering(s + t, word, frozenset(dec))
    assert decode_matches(composed, order, g)
    # the composed word is again of the crossing form
    k = s + t
    assert sorted(composed.word[:k]) == list(range(1, k + 1))
    assert sorted(composed.word[k:]) == list(range(1, k + 1))


def test_trial_reproducible():
    a = random_lettericity_trial(5, 40, 42)
    b = random_lettericity_trial(5, 40, 42)
    assert a == b
    tiny = random_lettericity_trial(2, 10, 1)
    assert tiny["histogram"] == {"1": 10}

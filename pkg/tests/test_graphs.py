import random
from itertools import combinations, product

import pytest

from invgraphs.graphs import (
    CanonicalForm,
    Graph,
    SizeCapError,
    automorphism_count,
    canonical_form,
    chromatic_number,
    clique_number,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    generate_all_graphs,
    graph6_decode,
    graph6_encode,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_forest,
    is_isomorphic,
    is_perfect,
    join,
    matching_graph,
    nested_triangle,
    path_graph,
)
from invgraphs.invgraph import inversion_graph
from invgraphs.perms import all_perms, reverse


def brute_chromatic(g):
    if not g.edges:
        return 1 if g.n else 0
    for k in range(1, g.n + 1):
        for assign in product(range(k), repeat=g.n):
            if all(assign[u - 1] != assign[v - 1] for u, v in g.edges):
                return k


def brute_clique(g):
    for r in range(g.n, 0, -1):
        for sub in combinations(g.vertices(), r):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return r
    return 0


def random_graph(rng, n):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    return Graph(n, edges)


def test_construction_normalizes_edges():
    g = Graph(3, [(2, 1), (3, 2)])
    assert g.edges == frozenset({(1, 2), (2, 3)})
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 3)])


def test_complement():
    assert complement(complete_graph(4)).edges == frozenset()
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))


def test_complement_is_reversal_s5():
    for p in all_perms(5):
        assert is_isomorphic(complement(inversion_graph(p)), inversion_graph(reverse(p)))


def test_canonical_form_shape():
    form = canonical_form(complete_graph(3))
    assert form == CanonicalForm(3, "111")
    assert canonical_form(empty_graph(1)) == CanonicalForm(1, "")


def test_isomorphism_examples():
    p4 = path_graph(4)
    assert is_isomorphic(p4, complement(p4))
    assert not is_isomorphic(p4, cycle_graph(4))
    assert not is_isomorphic(path_graph(4), path_graph(5))


def test_automorphism_counts():
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(complete_graph(1)) == 1
    assert automorphism_count(path_graph(4)) == 2
    assert automorphism_count(complete_graph(4)) == 24


def test_catalog_counts():
    assert len(generate_all_graphs(1)) == 1
    assert len(generate_all_graphs(3)) == 4
    assert len(generate_all_graphs(4)) == 11
    with pytest.raises(SizeCapError):
        generate_all_graphs(8)


def test_catalog_is_one_per_class():
    reps = generate_all_graphs(5)
    for a, b in combinations(reps, 2):
        assert not is_isomorphic(a, b)


def test_graph6_worked_examples():
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_decode("Bw").edges == complete_graph(3).edges


def test_graph6_round_trip_catalog():
    for n in range(1, 7):
        for g in generate_all_graphs(n):
            assert graph6_decode(graph6_encode(g)).edges == g.edges


def test_graph6_rejects_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("B")  # missing payload
    with pytest.raises(ValueError):
        graph6_decode("~~~")  # long form
    with pytest.raises(ValueError):
        graph6_decode("B" + chr(30))  # byte below 63


def test_chromatic_and_clique_against_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        assert chromatic_number(g) == brute_chromatic(g)
        assert clique_number(g) == brute_clique(g)


def test_perfection():
    assert not is_perfect(cycle_graph(5))
    assert is_perfect(complete_graph(5))
    assert chromatic_number(cycle_graph(5)) == 3
    assert clique_number(cycle_graph(5)) == 2
    rng = random.Random(12)
    for _ in range(10):
        n = rng.randint(2, 6)
        tree_edges = [(i + 1, rng.randint(1, i)) for i in range(1, n)]
        tree = Graph(n, tree_edges)
        assert is_forest(tree)
        assert is_perfect(tree)


def test_builders():
    assert len(matching_graph(3).edges) == 3
    assert nested_triangle(0).edges == frozenset({(1, 2)})
    assert len(nested_triangle(2).edges) == 5
    assert len(complete_bipartite(3, 3).edges) == 9
    assert disjoint_union(complete_graph(2), complete_graph(2)).edges == matching_graph(2).edges
    assert is_isomorphic(join(Graph(2), Graph(1)), complete_bipartite(2, 1))


def test_induced_subgraph_relabels_in_order():
    g = path_graph(5)
    h = induced_subgraph(g, [2, 3, 5])
    assert h.n == 3 and h.edges == frozenset({(1, 2)})


def test_json_round_trip():
    g = cycle_graph(5)
    assert graph_from_json(graph_to_json(g)).edges == g.edges
    assert graph_to_json(g)["edges"] == sorted([list(e) for e in g.edges])

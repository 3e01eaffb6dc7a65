"""Inversion graphs: construction, interval realizations, recognition.

Vertices of G_pi are labeled by value, so the edge set is
{ pi(i) pi(j) : i < j and pi(i) > pi(j) }.
"""
from dataclasses import dataclass
from itertools import permutations

from . import prime
from .graphs import Graph, SizeCapError, canonical_form, complement
from .perms import Perm, check_perm

RECOGNIZE_MAX_N = 9
EQUIVALENTS_MAX_N = 7


def inversion_graph(p: Perm) -> Graph:
    """Graph on values 1..n with an edge per inversion.

    >>> sorted(inversion_graph((3, 1, 5, 4, 2)).edges)
    [(1, 3), (2, 3), (2, 4), (2, 5), (4, 5)]
    """
    p = check_perm(p)
    n = len(p)
    edges = [
        (p[i], p[j])
        for i in range(n)
        for j in range(i + 1, n)
        if p[i] > p[j]
    ]
    return Graph(n, edges)


@dataclass(frozen=True)
class IntervalSystem:
    """n intervals encoded by the two endpoint rank orders.

    left_order lists the interval labels by left endpoint, right_order by
    right endpoint.  Containment depends only on these two orders.
    """

    left_order: tuple[int, ...]
    right_order: tuple[int, ...]

    def __post_init__(self):
        n = len(self.left_order)
        if sorted(self.left_order) != list(range(1, n + 1)) or sorted(
            self.right_order
        ) != list(range(1, n + 1)):
            raise ValueError("endpoint orders must each list every interval once")


def to_interval_system(p: Perm) -> IntervalSystem:
    """Intervals with l_1 < ... < l_n < r_{pi(1)} < ... < r_{pi(n)}."""
    p = check_perm(p)
    return IntervalSystem(tuple(range(1, len(p) + 1)), p)


def from_interval_system(s: IntervalSystem) -> Perm:
    """Label intervals by left-endpoint order, read off right-endpoint order.

    >>> from_interval_system(IntervalSystem((1, 2, 3, 4, 5), (1, 4, 3, 5, 2)))
    (1, 4, 3, 5, 2)
    """
    rank = {label: i + 1 for i, label in enumerate(s.left_order)}
    return tuple(rank[label] for label in s.right_order)


def containment_graph(s: IntervalSystem) -> Graph:
    """Edge when one interval contains the other (vertices = left ranks)."""
    n = len(s.left_order)
    lrank = {label: i for i, label in enumerate(s.left_order)}
    rrank = {label: i for i, label in enumerate(s.right_order)}
    edges = []
    labels = list(s.left_order)
    for a in range(n):
        for b in range(a + 1, n):
            x, y = labels[a], labels[b]
            # x has the smaller left endpoint; containment iff y closes first
            if rrank[y] < rrank[x]:
                edges.append((lrank[x] + 1, lrank[y] + 1))
    return Graph(n, edges)


def interval_system_to_json(s: IntervalSystem) -> dict:
    return {"left_order": list(s.left_order), "right_order": list(s.right_order)}


def interval_system_from_json(obj: dict) -> IntervalSystem:
    return IntervalSystem(tuple(obj["left_order"]), tuple(obj["right_order"]))


def parallel_lines_realization(p: Perm) -> dict:
    """Endpoint label orders of the two-parallel-lines segment drawing."""
    p = check_perm(p)
    return {"lower": list(range(1, len(p) + 1)), "upper": list(p)}


def circle_realization(p: Perm) -> list[int]:
    """Chord endpoint labels around a circle whose equator crosses them all.

    Bending the two parallel lines into the lower and upper semicircles puts
    the upper labels in reversed order.
    """
    p = check_perm(p)
    return list(range(1, len(p) + 1)) + list(reversed(p))


def recognize(g: Graph):
    """A permutation whose inversion graph is isomorphic to g, or None.

    Returns (perm, mapping) where mapping sends each vertex of g to the value
    naming the corresponding vertex of the inversion graph.  Exists exactly
    when g and its complement are both transitively orientable.
    """
    if g.n > RECOGNIZE_MAX_N:
        raise SizeCapError(f"recognition capped at n <= {RECOGNIZE_MAX_N}")
    orient = prime.find_transitive_orientation(g)
    if orient is None:
        return None
    co_orient = prime.find_transitive_orientation(complement(g))
    if co_orient is None:
        return None
    return _perm_from_orientations(g, orient, co_orient)


def _perm_from_orientations(g: Graph, orient, co_orient):
    """Combine transitive orientations of g and its complement into a witness.

    For each vertex the out-degree in g plus the in-degree in the complement
    counts the entries to its left; the two in-degrees count the entries
    below it.
    """
    outdeg = {v: 0 for v in g.vertices()}
    indeg = {v: 0 for v in g.vertices()}
    for a, b in orient:
        outdeg[a] += 1
        indeg[b] += 1
    co_indeg = {v: 0 for v in g.vertices()}
    for a, b in co_orient:
        co_indeg[b] += 1
    index = {v: outdeg[v] + co_indeg[v] + 1 for v in g.vertices()}
    value = {v: indeg[v] + co_indeg[v] + 1 for v in g.vertices()}
    if sorted(index.values()) != list(g.vertices()) or sorted(value.values()) != list(
        g.vertices()
    ):
        return None
    out = [0] * g.n
    for v in g.vertices():
        out[index[v] - 1] = value[v]
    return tuple(out), value


def equivalent_permutations(p: Perm) -> set[Perm]:
    """All permutations of the same length with an isomorphic inversion graph."""
    p = check_perm(p)
    n = len(p)
    if n > EQUIVALENTS_MAX_N:
        raise SizeCapError(f"equivalent-permutation scan capped at n <= {EQUIVALENTS_MAX_N}")
    target = canonical_form(inversion_graph(p))
    out = set()
    for q in permutations(range(1, n + 1)):
        if canonical_form(inversion_graph(q)) == target:
            out.add(q)
    return out

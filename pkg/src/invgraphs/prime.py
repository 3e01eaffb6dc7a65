"""Modules, primality, chains, edge classes, and transitive orientations.

The edge classes of a graph are the equivalence classes of edges under the
closure of the forcing relation: ab and bc are related when they share b and
ac is a non-edge.  A prime graph has one edge class and 0 or 2 transitive
orientations.
"""
from collections import deque
from itertools import combinations

from .graphs import Graph, SizeCapError, automorphism_count, complement
from .perms import Perm, check_perm, inverse, is_simple, symmetry

ORIENTATION_MAX_N = 8
ORIENTATION_LIST_CAP = 64
RECOVER_MAX_N = 8

Arc = tuple[int, int]


# ----------------------------------------------------------------- modules

def is_module(g: Graph, vertices) -> bool:
    """Every vertex outside sees all of `vertices` or none of it."""
    module = set(vertices)
    for w in g.vertices():
        if w in module:
            continue
        seen = {v in g.adj[w] for v in module}
        if len(seen) > 1:
            return False
    return True


def find_nontrivial_module(g: Graph):
    """Smallest nontrivial module, ties broken lexicographically, or None."""
    for size in range(2, g.n):
        for subset in combinations(g.vertices(), size):
            if is_module(g, subset):
                return frozenset(subset)
    return None


def is_prime(g: Graph) -> bool:
    return find_nontrivial_module(g) is None


# ------------------------------------------------------------------ chains

def is_chain(g: Graph, seq) -> bool:
    """Chain condition: each later vertex is adjacent to exactly the previous
    vertex, or to all earlier vertices except the previous one."""
    seq = list(seq)
    if len(seq) != len(set(seq)):
        return False
    for i in range(2, len(seq)):
        v = seq[i]
        prev = seq[i - 1]
        before = seq[:i - 1]
        if v in g.adj[prev]:
            if any(u in g.adj[v] for u in before):
                return False
        else:
            if any(u not in g.adj[v] for u in before):
                return False
    return True


def chain_extensions(g: Graph, used: frozenset, last: int):
    """Vertices that extend a chain with the given prefix set and last vertex."""
    rest = used - {last}
    for q in g.vertices():
        if q in used:
            continue
        if last in g.adj[q]:
            if all(u not in g.adj[q] for u in rest):
                yield q
        else:
            if all(u in g.adj[q] for u in rest):
                yield q


def find_chain(g: Graph, u: int, v: int, w: int):
    """Shortest chain starting u, v and ending w, or None (BFS)."""
    if len({u, v, w}) != 3:
        raise ValueError("u, v, w must be distinct")
    start = (frozenset((u, v)), v)
    parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        used, last = state
        for q in chain_extensions(g, used, last):
            nxt = (used | {q}, q)
            if nxt in parents:
                continue
            parents[nxt] = state
            if q == w:
                seq = [w]
                cur = state
                while cur is not None:
                    seq.append(cur[1])
                    cur = parents[cur]
                seq.append(u)
                return tuple(reversed(seq))
            queue.append(nxt)
    return None


def all_chains(g: Graph, max_len: int):
    """Every chain of length 2..max_len (as vertex tuples)."""
    out = []
    stack = [((a, b), frozenset((a, b))) for a in g.vertices() for b in g.vertices() if a != b]
    while stack:
        seq, used = stack.pop()
        out.append(seq)
        if len(seq) == max_len:
            continue
        for q in chain_extensions(g, used, seq[-1]):
            stack.append((seq + (q,), used | {q}))
    return out


# ------------------------------------------------------------- edge classes

def edge_classes(g: Graph) -> list[frozenset]:
    """Partition of the edge set under the closure of the forcing relation."""
    edges = sorted(g.edges)
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for b in g.vertices():
        nbrs = sorted(g.adj[b])
        for a, c in combinations(nbrs, 2):
            if not g.has_edge(a, c):
                e1 = index[(a, b) if a < b else (b, a)]
                e2 = index[(b, c) if b < c else (c, b)]
                union(e1, e2)
    groups = {}
    for e, i in index.items():
        groups.setdefault(find(i), set()).add(e)
    return [frozenset(s) for s in groups.values()]


# ------------------------------------------------- transitive orientations

def _propagate(g: Graph, arcs: dict, queue: deque) -> bool:
    """Close the arc set under forcing; False on contradiction."""
    while queue:
        x, y = queue.popleft()
        for w in g.adj[y]:
            if w != x and not g.has_edge(x, w):
                if not _force(arcs, queue, (w, y)):
                    return False
        for w in g.adj[x]:
            if w != y and not g.has_edge(w, y):
                if not _force(arcs, queue, (x, w)):
                    return False
        for w in g.adj[x] & g.adj[y]:
            if arcs.get((y, w) if y < w else (w, y)) == (y, w):
                if not _force(arcs, queue, (x, w)):
                    return False
            if arcs.get((w, x) if w < x else (x, w)) == (w, x):
                if not _force(arcs, queue, (w, y)):
                    return False
    return True


def _force(arcs: dict, queue: deque, arc: Arc) -> bool:
    a, b = arc
    key = (a, b) if a < b else (b, a)
    cur = arcs.get(key)
    if cur == arc:
        return True
    if cur is not None:
        return False
    arcs[key] = arc
    queue.append(arc)
    return True


def _is_transitive(g: Graph, arcs: dict) -> bool:
    out = {v: set() for v in g.vertices()}
    for a, b in arcs.values():
        out[a].add(b)
    for a in g.vertices():
        for b in out[a]:
            for c in out[b]:
                if c not in out[a]:
                    return False
    return True


def _orient_search(g: Graph, cap):
    """Yield transitive orientations as sorted arc tuples."""
    edges = sorted(g.edges)

    def solve(arcs):
        missing = next((e for e in edges if e not in arcs), None)
        if missing is None:
            if _is_transitive(g, arcs):
                yield tuple(sorted(arcs.values()))
            return
        for direction in (missing, (missing[1], missing[0])):
            trial = dict(arcs)
            queue = deque()
            if _force(trial, queue, direction) and _propagate(g, trial, queue):
                yield from solve(trial)

    yield from solve({})


def transitive_orientations(g: Graph, cap: int = ORIENTATION_LIST_CAP):
    """Up to `cap` transitive orientations (each a sorted tuple of arcs)."""
    if g.n > ORIENTATION_MAX_N:
        raise SizeCapError(f"orientation enumeration capped at n <= {ORIENTATION_MAX_N}")
    out = []
    for orientation in _orient_search(g, cap):
        out.append(orientation)
        if len(out) >= cap:
            break
    return out


def count_transitive_orientations(g: Graph) -> int:
    if g.n > ORIENTATION_MAX_N:
        raise SizeCapError(f"orientation enumeration capped at n <= {ORIENTATION_MAX_N}")
    return sum(1 for _ in _orient_search(g, None))


def find_transitive_orientation(g: Graph):
    """One transitive orientation, or None."""
    if g.n > ORIENTATION_MAX_N + 1:
        raise SizeCapError("graph too large for orientation search")
    for orientation in _orient_search(g, 1):
        return orientation
    return None


# ------------------------------------------- permutation recovery (simple)

def perm_from_orientations(g: Graph, orient, co_orient):
    """Permutation read off a pair of orientations of g and its complement.

    Out-degree in g plus in-degree in the complement counts the entries to
    the left of a vertex; the two in-degrees count the entries below it.
    Returns (perm, value_of_vertex) or None if the counts are inconsistent.
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
    verts = list(g.vertices())
    if sorted(index.values()) != verts or sorted(value.values()) != verts:
        return None
    out = [0] * g.n
    for v in g.vertices():
        out[index[v] - 1] = value[v]
    return tuple(out), value


def recover_permutations_from_orientations(p: Perm) -> list[Perm]:
    """The four permutations read off the 2 x 2 orientation choices of G_p
    and its complement; as a multiset this is {p, p^-1, p^rc, (p^rc)^-1}."""
    from .invgraph import inversion_graph

    p = check_perm(p)
    if len(p) > RECOVER_MAX_N:
        raise SizeCapError(f"orientation recovery capped at n <= {RECOVER_MAX_N}")
    if not is_simple(p):
        raise ValueError("orientation recovery requires a simple permutation")
    g = inversion_graph(p)
    orients = transitive_orientations(g, cap=4)
    co_orients = transitive_orientations(complement(g), cap=4)
    out = []
    for o in orients:
        for co in co_orients:
            got = perm_from_orientations(g, o, co)
            assert got is not None
            out.append(got[0])
    return out


def automorphism_symmetry_check(p: Perm) -> dict:
    """Automorphism count of G_p against the symmetry set of a simple p.

    The automorphism group of the inversion graph of a simple permutation is
    a subgroup of Z2 x Z2 whose order times the number of distinct symmetry
    images equals 4.
    """
    from .invgraph import inversion_graph

    p = check_perm(p)
    if len(p) > RECOVER_MAX_N:
        raise SizeCapError(f"symmetry check capped at n <= {RECOVER_MAX_N}")
    if not is_simple(p):
        raise ValueError("symmetry check requires a simple permutation")
    rc = symmetry(p, "reverse_complement")
    images = {p, inverse(p), rc, inverse(rc)}
    aut = automorphism_count(inversion_graph(p))
    return {
        "automorphisms": aut,
        "symmetry_images": sorted(images),
        "consistent": aut in (1, 2, 4) and aut * len(images) == 4,
    }

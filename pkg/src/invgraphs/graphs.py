"""Simple undirected graphs on vertices 1..n.

Canonical forms are computed by brute force over vertex relabelings (via the
kernels backend), so equality of canonical forms is exactly isomorphism.
Includes graph6 I/O, the small-graph catalog, and a direct perfection check.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import kernels
from ._pairs import edges_from_mask, mask_from_edges
from .errors import SizeCapError

GRAPH6_MAX_N = 62
PERFECT_MAX_N = 8
CATALOG_MAX_N = 7


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; edges are (u, v) tuples with u < v."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges=()):
        norm = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> dict[int, frozenset]:
        nbrs = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def mask(self) -> int:
        return mask_from_edges(self.n, self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges)})"


def from_mask(n: int, mask: int) -> Graph:
    return Graph(n, edges_from_mask(n, mask))


# ---------------------------------------------------------------- builders

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def matching_graph(m: int) -> Graph:
    """The perfect matching mK2."""
    return Graph(2 * m, [(2 * i - 1, 2 * i) for i in range(1, m + 1)])


def nested_triangle(k: int) -> Graph:
    """N_k = K_2 joined with k isolated vertices (N_0 is a single edge)."""
    edges = [(1, 2)]
    for w in range(3, k + 3):
        edges += [(1, w), (2, w)]
    return Graph(k + 2, edges)


def complement(g: Graph) -> Graph:
    missing = [(u, v) for u, v in combinations(range(1, g.n + 1), 2) if not g.has_edge(u, v)]
    return Graph(g.n, missing)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def join(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    cross = [(u, v + g.n) for u in range(1, g.n + 1) for v in range(1, h.n + 1)]
    return Graph(g.n + h.n, list(g.edges) + shifted + cross)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph relabeled to 1..k preserving the order of `vertices`."""
    verts = list(vertices)
    pos = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(verts), edges)


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    return Graph(g.n, [(mapping[u], mapping[v]) for u, v in g.edges])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[frozenset]:
    seen = set()
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.n - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.n - 1


# ------------------------------------------------------- canonical forms

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically minimal upper-triangle bitstring over relabelings."""

    n: int
    bits: str


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > kernels.CANONICAL_MAX_N:
        raise SizeCapError(f"canonical form capped at n <= {kernels.CANONICAL_MAX_N}")
    cmask = kernels.canonical_mask(g.n, g.mask())
    e = g.n * (g.n - 1) // 2
    return CanonicalForm(g.n, format(cmask, f"0{e}b") if e else "")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g: Graph) -> int:
    if g.n > kernels.CANONICAL_MAX_N:
        raise SizeCapError(f"automorphism count capped at n <= {kernels.CANONICAL_MAX_N}")
    return kernels.automorphism_count_mask(g.n, g.mask())


def generate_all_graphs(n: int) -> list[Graph]:
    """One representative (minimal labeling) per isomorphism class."""
    if n > CATALOG_MAX_N:
        raise SizeCapError(f"catalog generation capped at n <= {CATALOG_MAX_N}")
    return [from_mask(n, m) for m in kernels.orbit_representatives(n)]


# --------------------------------------------------------------- graph6

def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise SizeCapError(f"graph6 short form capped at n <= {GRAPH6_MAX_N}")
    bits = []
    for j in range(2, g.n + 1):
        for i in range(1, j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        val = sum(b << (5 - t) for t, b in enumerate(chunk))
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise ValueError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in text]
    if any(c < 0 or c > 63 for c in codes):
        raise ValueError(f"invalid graph6 byte in {text!r}")
    n = codes[0]
    if n == 63:
        raise ValueError("long-form graph6 (n >= 63) not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(codes) - 1 != need:
        raise ValueError(f"graph6 payload length {len(codes) - 1}, expected {need}")
    bits = []
    for c in codes[1:]:
        bits.extend((c >> (5 - t)) & 1 for t in range(6))
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[n * (n - 1) // 2:]):
        raise ValueError("nonzero padding bits in graph6 string")
    return Graph(n, edges)


# ------------------------------------------------------------- perfection

def clique_number(g: Graph) -> int:
    best = 0
    # adjacency as bitmasks over 0-based vertices
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)

    def grow(candidates: int, size: int):
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            grow(candidates & adj[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def chromatic_number(g: Graph) -> int:
    if not g.edges:
        return 1 if g.n else 0
    lo = clique_number(g)
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def place(v: int, used: int) -> bool:
            if v == g.n:
                return True
            forbidden = 0
            for w in range(v):
                if adj[v] >> w & 1:
                    forbidden |= 1 << colors[w]
            limit = min(k, used + 1)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
            return False

        return place(0, 0)

    k = lo
    while not colorable(k):
        k += 1
    return k


def is_perfect(g: Graph) -> bool:
    """Chromatic number equals clique number on every induced subgraph."""
    if g.n > PERFECT_MAX_N:
        raise SizeCapError(f"perfection check capped at n <= {PERFECT_MAX_N}")
    verts = list(g.vertices())
    for size in range(2, g.n + 1):
        for subset in combinations(verts, size):
            h = induced_subgraph(g, subset)
            if chromatic_number(h) != clique_number(h):
                return False
    return True


# ---------------------------------------------------------------- JSON

def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])

"""Edge and nonedge reflections on graphs.

A reflection picks a vertex pair and a toggle set X containing it, then
toggles every edge between the pair and X (the pair's own edge included).
Edge reflections require the pair adjacent and X inside the union of their
neighborhoods; nonedge reflections require the pair nonadjacent and X free
of common neighbors.  The two kinds are mutually inverse, so any reflection
is an involution.
"""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import kernels
from ._pairs import pair_count
from .graphs import Graph, SizeCapError, from_mask
from .perms import Perm, check_perm

REFLECT_BFS_MAX_N = 7
LEGAL_LIST_MAX_N = 8
BRUHAT_MAX_N = 7
EDGE_EDGE_COVER_MAX_N = 9
NESTED_PARTITION_MAX_N = 8
CYCLIC_EMPTY_MAX_N = 10


@dataclass(frozen=True)
class Reflection:
    u: int
    v: int
    X: frozenset
    kind: str  # "edge" | "nonedge"

    def __init__(self, u, v, X, kind):
        if kind not in ("edge", "nonedge"):
            raise ValueError(f"unknown reflection kind {kind!r}")
        X = frozenset(X)
        if u == v or u not in X or v not in X:
            raise ValueError("X must contain the two distinct chosen vertices")
        object.__setattr__(self, "u", min(u, v))
        object.__setattr__(self, "v", max(u, v))
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "kind", kind)


def is_legal(g: Graph, t: Reflection) -> bool:
    has = g.has_edge(t.u, t.v)
    rest = t.X - {t.u, t.v}
    if any(not 1 <= w <= g.n for w in t.X):
        return False
    if t.kind == "edge":
        return has and all(w in g.adj[t.u] or w in g.adj[t.v] for w in rest)
    return not has and all(not (w in g.adj[t.u] and w in g.adj[t.v]) for w in rest)


def apply_reflection(g: Graph, t: Reflection) -> Graph:
    """Toggle all edges between the pair and X; involution with kinds swapped."""
    if not is_legal(g, t):
        raise ValueError(f"illegal {t.kind} reflection ({t.u}, {t.v}, X={sorted(t.X)})")
    edges = set(g.edges)

    def toggle(a, b):
        e = (a, b) if a < b else (b, a)
        if e in edges:
            edges.remove(e)
        else:
            edges.add(e)

    for w in t.X - {t.u, t.v}:
        toggle(t.u, w)
        toggle(t.v, w)
    toggle(t.u, t.v)
    return Graph(g.n, edges)


def inverse_kind(kind: str) -> str:
    return "nonedge" if kind == "edge" else "edge"


def legal_reflections(g: Graph, kind: str) -> list[Reflection]:
    """All legal reflections of one kind, deduplicated by (pair, set)."""
    if g.n > LEGAL_LIST_MAX_N:
        raise SizeCapError(f"reflection listing capped at n <= {LEGAL_LIST_MAX_N}")
    out = []
    for u, v in combinations(g.vertices(), 2):
        if g.has_edge(u, v) != (kind == "edge"):
            continue
        if kind == "edge":
            eligible = sorted((g.adj[u] | g.adj[v]) - {u, v})
        else:
            eligible = sorted(set(g.vertices()) - (g.adj[u] & g.adj[v]) - {u, v})
        for r in range(len(eligible) + 1):
            for extra in combinations(eligible, r):
                out.append(Reflection(u, v, {u, v, *extra}, kind))
    return out


def reduction_to_reflection(p: Perm, inversion: tuple[int, int]) -> Reflection:
    """The edge reflection realizing the swap of an inversion's values.

    The toggle set is the two values plus the values lying horizontally
    between them in the plot; applying it to the inversion graph gives the
    inversion graph of the reduced permutation.
    """
    p = check_perm(p)
    i, j = inversion
    if not (1 <= i < j <= len(p)) or p[i - 1] <= p[j - 1]:
        raise ValueError(f"({i}, {j}) is not an inversion of the permutation")
    u, v = p[i - 1], p[j - 1]
    between = {p[m - 1] for m in range(i + 1, j)}
    return Reflection(u, v, {u, v} | between, "edge")


def swap_values(p: Perm, u: int, v: int) -> Perm:
    """Left-multiply by the transposition of the values u and v."""
    return tuple(v if x == u else u if x == v else x for x in p)


# ------------------------------------------------------------ Bruhat moves

def bruhat_neighbors(p: Perm, which: str = "strong", direction: str = "down") -> set[Perm]:
    """Permutations one (simple) reflection away in the given direction."""
    p = check_perm(p)
    n = len(p)
    if n > BRUHAT_MAX_N:
        raise SizeCapError(f"Bruhat neighborhood capped at n <= {BRUHAT_MAX_N}")
    if which not in ("strong", "weak") or direction not in ("up", "down"):
        raise ValueError("which must be strong|weak, direction up|down")
    out = set()
    for i in range(1, n):
        js = range(i + 1, n + 1) if which == "strong" else (i + 1,)
        for j in js:
            inverted = p[i - 1] > p[j - 1]
            if inverted != (direction == "down"):
                continue
            q = list(p)
            q[i - 1], q[j - 1] = q[j - 1], q[i - 1]
            out.add(tuple(q))
    return out


def bruhat_distance_to_identity(p: Perm) -> int:
    """Shortest reduction path to the identity in the flipped Bruhat graph."""
    p = check_perm(p)
    e = tuple(range(1, len(p) + 1))
    dist = {p: 0}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        if q == e:
            return dist[q]
        for r in bruhat_neighbors(q, "strong", "down"):
            if r not in dist:
                dist[r] = dist[q] + 1
                queue.append(r)
    raise AssertionError("identity unreachable")


# -------------------------------------------------- BFS to the edgeless graph

def _mask_toggle(n: int, mask: int, u: int, v: int, rest) -> int:
    e = pair_count(n)

    def bit(a, b):
        a, b = (a, b) if a < b else (b, a)
        # pair index in lexicographic order
        p = (a - 1) * (2 * n - a) // 2 + (b - a - 1)
        return 1 << (e - 1 - p)

    for w in rest:
        mask ^= bit(u, w) ^ bit(v, w)
    mask ^= bit(u, v)
    return mask


def _mask_moves(n: int, mask: int, allow_nonedge: bool):
    """Image masks of all legal reflections applied to the labeled mask."""
    g = from_mask(n, mask)
    kinds = ("edge", "nonedge") if allow_nonedge else ("edge",)
    for kind in kinds:
        for u, v in combinations(range(1, n + 1), 2):
            if g.has_edge(u, v) != (kind == "edge"):
                continue
            if kind == "edge":
                eligible = sorted((g.adj[u] | g.adj[v]) - {u, v})
            else:
                eligible = sorted(set(range(1, n + 1)) - (g.adj[u] & g.adj[v]) - {u, v})
            for r in range(len(eligible) + 1):
                for extra in combinations(eligible, r):
                    yield _mask_toggle(n, mask, u, v, extra)


@lru_cache(maxsize=8)
def _distance_table(n: int, allow_nonedge: bool) -> dict[int, int]:
    """Reflection distance to edgeless for every canonical mask on n vertices."""
    canon = kernels.orbit_table_for(n) if n >= 2 else None

    def canon_of(mask):
        return int(canon[mask]) if canon is not None else 0

    reps = kernels.orbit_representatives(n)
    if not allow_nonedge:
        dist = {0: 0}
        for rep in sorted(reps, key=lambda m: m.bit_count()):
            if rep == 0:
                continue
            dist[rep] = 1 + min(
                dist[canon_of(img)] for img in _mask_moves(n, rep, False)
            )
        return dist
    dist = {0: 0}
    queue = deque([0])
    while queue:
        cur = queue.popleft()
        for img in _mask_moves(n, cur, True):
            c = canon_of(img)
            if c not in dist:
                dist[c] = dist[cur] + 1
                queue.append(c)
    for rep in reps:
        dist.setdefault(rep, -1)  # unreachable does not occur; guard anyway
    return dist


def reflection_distance(g: Graph, allow_nonedge: bool = False) -> int:
    """Length of a shortest reflection sequence to the edgeless graph."""
    if g.n > REFLECT_BFS_MAX_N:
        raise SizeCapError(f"reflection BFS capped at n <= {REFLECT_BFS_MAX_N}")
    if g.n <= 1:
        return 0
    table = _distance_table(g.n, allow_nonedge)
    return table[kernels.canonical_mask(g.n, g.mask())]


def bfs_to_edgeless(g: Graph, allow_nonedge: bool = False):
    """(distance, witness reflections) reaching the edgeless graph."""
    if g.n > REFLECT_BFS_MAX_N:
        raise SizeCapError(f"reflection BFS capped at n <= {REFLECT_BFS_MAX_N}")
    if not g.edges:
        return 0, []
    table = _distance_table(g.n, allow_nonedge)
    n = g.n
    witness = []
    current = g
    dist = table[kernels.canonical_mask(n, current.mask())]
    total = dist
    while current.edges:
        moves = legal_reflections(current, "edge")
        if allow_nonedge:
            moves += legal_reflections(current, "nonedge")
        moves.sort(key=lambda t: (t.u, t.v, sorted(t.X), t.kind))
        for t in moves:
            image = apply_reflection(current, t)
            if table[kernels.canonical_mask(n, image.mask())] == dist - 1:
                witness.append(t)
                current = image
                dist -= 1
                break
        else:
            raise AssertionError("no distance-decreasing reflection found")
    return total, witness


# -------------------------------------------------- constructive emptying

def greedy_empty(g: Graph) -> list[Reflection]:
    """Isolate vertices in label order; at most n-1 edge reflections."""
    seq = []
    current = g
    for v in g.vertices():
        nbrs = sorted(current.adj[v])
        if not nbrs:
            continue
        t = Reflection(v, nbrs[0], {v, *nbrs}, "edge")
        seq.append(t)
        current = apply_reflection(current, t)
    assert not current.edges
    return seq


def shortest_cycle(g: Graph):
    """Vertex sequence of a shortest (hence induced) cycle, or None."""
    best = None
    for u, v in sorted(g.edges):
        # shortest u-v path avoiding the edge uv
        parents = {u: None}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            if a == v:
                break
            for b in sorted(g.adj[a]):
                if (a, b) in ((u, v), (v, u)) or b in parents:
                    continue
                parents[b] = a
                queue.append(b)
        if v in parents:
            path = [v]
            while path[-1] is not None and parents[path[-1]] is not None:
                path.append(parents[path[-1]])
            if best is None or len(path) < len(best):
                best = path
    return tuple(best) if best else None


def cyclic_empty(g: Graph):
    """Selective-isolation sweep for graphs with a cycle.

    Returns (sequence, savings) where the sequence empties g within n-2
    edge reflections and savings counts the components of the cycle's
    complement with an even number of edges to the cycle.
    """
    if g.n > CYCLIC_EMPTY_MAX_N:
        raise SizeCapError(f"cyclic sweep capped at n <= {CYCLIC_EMPTY_MAX_N}")
    cycle = shortest_cycle(g)
    if cycle is None:
        raise ValueError("graph has no cycle")
    cyc_set = set(cycle)

    # savings metric of the corollary, computed on the input graph
    savings = 0
    rest = [v for v in g.vertices() if v not in cyc_set]
    seen = set()
    for s in rest:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            a = stack.pop()
            for b in g.adj[a]:
                if b not in cyc_set and b not in comp:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        boundary = sum(1 for a in comp for b in g.adj[a] if b in cyc_set)
        if boundary % 2 == 0:
            savings += 1

    seq = []
    current = g

    def do(t):
        nonlocal current
        seq.append(t)
        current = apply_reflection(current, t)

    # isolate the non-cycle vertices that still touch later ones
    outside = sorted(rest)
    for idx, vi in enumerate(outside):
        later = [w for w in outside[idx + 1:] if w in current.adj[vi]]
        if later:
            do(Reflection(vi, later[0], {vi, *current.adj[vi]}, "edge"))

    # shorten the cycle down to a triangle
    k = len(cycle)
    for t in range(k - 3):
        u, v = cycle[t], cycle[t + 1]
        do(Reflection(u, v, {u, *current.adj[u]}, "edge"))

    x, y, z = cycle[k - 3], cycle[k - 2], cycle[k - 1]

    # plain deletions for pendant attachments
    for w in sorted(current.vertices()):
        if w in (x, y, z):
            continue
        nbrs = sorted(current.adj[w])
        if len(nbrs) == 1:
            do(Reflection(w, nbrs[0], {w, nbrs[0]}, "edge"))

    def attached_to(a, b, not_c):
        return {
            w
            for w in current.vertices()
            if w not in (x, y, z)
            and w in current.adj[a]
            and w in current.adj[b]
            and w not in current.adj[not_c]
        }

    buckets = {
        "x": attached_to(y, z, x),
        "y": attached_to(x, z, y),
        "z": attached_to(x, y, z),
    }
    full = {
        w
        for w in current.vertices()
        if w not in (x, y, z)
        and all(w in current.adj[c] for c in (x, y, z))
    }
    nonempty = [name for name in ("x", "y", "z") if buckets[name]]
    if len(nonempty) <= 1:
        # relabel so the surviving bucket (if any) avoids x
        if nonempty == ["y"]:
            x, y = y, x
        elif nonempty == ["z"]:
            x, z = z, x
        do(Reflection(y, z, current.adj[y] | current.adj[z], "edge"))
    else:
        do(Reflection(y, z, {y, z} | buckets["x"] | full, "edge"))
        do(Reflection(x, z, {x, z} | buckets["y"], "edge"))
        do(Reflection(x, y, {x, y} | buckets["z"], "edge"))
    for a in sorted(full):
        if a in current.adj[x]:
            do(Reflection(x, a, {x, a}, "edge"))
    assert not current.edges, "cyclic sweep did not empty the graph"
    assert len(seq) <= g.n - 2, "cyclic sweep exceeded n-2 reflections"
    return seq, savings


# ----------------------------------------------------- covers and partitions

def min_edge_edge_cover(g: Graph) -> int:
    """Fewest edges meeting every edge at an endpoint."""
    if g.n > EDGE_EDGE_COVER_MAX_N:
        raise SizeCapError(f"edge-edge cover capped at n <= {EDGE_EDGE_COVER_MAX_N}")
    edges = sorted(g.edges)
    if not edges:
        return 0
    for r in range(1, len(edges) + 1):
        for chosen in combinations(edges, r):
            verts = {a for e in chosen for a in e}
            if all(u in verts or v in verts for u, v in edges):
                return r
    raise AssertionError("unreachable")


def nested_triangle_partition(g: Graph):
    """Edge partition into nested-triangle blocks minimizing the block count.

    Each block is a center edge plus outer vertices adjacent to both ends;
    one edge reflection removes a whole block.  Returns (blocks, count)
    with blocks as (center_edge, outer_vertices) pairs.
    """
    if g.n > NESTED_PARTITION_MAX_N:
        raise SizeCapError(f"nested-triangle partition capped at n <= {NESTED_PARTITION_MAX_N}")
    edges = sorted(g.edges)
    if not edges:
        return [], 0
    index = {e: i for i, e in enumerate(edges)}
    full = (1 << len(edges)) - 1

    def block_mask(center, outer):
        u, v = center
        mask = 1 << index[center]
        for w in outer:
            mask |= 1 << index[(u, w) if u < w else (w, u)]
            mask |= 1 << index[(v, w) if v < w else (w, v)]
        return mask

    best: list = []
    best_count = len(edges) + 1
    max_block = 1 + 2 * max(
        (len(g.adj[u] & g.adj[v]) for u, v in edges), default=0
    )

    def candidates(e, uncovered):
        """Blocks containing edge e with all block edges uncovered."""
        out = []
        seen = set()
        a, b = e
        for center in [(a, b)] + [
            tuple(sorted((a, c))) for c in g.adj[a] if c != b
        ] + [tuple(sorted((b, c))) for c in g.adj[b] if c != a]:
            if center not in index or not (uncovered >> index[center]) & 1:
                continue
            u, v = center
            common = sorted(g.adj[u] & g.adj[v])
            usable = [
                w
                for w in common
                if (uncovered >> index[(u, w) if u < w else (w, u)]) & 1
                and (uncovered >> index[(v, w) if v < w else (w, v)]) & 1
            ]
            must = set(e) - set(center)
            if must - set(usable):
                continue
            for r in range(len(usable), -1, -1):
                for outer in combinations(usable, r):
                    if must <= set(outer) and (center, outer) not in seen:
                        seen.add((center, outer))
                        out.append((center, outer))
        out.sort(key=lambda co: -len(co[1]))
        return out

    def search(uncovered, blocks):
        nonlocal best, best_count
        if not uncovered:
            if len(blocks) < best_count:
                best_count = len(blocks)
                best = list(blocks)
            return
        # every block removes at most max_block edges; admissible bound
        need = -(-uncovered.bit_count() // max_block)
        if len(blocks) + need >= best_count:
            return
        low = (uncovered & -uncovered).bit_length() - 1
        e = edges[low]
        for center, outer in candidates(e, uncovered):
            mask = block_mask(center, outer)
            blocks.append((center, frozenset(outer)))
            search(uncovered & ~mask, blocks)
            blocks.pop()

    search(full, [])
    return best, best_count


def partition_bound_value(g: Graph, blocks) -> int:
    """m - 2 * sum(k * n_k) for a nested-triangle edge partition."""
    return len(g.edges) - 2 * sum(len(outer) for _, outer in blocks)


def reflection_to_json(t: Reflection) -> dict:
    return {"u": t.u, "v": t.v, "X": sorted(t.X), "kind": t.kind}


def reflection_from_json(obj: dict) -> Reflection:
    return Reflection(int(obj["u"]), int(obj["v"]), set(obj["X"]), obj["kind"])

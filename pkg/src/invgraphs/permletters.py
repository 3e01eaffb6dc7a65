"""Letter graphs decoded on a host permutation.

Two decoders: I fires on inversions of the host, N on noninversions.  With
one letter and I = {(a,a)} this is exactly the inversion graph, so the
1-letter permutation letter graphs are the inversion graphs.
"""
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .graphs import Graph, SizeCapError
from .perms import Perm, check_perm, format_perm, parse_perm

ELL_PERM_MAX_N = 5


@dataclass(frozen=True)
class PermLettering:
    k: int
    word: tuple[int, ...]
    host: Perm
    inv_decoder: frozenset
    noninv_decoder: frozenset

    def __post_init__(self):
        check_perm(self.host)
        if len(self.word) != len(self.host):
            raise ValueError("word and host must have the same length")
        pairs = set(self.inv_decoder) | set(self.noninv_decoder)
        if any(not 1 <= a <= self.k for a in self.word) or any(
            not (1 <= a <= self.k and 1 <= b <= self.k) for a, b in pairs
        ):
            raise ValueError("letters must lie in 1..k")


def decode_perm(pl: PermLettering) -> Graph:
    """Edge ij when the pair's decoder contains the letter pair.

    >>> pl = PermLettering(3, (1, 1, 2, 3, 3, 2), (2, 5, 3, 6, 1, 4),
    ...                    frozenset({(1, 2), (2, 3)}), frozenset({(1, 3), (2, 3)}))
    >>> sorted(decode_perm(pl).edges)
    [(1, 4), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5)]
    """
    w, host = pl.word, pl.host
    n = len(w)
    edges = []
    for i, j in combinations(range(n), 2):
        decoder = pl.inv_decoder if host[i] > host[j] else pl.noninv_decoder
        if (w[i], w[j]) in decoder:
            edges.append((i + 1, j + 1))
    return Graph(n, edges)


def complement_decoders(pl: PermLettering) -> PermLettering:
    """Complementing both decoders within (1..k)^2 complements the graph."""
    full = set(product(range(1, pl.k + 1), repeat=2))
    return PermLettering(
        pl.k,
        pl.word,
        pl.host,
        frozenset(full - set(pl.inv_decoder)),
        frozenset(full - set(pl.noninv_decoder)),
    )


def _solve_on_host(g: Graph, host: Perm, k: int, word_prefix: tuple[int, ...]):
    """Joint (word, vertex placement) search on one host, mirroring the
    lettericity solver; returns (word, order, I, N) or None."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    word = [0] * n
    verts = [0] * n
    dmaps = ({}, {})  # noninversion, inversion

    def place(pos: int, used_mask: int, max_letter: int):
        if pos == n:
            return True
        if pos < len(word_prefix):
            letters = (word_prefix[pos],)
        else:
            letters = range(1, min(max_letter + 1, k) + 1)
        for letter in letters:
            if letter > max_letter + 1:
                continue
            for v in range(n):
                if used_mask >> v & 1:
                    continue
                added = []
                ok = True
                for i in range(pos):
                    dmap = dmaps[1 if host[i] > host[pos] else 0]
                    key = (word[i], letter)
                    bit = adj[verts[i]] >> v & 1
                    cur = dmap.get(key)
                    if cur is None:
                        dmap[key] = bit
                        added.append((dmap, key))
                    elif cur != bit:
                        ok = False
                        break
                if ok:
                    word[pos] = letter
                    verts[pos] = v
                    if place(pos + 1, used_mask | (1 << v), max(max_letter, letter)):
                        return True
                for dmap, key in added:
                    del dmap[key]
        return False

    if place(0, 0, 0):
        noninv, inv = dmaps
        return (
            tuple(word),
            tuple(v + 1 for v in verts),
            frozenset(key for key, bit in inv.items() if bit),
            frozenset(key for key, bit in noninv.items() if bit),
        )
    return None


def ell_perm_exact(g: Graph):
    """Least alphabet size over all (host, word, I, N), with a witness.

    Hosts are scanned in Lehmer-rank order and the witness word is the
    lexicographically least for the first feasible host.  Returns
    (k, lettering, vertex_order) with decode isomorphic to g via the order.
    """
    if g.n > ELL_PERM_MAX_N:
        raise SizeCapError(f"ell_perm search capped at n <= {ELL_PERM_MAX_N}")
    n = g.n
    for k in range(1, (n + 1) // 2 + 1):
        for host in permutations(range(1, n + 1)):
            if _solve_on_host(g, host, k, ()) is None:
                continue
            prefix: tuple[int, ...] = ()
            for _ in range(n):
                for letter in range(1, k + 1):
                    if _solve_on_host(g, host, k, prefix + (letter,)) is not None:
                        prefix = prefix + (letter,)
                        break
            word, order, inv_dec, noninv_dec = _solve_on_host(g, host, k, prefix)
            return k, PermLettering(k, word, host, inv_dec, noninv_dec), order
    return None


def universal_encoding(g: Graph) -> PermLettering:
    """An explicit ceil(n/2)-letter permutation lettering of any graph.

    The host is a descending block direct-summed with another; the word is
    mirrored across the two blocks so every vertex pair hits a distinct
    decoder slot.
    """
    n = g.n
    if n == 0:
        raise ValueError("need at least one vertex")
    k = (n + 1) // 2
    first = n - n // 2  # block sizes: first gets the extra vertex when n odd
    host = tuple(range(first, 0, -1)) + tuple(range(n, first, -1))
    word = tuple(range(first, 0, -1)) + tuple(range(1, n - first + 1))
    inv_dec = set()
    noninv_dec = set()
    for i, j in combinations(range(n), 2):
        if not g.has_edge(i + 1, j + 1):
            continue
        if host[i] > host[j]:
            inv_dec.add((word[i], word[j]))
        else:
            noninv_dec.add((word[i], word[j]))
    return PermLettering(k, word, host, frozenset(inv_dec), frozenset(noninv_dec))


def path_host(n: int) -> Perm:
    """A permutation whose inversion graph is the path 2-1-4-3-6-5-...

    >>> path_host(6)
    (2, 4, 1, 6, 3, 5)
    """
    if n < 2:
        raise ValueError("paths need n >= 2")
    out = []
    for i in range(1, n + 1):
        if i == 1:
            out.append(2)
        elif i % 2 == 0:
            out.append(i + 2 if i + 2 <= n else (n if n % 2 else n - 1))
        else:
            out.append(i - 2)
    return check_perm(out)


def cycle_encoding(n: int) -> PermLettering:
    """Two-letter permutation lettering decoding to the n-cycle, n >= 5.

    The host draws a path; its two leaf entries get the second letter, whose
    noninversion decoder entry closes the cycle.
    """
    if n < 5:
        raise ValueError("cycle encoding requires n >= 5")
    host = path_host(n)
    leaves = {2, n if n % 2 else n - 1}
    word = tuple(2 if v in leaves else 1 for v in host)
    return PermLettering(
        2,
        word,
        host,
        frozenset({(1, 1), (1, 2), (2, 1)}),
        frozenset({(2, 2)}),
    )


def counting_bound_report(n: int, alpha: float) -> dict:
    """Arithmetic of the counting argument that some graph needs > alpha*n letters.

    Compares the number of labeled n-vertex graphs with the number of
    permutation k-letter graphs for k = floor(alpha*n); when the graph count
    exceeds the encoding count, some graph on n vertices is not a
    permutation k-letter graph.  Pure arithmetic; no graph search.
    """
    from math import factorial, log2

    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    k = int(alpha * n)
    if k < 1:
        raise ValueError("alpha*n must be at least 1")
    graphs = 2 ** (n * (n - 1) // 2)
    encodings = factorial(n) ** 2 * k**n * 2 ** (2 * k * k)
    return {
        "n": n,
        "alpha": alpha,
        "k": k,
        "log2_graph_count": f"{n * (n - 1) / 2:.6g}",
        "log2_encoding_count": f"{2 * log2(factorial(n)) + n * log2(k) + 2 * k * k:.6g}",
        "bound_exceeded": graphs > encodings,
    }


def perm_lettering_to_json(pl: PermLettering) -> dict:
    return {
        "k": pl.k,
        "word": list(pl.word),
        "host": format_perm(pl.host),
        "I": sorted(list(p) for p in pl.inv_decoder),
        "N": sorted(list(p) for p in pl.noninv_decoder),
    }


def perm_lettering_from_json(obj: dict) -> PermLettering:
    return PermLettering(
        int(obj["k"]),
        tuple(obj["word"]),
        parse_perm(obj["host"]),
        frozenset(tuple(p) for p in obj["I"]),
        frozenset(tuple(p) for p in obj["N"]),
    )

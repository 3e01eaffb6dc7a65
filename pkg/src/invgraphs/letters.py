"""Letter graphs, exact lettericity, and letter-saving constructions.

A lettering is a word plus a decoder of ordered letter pairs; position pair
i < j decodes to an edge exactly when (w(i), w(j)) is in the decoder.
Letters are integers 1..k, renumbered by first occurrence in all outputs.
"""
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import Graph, SizeCapError
from .prime import is_chain

LETTERICITY_MAX_N = 7
LETTERICITY_MAX_K = 5


@dataclass(frozen=True)
class Lettering:
    k: int
    word: tuple[int, ...]
    decoder: frozenset

    def __post_init__(self):
        if any(not 1 <= a <= self.k for a in self.word):
            raise ValueError("word letters must lie in 1..k")
        if any(not (1 <= a <= self.k and 1 <= b <= self.k) for a, b in self.decoder):
            raise ValueError("decoder pairs must lie in (1..k)^2")


def decode(lettering: Lettering) -> Graph:
    """Letter graph on positions 1..n.

    >>> th = Lettering(2, (1, 2, 1, 1, 2, 2), frozenset({(1, 2), (2, 2)}))
    >>> len(decode(th).edges)
    10
    """
    w = lettering.word
    n = len(w)
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(n), 2)
        if (w[i], w[j]) in lettering.decoder
    ]
    return Graph(n, edges)


def decode_matches(lettering: Lettering, order, g: Graph) -> bool:
    """decode equals g when position p is read as vertex order[p-1]."""
    order = list(order)
    if len(order) != len(lettering.word) or set(order) - set(g.vertices()):
        return False
    w = lettering.word
    for i, j in combinations(range(len(order)), 2):
        if ((w[i], w[j]) in lettering.decoder) != g.has_edge(order[i], order[j]):
            return False
    return True


def normalize_letters(word, decoder) -> tuple[tuple[int, ...], frozenset]:
    """Renumber letters by first occurrence in the word."""
    remap = {}
    for a in word:
        if a not in remap:
            remap[a] = len(remap) + 1
    new_word = tuple(remap[a] for a in word)
    new_dec = frozenset(
        (remap[a], remap[b]) for a, b in decoder if a in remap and b in remap
    )
    return new_word, new_dec


# ------------------------------------------------------------ exact solver

def cochromatic_number(g: Graph) -> int:
    """Fewest parts in a partition into cliques and anticliques."""
    if g.n == 0:
        return 0
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)

    def monochrome(sub: int) -> bool:
        verts = [v for v in range(g.n) if sub >> v & 1]
        pairs = list(combinations(verts, 2))
        return all(adj[a] >> b & 1 for a, b in pairs) or not any(
            adj[a] >> b & 1 for a, b in pairs
        )

    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def best(rem: int) -> int:
        if rem == 0:
            return 0
        low = rem & -rem
        score = g.n
        sub = rem
        while sub:
            if sub & low and monochrome(sub):
                score = min(score, 1 + best(rem & ~sub))
            sub = (sub - 1) & rem
        return score

    out = best(full)
    best.cache_clear()
    return out


def _solve_lettering(g: Graph, k: int, word_prefix: tuple[int, ...]):
    """A (word, vertex_order, decoder) with the given word prefix, or None."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)

    word = [0] * n
    verts = [0] * n
    dmap = {}

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
                    key = (word[i], letter)
                    bit = adj[verts[i]] >> v & 1
                    cur = dmap.get(key)
                    if cur is None:
                        dmap[key] = bit
                        added.append(key)
                    elif cur != bit:
                        ok = False
                        break
                if ok:
                    word[pos] = letter
                    verts[pos] = v
                    if place(pos + 1, used_mask | (1 << v), max(max_letter, letter)):
                        return True
                for key in added:
                    del dmap[key]
        return False

    if place(0, 0, 0):
        decoder = frozenset(key for key, bit in dmap.items() if bit)
        return tuple(word), tuple(v + 1 for v in verts), decoder
    return None


def lettericity_exact(g: Graph, k_max: int = LETTERICITY_MAX_K):
    """Least k <= k_max with a k-lettering of g, plus a witness.

    Returns (k, lettering, vertex_order) with the lexicographically least
    witness word (letters numbered by first occurrence), or None when no
    lettering with at most k_max letters exists.
    """
    if g.n > LETTERICITY_MAX_N:
        raise SizeCapError(f"lettericity solver capped at n <= {LETTERICITY_MAX_N}")
    if k_max > LETTERICITY_MAX_K:
        raise SizeCapError(f"lettericity solver capped at k <= {LETTERICITY_MAX_K}")
    if g.n == 0:
        raise ValueError("empty graph has no lettering")
    for k in range(max(1, cochromatic_number(g)), k_max + 1):
        if _solve_lettering(g, k, ()) is None:
            continue
        # fix the lexicographically least word one position at a time
        prefix: tuple[int, ...] = ()
        for _ in range(g.n):
            for letter in range(1, k + 1):
                if _solve_lettering(g, k, prefix + (letter,)) is not None:
                    prefix = prefix + (letter,)
                    break
        word, order, decoder = _solve_lettering(g, k, prefix)
        return k, Lettering(k, word, decoder), order
    return None


def lettericity(g: Graph) -> int:
    """Exact lettericity, using the n-1 fallback when the solver caps out."""
    if g.n <= 1:
        return g.n
    result = lettericity_exact(g, min(LETTERICITY_MAX_K, g.n - 1))
    return result[0] if result is not None else g.n - 1


# ----------------------------------------------------------- constructions

def _check_crossing_form(word) -> int:
    """Validate the two-halves word form; returns k."""
    if len(word) % 2 or not word:
        raise ValueError("word must have even length 2k")
    k = len(word) // 2
    if list(word[:k]) != list(range(1, k + 1)) or sorted(word[k:]) != list(
        range(1, k + 1)
    ):
        raise ValueError("word must be 1..k followed by a permutation of 1..k")
    return k


def extend_lettering(g: Graph, h_vertices, inner: Lettering):
    """Extend a two-halves lettering of an induced subgraph to all of g.

    h_vertices lists the 2k subgraph vertices in word-position order.  The
    remaining vertices get fresh letters inserted in the middle, so g gets a
    lettering with n - k letters.  Returns (lettering, vertex_order).
    """
    h_vertices = list(h_vertices)
    k = _check_crossing_form(inner.word)
    if len(h_vertices) != 2 * k:
        raise ValueError("h_vertices must match the word length")
    if not decode_matches(inner, h_vertices, g):
        raise ValueError("inner lettering does not decode to g on h_vertices")
    xs = h_vertices[:k]
    ys_by_letter = {inner.word[k + t]: h_vertices[k + t] for t in range(k)}
    rest = [v for v in g.vertices() if v not in set(h_vertices)]
    m = len(rest)
    word = tuple(range(1, k + 1)) + tuple(range(k + 1, k + m + 1)) + inner.word[k:]
    order = xs + rest + h_vertices[k:]
    dec = set(inner.decoder)
    for i, j in combinations(range(m), 2):
        if g.has_edge(rest[i], rest[j]):
            dec.add((k + i + 1, k + j + 1))
    for i in range(1, k + 1):
        for j in range(m):
            if g.has_edge(xs[i - 1], rest[j]):
                dec.add((i, k + j + 1))
            if g.has_edge(rest[j], ys_by_letter[i]):
                dec.add((k + j + 1, i))
    lettering = Lettering(k + m, word, frozenset(dec))
    assert decode_matches(lettering, order, g)
    return lettering, order


def palindromic_savings(g: Graph):
    """Greedy palindromic-word subgraph via the agreeing-pairs pigeonhole.

    Starts from the two smallest vertices and, while some outside pair agrees
    on the whole subgraph, absorbs the lexicographically least such pair.
    Returns (h_vertices in word order, lettering on the palindrome word).
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    xs = [1]
    ys = [2]
    dec = set()
    if g.has_edge(1, 2):
        dec.add((1, 1))
    while True:
        k = len(xs)
        inside = set(xs) | set(ys)
        outside = [v for v in g.vertices() if v not in inside]
        pair = next(
            (
                (u, v)
                for u, v in combinations(sorted(outside), 2)
                if all(g.has_edge(u, h) == g.has_edge(v, h) for h in inside)
            ),
            None,
        )
        if pair is None:
            break
        u, v = pair
        new = k + 1
        for i in range(1, k + 1):
            if g.has_edge(xs[i - 1], u):
                dec.add((i, new))
            if g.has_edge(u, ys[i - 1]):
                dec.add((new, i))
        if g.has_edge(u, v):
            dec.add((new, new))
        xs.append(u)
        ys.append(v)
    k = len(xs)
    order = xs + list(reversed(ys))
    word = tuple(range(1, k + 1)) + tuple(range(k, 0, -1))
    lettering = Lettering(k, word, frozenset(dec))
    assert decode_matches(lettering, order, g)
    return order, lettering


def encode_chain(g: Graph, chain):
    """Two-halves lettering of the induced subgraph of an even-length chain.

    Returns (lettering, vertex_order); the word uses k letters for a chain
    of length 2k and decode matches g on the returned order.
    """
    chain = list(chain)
    if len(chain) % 2 or len(chain) < 2:
        raise ValueError("chain must have even length >= 2")
    if not is_chain(g, chain):
        raise ValueError("sequence is not a chain")
    p1, p2 = chain[0], chain[1]
    word = [1, 1]
    order = [p1, p2]
    dec = set()
    if g.has_edge(p1, p2):
        dec.add((1, 1))
    last_at_start = False
    for t in range(2, len(chain), 2):
        if last_at_start:
            word.reverse()
            order.reverse()
            dec = {(b, a) for a, b in dec}
            last_at_start = False
        q1, q2 = chain[t], chain[t + 1]
        prev_last = chain[t - 1]
        q1_pendant = g.has_edge(q1, prev_last)
        q2_pendant = g.has_edge(q2, q1)
        half = len(word) // 2
        new = half + 1
        names = range(1, half + 1)
        last_letter = word[-1]
        if q1_pendant == q2_pendant:
            # both pendants or both antipendants: middle + end insertion
            if q1_pendant:
                dec |= {(new, last_letter), (new, new)}
            else:
                dec |= {(a, new) for a in names}
                dec |= {(new, b) for b in word[half:-1]}
            word = word[:half] + [new] + word[half:] + [new]
            order = order[:half] + [q1] + order[half:] + [q2]
        else:
            # exactly one pendant: insert before the last slot and at the start
            if q1_pendant:
                dec |= {(new, a) for a in names}
            else:
                dec |= {(a, new) for a in names}
                dec.add((new, new))
            word = [new] + word[:half] + word[half:-1] + [new] + [word[-1]]
            order = [q2] + order[:half] + order[half:-1] + [q1] + [order[-1]]
            last_at_start = True
    if last_at_start:
        word.reverse()
        order.reverse()
        dec = {(b, a) for a, b in dec}
    new_word, new_dec = normalize_letters(word, dec)
    lettering = Lettering(len(word) // 2, new_word, new_dec)
    assert decode_matches(lettering, order, g)
    return lettering, order


# ------------------------------------------------------------- Monte Carlo

def random_graph(n: int, rng: random.Random) -> Graph:
    """G(n, 1/2)."""
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.getrandbits(1)]
    return Graph(n, edges)


def random_lettericity_trial(n: int, samples: int, seed: int) -> dict:
    """Exact lettericity distribution over seeded G(n, 1/2) samples."""
    if n > LETTERICITY_MAX_N:
        raise SizeCapError(f"trial capped at n <= {LETTERICITY_MAX_N}")
    histogram: dict[int, int] = {}
    total = 0
    for s in range(samples):
        rng = random.Random(seed * 1_000_003 + s)
        value = lettericity(random_graph(n, rng))
        histogram[value] = histogram.get(value, 0) + 1
        total += value
    reference = n - 2 * math.log2(n) if n > 1 else 0.0
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "histogram": {str(k): histogram[k] for k in sorted(histogram)},
        "mean": f"{total / samples:.6g}" if samples else None,
        "reference_n_minus_2log2n": f"{reference:.6g}",
    }


# convenience letterings of named families

def threshold_lettering(word: str) -> Lettering:
    """Two-letter threshold lettering: a = isolated, b = dominating."""
    letters = {"a": 1, "b": 2}
    return Lettering(2, tuple(letters[ch] for ch in word), frozenset({(1, 2), (2, 2)}))

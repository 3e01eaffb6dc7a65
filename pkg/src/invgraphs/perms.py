"""Permutations in 1-based one-line notation.

A permutation of [n] is a tuple of the values (pi(1), ..., pi(n)).  All
operations are pure; indices and values are 1-based throughout so that
results can be read directly off plots.
"""
from fractions import Fraction
from itertools import combinations

from .errors import SizeCapError

Perm = tuple[int, ...]

INVERSION_POLY_MAX_N = 12
PATTERN_MAX_N = 12


def check_perm(p) -> Perm:
    """Validate and return p as a permutation tuple of 1..n."""
    p = tuple(p)
    n = len(p)
    if n < 1 or sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..n: {p!r}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """Parse "31542" (digits, n <= 9) or "3,1,5,4,2" (comma-separated)."""
    text = text.strip()
    if "," in text:
        values = [int(tok) for tok in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        values = [int(ch) for ch in text]
    return check_perm(values)


def format_perm(p: Perm) -> str:
    """Digits when n <= 9, else comma-separated."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def inversion_list(p: Perm) -> set[tuple[int, int]]:
    """All index pairs (i, j), i < j, with p(i) > p(j).

    >>> sorted(inversion_list((2, 4, 1, 3)))
    [(1, 3), (2, 3), (2, 4)]
    """
    n = len(p)
    return {(i, j) for i in range(1, n) for j in range(i + 1, n + 1) if p[i - 1] > p[j - 1]}


def inv(p: Perm) -> int:
    """Number of inversions."""
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def lehmer_encode(p: Perm) -> tuple[int, ...]:
    """Lehmer code: c_i = number of later entries smaller than p(i).

    >>> lehmer_encode((3, 7, 1, 6, 8, 2, 5, 4))
    (2, 5, 0, 3, 3, 0, 1, 0)
    """
    p = check_perm(p)
    return tuple(sum(1 for b in p[i + 1:] if b < a) for i, a in enumerate(p))


def lehmer_decode(code) -> Perm:
    """Inverse of lehmer_encode, built left to right.

    >>> lehmer_decode((2, 5, 0, 3, 3, 0, 1, 0))
    (3, 7, 1, 6, 8, 2, 5, 4)
    """
    code = tuple(code)
    n = len(code)
    for i, c in enumerate(code):
        if not 0 <= c <= n - 1 - i:
            raise ValueError(f"code entry c_{i+1}={c} outside [0, {n-1-i}]")
    remaining = list(range(1, n + 1))
    out = []
    for c in code:
        out.append(remaining.pop(c))
    return tuple(out)


def lehmer_rank(p: Perm) -> int:
    """Rank of p in the Lehmer-code (lexicographic) order on S_n."""
    code = lehmer_encode(p)
    n = len(code)
    fact = [1] * (n + 1)
    for i in range(2, n + 1):
        fact[i] = fact[i - 1] * i
    return sum(c * fact[n - 1 - i] for i, c in enumerate(code))


def inversion_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of prod_{j=1}^{n} (1 + q + ... + q^(j-1)).

    Entry k counts the permutations of [n] with exactly k inversions.
    """
    if not 1 <= n <= INVERSION_POLY_MAX_N:
        raise SizeCapError(f"inversion polynomial supports 1 <= n <= {INVERSION_POLY_MAX_N}")
    coeffs = [1]
    for j in range(2, n + 1):
        new = [0] * (len(coeffs) + j - 1)
        for k, c in enumerate(coeffs):
            for d in range(j):
                new[k + d] += c
        coeffs = new
    return tuple(coeffs)


def is_log_concave(seq) -> bool:
    return all(seq[k - 1] * seq[k + 1] <= seq[k] ** 2 for k in range(1, len(seq) - 1))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def reverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def symmetry(p: Perm, which: str) -> Perm:
    """One of the plot reflections: inverse, reverse, complement, reverse_complement.

    >>> symmetry((3, 1, 4, 2), "inverse")
    (2, 4, 1, 3)
    >>> symmetry((3, 1, 4, 2), "reverse_complement")
    (3, 1, 4, 2)
    """
    p = check_perm(p)
    if which == "inverse":
        return inverse(p)
    if which == "reverse":
        return reverse(p)
    if which == "complement":
        return complement(p)
    if which == "reverse_complement":
        return complement(reverse(p))
    raise ValueError(f"unknown symmetry {which!r}")


def symmetry_class(p: Perm) -> set[Perm]:
    """The set {p, p^-1, p^rc, (p^rc)^-1}."""
    rc = symmetry(p, "reverse_complement")
    return {p, inverse(p), rc, inverse(rc)}


def direct_sum(p: Perm, q: Perm) -> Perm:
    """q appended above and to the right of p.

    >>> direct_sum((2, 1), direct_sum((2, 1), (2, 1)))
    (2, 1, 4, 3, 6, 5)
    """
    n = len(p)
    return tuple(p) + tuple(v + n for v in q)


def skew_sum(p: Perm, q: Perm) -> Perm:
    """q appended below and to the right of p."""
    m = len(q)
    return tuple(v + m for v in p) + tuple(q)


def perm_sum(p: Perm, q: Perm, kind: str) -> Perm:
    if kind == "direct":
        return direct_sum(p, q)
    if kind == "skew":
        return skew_sum(p, q)
    raise ValueError(f"unknown sum kind {kind!r}")


def contains_pattern(p: Perm, pat: Perm):
    """(True, witness index tuple) if some subsequence of p is order-isomorphic
    to pat, else (False, None).

    >>> contains_pattern((2, 5, 1, 3, 4), (1, 3, 2))
    (True, (1, 2, 4))
    >>> contains_pattern((2, 5, 1, 3, 4), (3, 2, 1))
    (False, None)
    """
    p, pat = check_perm(p), check_perm(pat)
    if len(p) > PATTERN_MAX_N:
        raise SizeCapError(f"pattern containment supports n <= {PATTERN_MAX_N}")
    if len(pat) > len(p):
        return False, None
    k = len(pat)

    def order_rel(a, b):
        return (a < b) == (pat[a - 1] < pat[b - 1])

    def extend(chosen):
        m = len(chosen)
        if m == k:
            return tuple(chosen)
        start = chosen[-1] + 1 if chosen else 1
        # the candidate must leave room for the remaining pattern entries
        for i in range(start, len(p) - (k - m) + 2):
            ok = True
            for t, c in enumerate(chosen, start=1):
                if (p[c - 1] < p[i - 1]) != (pat[t - 1] < pat[m]):
                    ok = False
                    break
            if ok:
                result = extend(chosen + [i])
                if result is not None:
                    return result
        return None

    witness = extend([])
    return (True, witness) if witness is not None else (False, None)


def avoids(p: Perm, pat: Perm) -> bool:
    return not contains_pattern(p, pat)[0]


def descent_set(p: Perm) -> set[int]:
    """Indices i with p(i) > p(i+1).

    >>> sorted(descent_set((6, 7, 5, 4, 1, 9, 8, 2, 3)))
    [2, 3, 4, 6, 7]
    """
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def descent_profile(p: Perm) -> dict:
    """Descent set plus the X_d, X_ddd, X_ddadd pattern counts."""
    p = check_perm(p)
    n = len(p)
    ds = descent_set(p)
    comp = [p[i - 1] > p[i] for i in range(1, n)]  # comp[i-1] True = descent at i
    x_d = len(ds)
    x_ddd = sum(1 for i in range(n - 3) if comp[i] and comp[i + 1] and comp[i + 2])
    x_ddadd = sum(
        1
        for i in range(n - 5)
        if comp[i] and comp[i + 1] and not comp[i + 2] and comp[i + 3] and comp[i + 4]
    )
    return {"descent_set": ds, "X_d": x_d, "X_ddd": x_ddd, "X_ddadd": x_ddadd}


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its smallest element."""
    p = check_perm(p)
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p[v - 1]
        out.append(tuple(cyc))
    return out


def cycle_lengths(p: Perm) -> list[int]:
    return sorted(len(c) for c in cycles(p))


def length(p: Perm) -> int:
    """Coxeter length = number of inversions."""
    return inv(check_perm(p))


def absolute_length(p: Perm) -> int:
    """Minimum number of transpositions: n minus the number of cycles.

    >>> absolute_length((3, 4, 2, 1))
    3
    >>> absolute_length((4, 2, 3, 1))
    1
    """
    p = check_perm(p)
    return len(p) - len(cycles(p))


def find_interval(p: Perm):
    """Leftmost shortest nontrivial interval as (a, b) index window, or None.

    A window [a, b] of indices is an interval when its values are contiguous;
    windows of size 1 or n are trivial.
    """
    p = check_perm(p)
    n = len(p)
    for size in range(2, n):
        for a in range(1, n - size + 2):
            window = p[a - 1:a - 1 + size]
            if max(window) - min(window) == size - 1:
                return (a, a + size - 1)
    return None


def is_simple(p: Perm) -> bool:
    """No nontrivial interval.

    >>> is_simple((3, 1, 4, 2))
    True
    """
    return find_interval(p) is None


def all_perms(n: int):
    """All permutations of [n] in lexicographic (Lehmer) order."""
    from itertools import permutations

    return permutations(range(1, n + 1))


def expected_descent_stats(n: int) -> dict[str, Fraction]:
    """Closed forms for E[X_d], E[X_ddd], E[X_ddadd] (valid for n >= 6)."""
    if n < 6:
        raise ValueError("closed forms require n >= 6")
    return {
        "E_X_d": Fraction(n - 1, 2),
        "E_X_ddd": Fraction(n - 3, 24),
        "E_X_ddadd": Fraction(19 * (n - 5), 720),
    }

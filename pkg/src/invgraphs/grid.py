"""Grid matrices, validated drawings, and the gridding-to-lettering bridge.

Matrices are 0/+-1 arrays indexed by cartesian (column, row) coordinates
with row 1 at the bottom.  A drawing assigns each entry of a permutation to
a nonzero cell together with a reading order compatible with the column and
row signs; reading the cell letters in that order gives a lettering whose
decode is the inversion graph.
"""
import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .letters import Lettering
from .perms import Perm, check_perm


@dataclass(frozen=True)
class GridMatrix:
    cols: int
    rows: int
    entries: frozenset  # of (col, row, value) with value in {-1, 1}

    def __init__(self, cols: int, rows: int, entries):
        norm = set()
        for col, row, value in entries:
            if not (1 <= col <= cols and 1 <= row <= rows) or value not in (-1, 1):
                raise ValueError(f"bad matrix entry ({col}, {row}, {value})")
            norm.add((col, row, value))
        if not norm:
            raise ValueError("matrix needs at least one nonzero entry")
        cells = {(c, r) for c, r, _ in norm}
        if len(cells) != len(norm):
            raise ValueError("duplicate cell")
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "entries", frozenset(norm))

    def value(self, col: int, row: int) -> int:
        for c, r, v in self.entries:
            if (c, r) == (col, row):
                return v
        return 0

    def cells(self) -> list[tuple[int, int]]:
        return sorted((c, r) for c, r, _ in self.entries)


def row_matrix(values) -> GridMatrix:
    """1-row matrix from a sign sequence."""
    return GridMatrix(len(values), 1, [(i + 1, 1, v) for i, v in enumerate(values)])


def expand_to_pmm(m: GridMatrix) -> GridMatrix:
    """Replace each entry by its 2x2 substitution block.

    A 1 becomes ones at the block's lower-left and upper-right, a -1 ones at
    the other diagonal; the result is a partial multiplication matrix with
    alternating column and row signs.
    """
    entries = []
    for col, row, value in m.entries:
        if value == 1:
            entries.append((2 * col - 1, 2 * row - 1, 1))
            entries.append((2 * col, 2 * row, 1))
        else:
            entries.append((2 * col, 2 * row - 1, -1))
            entries.append((2 * col - 1, 2 * row, -1))
    return GridMatrix(2 * m.cols, 2 * m.rows, entries)


def is_pmm(m: GridMatrix):
    """Column and row signs with M(k, l) = c_k * r_l on nonzero entries.

    Signs are fixed by giving each connected component's smallest column the
    sign +1 (unconstrained lines default to +1).  Returns None when the
    entries cannot be factored.
    """
    col_sign = {}
    row_sign = {}
    by_col: dict[int, list] = {}
    by_row: dict[int, list] = {}
    for col, row, value in m.entries:
        by_col.setdefault(col, []).append((row, value))
        by_row.setdefault(row, []).append((col, value))
    for col in sorted(by_col):
        if col in col_sign:
            continue
        col_sign[col] = 1
        stack = [("c", col)]
        while stack:
            kind, line = stack.pop()
            if kind == "c":
                for row, value in by_col[line]:
                    want = value * col_sign[line]
                    if row in row_sign:
                        if row_sign[row] != want:
                            return None
                    else:
                        row_sign[row] = want
                        stack.append(("r", row))
            else:
                for col2, value in by_row[line]:
                    want = value * row_sign[line]
                    if col2 in col_sign:
                        if col_sign[col2] != want:
                            return None
                    else:
                        col_sign[col2] = want
                        stack.append(("c", col2))
    cols = tuple(col_sign.get(c, 1) for c in range(1, m.cols + 1))
    rows = tuple(row_sign.get(r, 1) for r in range(1, m.rows + 1))
    return cols, rows


@dataclass(frozen=True)
class GridDrawing:
    matrix: GridMatrix
    host: Perm
    cell_of: dict  # value -> (col, row)
    reading_order: tuple[int, ...]

    def __init__(self, matrix, host, cell_of, reading_order):
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "host", check_perm(host))
        object.__setattr__(self, "cell_of", dict(cell_of))
        object.__setattr__(self, "reading_order", tuple(reading_order))


def validate_drawing(d: GridDrawing) -> bool:
    """All drawing invariants: pmm signs, cell layout, reading directions."""
    signs = is_pmm(d.matrix)
    if signs is None:
        return False
    col_signs, row_signs = signs
    host = d.host
    n = len(host)
    values = set(range(1, n + 1))
    if set(d.cell_of) != values or sorted(d.reading_order) != sorted(values):
        return False
    cells = set(d.matrix.cells())
    if any(cell not in cells for cell in d.cell_of.values()):
        return False
    index_of = {v: i + 1 for i, v in enumerate(host)}
    # cross-cell separations: larger column means larger indices, larger row
    # means larger values
    for u, v in combinations(values, 2):
        (ku, lu), (kv, lv) = d.cell_of[u], d.cell_of[v]
        if ku != kv and (index_of[u] < index_of[v]) != (ku < kv):
            return False
        if lu != lv and (u < v) != (lu < lv):
            return False
    # reading directions within each column and row
    position = {v: t for t, v in enumerate(d.reading_order)}
    for col in range(1, d.matrix.cols + 1):
        members = sorted(
            (v for v in values if d.cell_of[v][0] == col),
            key=lambda v: index_of[v],
        )
        if col_signs[col - 1] < 0:
            members.reverse()
        if any(position[a] > position[b] for a, b in zip(members, members[1:])):
            return False
    for row in range(1, d.matrix.rows + 1):
        members = sorted(v for v in values if d.cell_of[v][1] == row)
        if row_signs[row - 1] < 0:
            members.reverse()
        if any(position[a] > position[b] for a, b in zip(members, members[1:])):
            return False
    return True


def drawing_to_lettering(d: GridDrawing):
    """Lettering whose decode is the host's inversion graph.

    Letters name the nonzero cells (sorted); the word reads the cells along
    the drawing's reading order.  Returns (lettering, cell_letters).
    """
    if not validate_drawing(d):
        raise ValueError("invalid drawing")
    col_signs, row_signs = is_pmm(d.matrix)
    cells = d.matrix.cells()
    letter = {cell: t + 1 for t, cell in enumerate(cells)}
    word = tuple(letter[d.cell_of[v]] for v in d.reading_order)
    dec = set()
    value = {(c, r): v for c, r, v in d.matrix.entries}
    for cell in cells:
        if value[cell] == -1:
            dec.add((letter[cell], letter[cell]))
    for a, b in combinations(cells, 2):
        (ka, la), (kb, lb) = a, b
        if ka != kb and la != lb:
            if (ka < kb) != (la < lb):
                dec.add((letter[a], letter[b]))
                dec.add((letter[b], letter[a]))
        elif la == lb:
            lo, hi = (a, b) if ka < kb else (b, a)
            if row_signs[la - 1] > 0:
                dec.add((letter[hi], letter[lo]))
            else:
                dec.add((letter[lo], letter[hi]))
        elif ka == kb:
            lo, hi = (a, b) if la < lb else (b, a)
            if col_signs[ka - 1] > 0:
                dec.add((letter[hi], letter[lo]))
            else:
                dec.add((letter[lo], letter[hi]))
    lettering = Lettering(len(cells), word, frozenset(dec))
    return lettering, letter


def canonical_reading_order(matrix: GridMatrix, host: Perm, cell_of: dict) -> tuple:
    """Topological reading order; unconstrained pairs fall back to index order."""
    col_signs, row_signs = is_pmm(matrix)
    index_of = {v: i + 1 for i, v in enumerate(host)}
    values = sorted(cell_of)
    succs = {v: set() for v in values}
    preds = {v: 0 for v in values}

    def add_chain(members):
        for a, b in zip(members, members[1:]):
            if b not in succs[a]:
                succs[a].add(b)
                preds[b] += 1

    for col in range(1, matrix.cols + 1):
        members = sorted(
            (v for v in values if cell_of[v][0] == col), key=lambda v: index_of[v]
        )
        if col_signs[col - 1] < 0:
            members.reverse()
        add_chain(members)
    for row in range(1, matrix.rows + 1):
        members = sorted(v for v in values if cell_of[v][1] == row)
        if row_signs[row - 1] < 0:
            members.reverse()
        add_chain(members)
    heap = [(index_of[v], v) for v in values if preds[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, v = heapq.heappop(heap)
        out.append(v)
        for w in succs[v]:
            preds[w] -= 1
            if preds[w] == 0:
                heapq.heappush(heap, (index_of[w], w))
    if len(out) != len(values):
        raise ValueError("reading constraints are cyclic; drawing invalid")
    return tuple(out)


def monotone_run_drawing(p: Perm) -> GridDrawing:
    """Drawing on a 1-row matrix pairing consecutive entries.

    Cell i holds entries 2i-1 and 2i with sign by their comparison; an odd
    leftover entry gets a -1 cell (either sign works).

    >>> monotone_run_drawing((3, 8, 4, 9, 6, 1, 2, 7, 5)).matrix.cells()
    [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]
    """
    p = check_perm(p)
    n = len(p)
    signs = []
    cell_of = {}
    for i in range(0, n, 2):
        col = i // 2 + 1
        if i + 1 < n:
            signs.append(1 if p[i] < p[i + 1] else -1)
            cell_of[p[i]] = (col, 1)
            cell_of[p[i + 1]] = (col, 1)
        else:
            signs.append(-1)
            cell_of[p[i]] = (col, 1)
    matrix = row_matrix(signs)
    reading = canonical_reading_order(matrix, p, cell_of)
    return GridDrawing(matrix, p, cell_of, reading)


def monotone_run_signs(p: Perm) -> tuple[int, ...]:
    """The sign sequence of the paired-entry row matrix.

    >>> monotone_run_signs((3, 8, 4, 9, 6, 1, 2, 7, 5))
    (1, 1, -1, 1, -1)
    """
    return tuple(v for _, __, v in sorted(monotone_run_drawing(p).matrix.entries))


def min_monotone_runs(p: Perm) -> int:
    """Fewest contiguous monotone blocks covering the one-line notation.

    >>> min_monotone_runs((3, 4, 7, 1, 5, 6, 9, 8, 2))
    3
    """
    p = check_perm(p)
    n = len(p)

    def monotone(i, j):  # block p[i:j]
        seg = p[i:j]
        return all(a < b for a, b in zip(seg, seg[1:])) or all(
            a > b for a, b in zip(seg, seg[1:])
        )

    best = [0] + [n] * n
    for j in range(1, n + 1):
        for i in range(j):
            if best[i] + 1 < best[j] and monotone(i, j):
                best[j] = best[i] + 1
    return best[n]


def descent_expectations(n: int) -> dict:
    """Exact expectations of the descent statistics and the run-count bound."""
    if n < 6:
        raise ValueError("descent expectation formulas require n >= 6")
    return {
        "E_X_d": Fraction(n - 1, 2),
        "E_X_ddd": Fraction(n - 3, 24),
        "E_X_ddadd": Fraction(19 * (n - 5), 720),
        "run_bound": Fraction(311 * n, 720) + Fraction(109, 144),
    }


# ---------------------------------------------------------------- JSON

def matrix_to_json(m: GridMatrix) -> dict:
    return {
        "cols": m.cols,
        "rows": m.rows,
        "entries": [list(e) for e in sorted(m.entries)],
    }


def matrix_from_json(obj: dict) -> GridMatrix:
    return GridMatrix(int(obj["cols"]), int(obj["rows"]), [tuple(e) for e in obj["entries"]])


def drawing_to_json(d: GridDrawing) -> dict:
    from .perms import format_perm

    out = matrix_to_json(d.matrix)
    out["host"] = format_perm(d.host)
    out["cell_of"] = [[v, c, r] for v, (c, r) in sorted(d.cell_of.items())]
    out["reading_order"] = list(d.reading_order)
    return out


def drawing_from_json(obj: dict) -> GridDrawing:
    from .perms import parse_perm

    matrix = matrix_from_json(obj)
    cell_of = {v: (c, r) for v, c, r in obj["cell_of"]}
    return GridDrawing(matrix, parse_perm(obj["host"]), cell_of, tuple(obj["reading_order"]))

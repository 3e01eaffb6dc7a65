"""Pin sequences on permutation plots.

A pin lies outside the bounding rectangle of the previous pins and slices it
horizontally or vertically; a proper pin sequence additionally separates
each pin from the rectangle before it.  Proper pin sequences are the
geometric source of chains in the inversion graph.
"""
from dataclasses import dataclass

from .perms import Perm, check_perm, format_perm, is_simple

Point = tuple[int, int]  # (index, value)


def _rect(points) -> tuple[int, int, int, int]:
    idxs = [i for i, _ in points]
    vals = [v for _, v in points]
    return min(idxs), max(idxs), min(vals), max(vals)


def pin_direction(rect, point: Point):
    """Direction tag if `point` is a valid pin of `rect`, else None."""
    imin, imax, vmin, vmax = rect
    i, v = point
    if i > imax and vmin < v < vmax:
        return "right"
    if i < imin and vmin < v < vmax:
        return "left"
    if v > vmax and imin < i < imax:
        return "up"
    if v < vmin and imin < i < imax:
        return "down"
    return None


def _separates(rect, pin: Point, prev: Point) -> bool:
    """A vertical or horizontal line through `pin` lies strictly between
    `rect` and `prev`."""
    imin, imax, vmin, vmax = rect
    x, y = pin
    pi, pv = prev
    if imax < x < pi or pi < x < imin:
        return True
    if vmax < y < pv or pv < y < vmin:
        return True
    return False


@dataclass(frozen=True)
class PinSequence:
    host: Perm
    points: tuple[Point, ...]

    def __post_init__(self):
        host = check_perm(self.host)
        entries = {(i + 1, v) for i, v in enumerate(host)}
        for pt in self.points:
            if tuple(pt) not in entries:
                raise ValueError(f"{pt} is not an entry of {format_perm(host)}")
        if len(set(self.points)) != len(self.points):
            raise ValueError("pin sequence repeats a point")

    def directions(self) -> tuple:
        """Direction of each pin from the third onward (None when invalid)."""
        out = []
        for t in range(2, len(self.points)):
            out.append(pin_direction(_rect(self.points[:t]), self.points[t]))
        return tuple(out)


def validate_pin_sequence(s: PinSequence) -> bool:
    """Each pin from the third onward slices the rectangle of its prefix."""
    if len(s.points) < 2:
        return False
    return all(d is not None for d in s.directions())


def is_proper(s: PinSequence) -> bool:
    """Valid, and each pin separates the previous pin from the rest.

    >>> seq = PinSequence((3, 6, 1, 4, 2, 5),
    ...                   ((3, 1), (4, 4), (1, 3), (5, 2), (2, 6), (6, 5)))
    >>> validate_pin_sequence(seq), is_proper(seq)
    (True, False)
    """
    if not validate_pin_sequence(s):
        return False
    pts = s.points
    for t in range(2, len(pts)):
        if not _separates(_rect(pts[:t - 1]), pts[t], pts[t - 1]):
            return False
    return True


def _valid_pins(host_entries, points):
    rect = _rect(points)
    used = set(points)
    for pt in host_entries:
        if pt not in used and pin_direction(rect, pt) is not None:
            yield pt


def find_reaching_proper_pin_sequence(p: Perm, x: Point, y: Point, z: Point) -> PinSequence:
    """Proper pin sequence from x, y to z in the plot of a simple permutation.

    Extends a pin sequence from x, y until its rectangle covers the whole
    plot, then walks back: repeatedly find the least prefix for which the
    current target is a valid pin, the prefix's last pin becoming the next
    target.
    """
    p = check_perm(p)
    if not is_simple(p):
        raise ValueError("pin reachability requires a simple permutation")
    entries = [(i + 1, v) for i, v in enumerate(p)]
    for pt in (x, y, z):
        if tuple(pt) not in set(entries):
            raise ValueError(f"{pt} is not an entry of {format_perm(p)}")
    if len({x, y, z}) != 3:
        raise ValueError("x, y, z must be distinct entries")
    imin, imax, vmin, vmax = _rect([x, y])
    if imin <= z[0] <= imax and vmin <= z[1] <= vmax:
        raise ValueError("z must lie outside the rectangle of x and y")

    n = len(p)
    seq = [x, y]
    while _rect(seq) != (1, n, 1, n):
        pin = min(_valid_pins(entries, seq))
        seq.append(pin)

    tail = [z]
    target = z
    while True:
        t = next(
            t for t in range(2, len(seq) + 1)
            if pin_direction(_rect(seq[:t]), target) is not None
        )
        if t == 2:
            break
        target = seq[t - 1]
        tail.append(target)

    result = PinSequence(p, (seq[0], seq[1], *reversed(tail)))
    assert is_proper(result), "construction produced an improper sequence"
    return result


def pins_to_chain(s: PinSequence) -> tuple[int, ...]:
    """Value labels of a proper pin sequence (a chain in the inversion graph)."""
    if not is_proper(s):
        raise ValueError("only proper pin sequences yield chains")
    return tuple(v for _, v in s.points)


def pin_sequence_to_json(s: PinSequence) -> dict:
    return {"host": format_perm(s.host), "pins": [list(pt) for pt in s.points]}


def pin_sequence_from_json(obj: dict) -> PinSequence:
    from .perms import parse_perm

    return PinSequence(parse_perm(obj["host"]), tuple(tuple(pt) for pt in obj["pins"]))

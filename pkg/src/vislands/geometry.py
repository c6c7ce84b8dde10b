"""Exact geometric predicates over integer coordinates.

Everything here is pure integer arithmetic on Python ints, so there is no
overflow and no rounding: two calls with equal inputs give equal outputs,
bit for bit. All downstream construction and search code relies on that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, List, NamedTuple, Sequence, Tuple


class Point(NamedTuple):
    """An exact point of the integer grid."""

    x: int
    y: int


class Orientation(IntEnum):
    """Sign of the cross product (b - a) x (c - a)."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Location(IntEnum):
    """Where a point sits relative to a convex hull."""

    INTERIOR = 1
    BOUNDARY = 0
    OUTSIDE = -1


class PointSet:
    """Ordered, duplicate-free sequence of points with index identity."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        pts = tuple(Point(int(p[0]), int(p[1])) for p in points)
        if len(set(pts)) != len(pts):
            raise ValueError("point set contains duplicate points")
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points)"

    def subset(self, indices: Iterable[int]) -> List[Point]:
        return [self.points[i] for i in indices]


def cross(o: Point, a: Point, b: Point) -> int:
    """Cross product (a - o) x (b - o); twice the signed triangle area."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Turn direction of the ordered triple a, b, c."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def point_in_open_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies strictly between a and b on the segment ab.

    Endpoints do not count. Raises ValueError when a == b, which is a
    contract violation rather than a degenerate answer.
    """
    if a == b:
        raise ValueError("segment endpoints coincide")
    if cross(a, b, p) != 0:
        return False
    # Collinear: p is interior iff it separates a and b along the segment.
    dot = (p[0] - a[0]) * (b[0] - p[0]) + (p[1] - a[1]) * (b[1] - p[1])
    return dot > 0


@dataclass(frozen=True)
class Hull:
    """Convex hull as strictly extreme vertices in counterclockwise order.

    Collinear boundary points are never vertices. When the input is a
    single point or entirely collinear the hull carries one or two
    vertices and is flagged `degenerate`; its interior is empty.
    """

    vertices: Tuple[Point, ...]
    degenerate: bool

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)


def convex_hull(points: Iterable[Point]) -> Hull:
    """Monotone chain over exact integers; strict turns only.

    Returns the extreme points in counterclockwise order starting at the
    lexicographically smallest vertex.
    """
    pts = sorted(set(Point(p[0], p[1]) for p in points))
    if not pts:
        raise ValueError("convex hull of an empty set")
    if len(pts) == 1:
        return Hull((pts[0],), True)

    def chain(seq):
        out: List[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    if len(lower) == 2 and len(upper) == 2:
        # All points collinear: the two extreme endpoints.
        return Hull((lower[0], lower[1]), True)
    return Hull(tuple(lower[:-1] + upper[:-1]), False)


def hull_location(p: Point, hull: Hull) -> Location:
    """Exact classification of p against a hull from convex_hull().

    Degenerate hulls have empty interior: points on them classify as
    BOUNDARY, everything else as OUTSIDE.
    """
    verts = hull.vertices
    if len(verts) == 1:
        return Location.BOUNDARY if p == verts[0] else Location.OUTSIDE
    if len(verts) == 2:
        a, b = verts
        if p == a or p == b or (cross(a, b, p) == 0 and point_in_open_segment(p, a, b)):
            return Location.BOUNDARY
        return Location.OUTSIDE
    on_edge = False
    for i in range(len(verts)):
        a = verts[i]
        b = verts[(i + 1) % len(verts)]
        d = cross(a, b, p)
        if d < 0:
            return Location.OUTSIDE
        if d == 0:
            on_edge = True
    return Location.BOUNDARY if on_edge else Location.INTERIOR


def _canonical_direction(dx: int, dy: int) -> Tuple[int, int]:
    """Reduce (dx, dy) by gcd and fix a sign, so parallel vectors collide."""
    g = math.gcd(abs(dx), abs(dy))
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def max_collinear(points: Sequence[Point]) -> Tuple[int, List[int]]:
    """Size and witness of the largest collinear subset.

    Per-anchor slope bucketing with exact reduced fractions, O(n^2).
    Each maximal line is counted from its lowest-index member, so the
    witness is the index-sorted member list of the first best line found.
    """
    n = len(points)
    if n == 0:
        raise ValueError("empty point set")
    if n == 1:
        return 1, [0]
    best = 2
    best_witness = [0, 1]
    for i in range(n - 1):
        xi, yi = points[i]
        buckets: dict = {}
        for j in range(i + 1, n):
            q = points[j]
            key = _canonical_direction(q[0] - xi, q[1] - yi)
            group = buckets.get(key)
            if group is None:
                buckets[key] = [j]
            else:
                group.append(j)
        for group in buckets.values():
            if len(group) + 1 > best:
                best = len(group) + 1
                best_witness = [i] + group
    return best, best_witness


def max_collinear_bruteforce(points: Sequence[Point]) -> Tuple[int, List[int]]:
    """O(n^3) oracle: for every pair, count the points on its line."""
    n = len(points)
    if n == 0:
        raise ValueError("empty point set")
    if n == 1:
        return 1, [0]
    best = 2
    best_witness = [0, 1]
    for i in range(n - 1):
        a = points[i]
        for j in range(i + 1, n):
            b = points[j]
            members = [i, j]
            for k in range(n):
                if k != i and k != j and cross(a, b, points[k]) == 0:
                    members.append(k)
            if len(members) > best:
                best = len(members)
                best_witness = sorted(members)
    return best, best_witness

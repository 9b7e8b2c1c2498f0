"""Planar angle kernels: angles at a vertex, deviations from 90 degrees,
segment directions, rigid-motion transforms, and direction gaps.

All public angles are in degrees. The angle at a vertex is computed as
atan2(|cross|, dot), which stays accurate near 0 and 180 degrees where an
arccos formulation loses precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CoincidentPoints, DegenerateInput, InvalidScale

Point = tuple[float, float]


class Configuration:
    """Ordered list of pairwise-distinct planar points.

    Coordinates must be finite; distinctness is exact coordinate equality,
    so nearly coincident points are legal inputs. When built from decimal
    text (embedded data or a points file), the original coordinate strings
    are kept so that saving reproduces them verbatim.
    """

    __slots__ = ("points", "coord_strings")

    def __init__(self, points: Iterable[Sequence[float]],
                 coord_strings: Sequence[tuple[str, str]] | None = None):
        pts = tuple((float(p[0]), float(p[1])) for p in points)
        if not pts:
            raise DegenerateInput("a configuration needs at least one point")
        for x, y in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise DegenerateInput(f"non-finite coordinate ({x}, {y})")
        if len(set(pts)) != len(pts):
            raise DegenerateInput("points must be pairwise distinct")
        self.points = pts
        if coord_strings is not None:
            strings = tuple((str(sx), str(sy)) for sx, sy in coord_strings)
            if len(strings) != len(pts):
                raise DegenerateInput("coord_strings length must match points")
            self.coord_strings = strings
        else:
            self.coord_strings = None

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, Configuration) and self.points == other.points

    def __repr__(self) -> str:
        return f"Configuration({len(self.points)} points)"

    @classmethod
    def from_strings(cls, pairs: Iterable[tuple[str, str]]) -> "Configuration":
        pairs = tuple(pairs)
        return cls([(float(sx), float(sy)) for sx, sy in pairs], coord_strings=pairs)


@dataclass(frozen=True)
class DirectionGap:
    """Widest arc of [0, 180) free of segment directions.

    The open arc (start_deg, start_deg + width_deg), taken mod 180, contains
    no direction of any segment of the source configuration; start_deg itself
    is a realized direction (or the only one).
    """

    start_deg: float
    width_deg: float


def angle_at(a: Point, b: Point, c: Point) -> float:
    """Angle at vertex b between rays b->a and b->c, in degrees in [0, 180]."""
    ux, uy = a[0] - b[0], a[1] - b[1]
    vx, vy = c[0] - b[0], c[1] - b[1]
    if (ux == 0.0 and uy == 0.0) or (vx == 0.0 and vy == 0.0):
        raise CoincidentPoints("angle vertex coincides with an endpoint")
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    return math.degrees(math.atan2(abs(cross), dot))


def deviation(a: Point, b: Point, c: Point) -> float:
    """|angle_at(a, b, c) - 90| in degrees, in [0, 90]."""
    return abs(angle_at(a, b, c) - 90.0)


def segment_direction(a: Point, b: Point) -> float:
    """Direction of the undirected segment ab as an angle in [0, 180) degrees."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx == 0.0 and dy == 0.0:
        raise CoincidentPoints("segment endpoints coincide")
    d = math.degrees(math.atan2(dy, dx)) % 180.0
    # atan2 can yield exactly 180.0 % 180.0 == 0.0; keep [0, 180) closed below.
    return 0.0 if d == 180.0 else d


def rotate(config: Configuration, theta_deg: float) -> Configuration:
    """Rotate all points about the origin by theta_deg (counterclockwise)."""
    t = math.radians(theta_deg)
    ct, st = math.cos(t), math.sin(t)
    return Configuration([(x * ct - y * st, x * st + y * ct) for x, y in config])


def reflect(config: Configuration, axis_deg: float) -> Configuration:
    """Reflect all points about the line through the origin at angle axis_deg."""
    t = math.radians(2.0 * axis_deg)
    ct, st = math.cos(t), math.sin(t)
    return Configuration([(x * ct + y * st, x * st - y * ct) for x, y in config])


def translate(config: Configuration, dx: float, dy: float) -> Configuration:
    return Configuration([(x + dx, y + dy) for x, y in config])


def scale(config: Configuration, s: float) -> Configuration:
    """Scale about the origin by s > 0 (angles are preserved)."""
    if not (s > 0.0) or not math.isfinite(s):
        raise InvalidScale(f"scale factor must be positive and finite, got {s}")
    return Configuration([(x * s, y * s) for x, y in config])


def all_segment_directions(config: Configuration) -> list[float]:
    """Directions of all C(n, 2) segments, unsorted, in [0, 180) degrees."""
    pts = config.points
    n = len(pts)
    return [segment_direction(pts[i], pts[j]) for i in range(n) for j in range(i + 1, n)]


def largest_direction_gap(config: Configuration) -> DirectionGap:
    """Widest circular gap (mod 180) in the multiset of segment directions.

    Ties are broken by the smallest start_deg so witnesses are reproducible.
    By pigeonhole the width is at least 180 / C(n, 2).
    """
    if len(config) < 2:
        raise DegenerateInput("direction gap needs at least two points")
    dirs = sorted(set(all_segment_directions(config)))
    if len(dirs) == 1:
        return DirectionGap(start_deg=dirs[0], width_deg=180.0)
    best_start, best_width = dirs[0], 0.0
    for i, d in enumerate(dirs):
        nxt = dirs[i + 1] if i + 1 < len(dirs) else dirs[0] + 180.0
        width = nxt - d
        if width > best_width:
            best_start, best_width = d, width
    return DirectionGap(start_deg=best_start, width_deg=best_width)

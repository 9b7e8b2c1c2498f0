"""Generators for the point-set constructions used throughout the package.

Includes the small lattice sets with forced right angles, the flat cluster
grid, equally spaced circle points, the binary-vector spiral family, and the
embedded best-known 10- and 11-point record configurations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidCount, InvalidScale
from .geometry import Configuration

MAX_SPIRAL_LEVELS = 20

# Best-known 10-point record, gamma(S, 4) just under 9.292 degrees. Kept as
# decimal strings so files and renders reproduce the published coordinates
# byte for byte.
_RECORD_10 = (
    ("5.001213", "67.864232"),
    ("5.00126", "68.653515"),
    ("12.840744", "78.993522"),
    ("28.03804", "64.093769"),
    ("29.996837", "69.918767"),
    ("32.357229", "39.866702"),
    ("37.862434", "43.727817"),
    ("91.164903", "82.745474"),
    ("94.840088", "68.559448"),
    ("95.819369", "60.912308"),
)

# Best-known 11-point record from a lattice search, gamma(S, 4) < 16 degrees.
_RECORD_11 = (
    ("15", "14"),
    ("21", "10"),
    ("31", "5"),
    ("36", "79"),
    ("36", "80"),
    ("61", "78"),
    ("62", "73"),
    ("74", "61"),
    ("85", "90"),
    ("89", "85"),
    ("93", "72"),
)


@dataclass(frozen=True)
class SpiralParams:
    """Parameters of the binary-vector construction: 2**t points at scale base R."""

    t: int
    R: float

    def __post_init__(self):
        if self.t < 1:
            raise InvalidCount(f"t must be >= 1, got {self.t}")
        if not self.R > 1.0:
            raise InvalidScale(f"R must be > 1, got {self.R}")


def seven_point() -> Configuration:
    """The 7 lattice points {0,1,2}^2 minus (0,2) and (2,2), row-major.

    Every 4-subset of this set contains a right angle, so gamma(S, 4) = 0.
    """
    pts = [(x, y) for y in (0, 1, 2) for x in (0, 1, 2) if (x, y) not in ((0, 2), (2, 2))]
    return Configuration(pts)


def cluster_grid(N: float) -> Configuration:
    """The 9 points {0, N, 2N} x {0, 1, 2} for N > 2.

    For large N every 4-subset contains two points in one thin column plus a
    far point, forcing an angle with |cos| <= 4/N; gamma(S, 4) -> 0 as N grows.
    """
    if not N > 2:
        raise InvalidScale(f"column spacing N must exceed 2, got {N}")
    return Configuration([(x, y) for x in (0.0, N, 2.0 * N) for y in (0.0, 1.0, 2.0)])


def circle_points(n: int) -> Configuration:
    """n equally spaced points on the unit circle, starting at angle 0."""
    if n < 3:
        raise InvalidCount(f"need at least 3 circle points, got {n}")
    step = 2.0 * math.pi / n
    return Configuration([(math.cos(j * step), math.sin(j * step)) for j in range(n)])


def _spiral_point(bits: tuple[int, ...], t: int, R: float) -> tuple[float, float]:
    x = y = 0.0
    for j, vj in enumerate(bits):
        if vj:
            r = R**j
            x += r * math.cos(math.pi * j / t)
            y += r * math.sin(math.pi * j / t)
    return x, y


def _lex_bits(index: int, t: int) -> tuple[int, ...]:
    # Lexicographic order over (v_0, ..., v_{t-1}) = integer order with v_0
    # as the most significant bit.
    return tuple((index >> (t - 1 - j)) & 1 for j in range(t))


def spiral(params: SpiralParams) -> Configuration:
    """2**t points indexed by binary vectors v: sum_j v_j R^j e^(i pi j / t).

    Segment directions concentrate near the t rays at multiples of 180/t as
    R grows, which caps how degenerate any triple can get.
    """
    t, R = params.t, params.R
    if t > MAX_SPIRAL_LEVELS:
        raise BudgetExceeded(f"t={t} would generate 2^{t} points; max t is {MAX_SPIRAL_LEVELS}")
    return Configuration([_spiral_point(_lex_bits(i, t), t, R) for i in range(2**t)])


def spiral_truncated(n: int, R: float) -> Configuration:
    """First n binary vectors of the smallest spiral with 2**t >= n points.

    Covers sizes strictly between powers of two; its score is measured, not
    guaranteed, by the construction's analysis.
    """
    if n < 2:
        raise InvalidCount(f"need at least 2 points, got {n}")
    t = max(1, (n - 1).bit_length())
    params = SpiralParams(t=t, R=R)
    return Configuration([_spiral_point(_lex_bits(i, t), t, R) for i in range(n)])


def record_config_10() -> Configuration:
    """The embedded 10-point record configuration (exact published decimals)."""
    return Configuration.from_strings(_RECORD_10)


def record_config_11() -> Configuration:
    """The embedded 11-point record configuration (exact published decimals)."""
    return Configuration.from_strings(_RECORD_11)

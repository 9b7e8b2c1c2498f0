"""Constructive witness extraction.

Two procedures produce k-subsets with provable deviation floors:

* monotone_witness: find the widest direction gap, rotate it over the
  horizontal axis, and pull a strictly monotone-in-y chain out of the x-sorted
  points. All chords of the chain then avoid near-horizontal directions, which
  keeps every angle of the subset at least the gap width away from 90 degrees.

* bin_chain_witness: split directions into m equal bins and run the
  label-update pigeonhole scan over the x-sorted points. The returned chain has
  all chords in one bin of width 180/m, so every angle sits within 180/m of
  0 or 180 degrees (deviation at least 90 - 180/m).

Both witnesses report bounds that the caller can (and our tests do) re-verify
with the exact scorer.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInput, DuplicateXCoordinate, TooFewPoints
from .geometry import Configuration, largest_direction_gap, rotate
from .scoring import subset_min_deviation

# Fraction of the gap width kept between the gap's lower edge and the
# horizontal axis. Keeps formerly-edge segments strictly below horizontal
# (no y-ties) while giving up only a 1e-9 sliver of the guarantee.
_EDGE_MARGIN = 1e-9


@dataclass(frozen=True)
class MonotoneWitness:
    subset: tuple[int, ...]
    guaranteed_deviation_deg: float
    measured_deviation_deg: float
    rotation_deg: float
    direction: str  # "increasing" or "decreasing"


@dataclass(frozen=True)
class BinChainState:
    """Label state of the pigeonhole scan: per-point chain lengths per bin."""

    m: int
    labels: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # point indices in x-order


def _lis_start_lengths(values: Sequence[float]) -> list[int]:
    """lengths[i] = length of the longest strictly increasing run starting at i.

    Computed as strictly-decreasing-ending lengths of the reversed sequence
    via patience piles, O(n log n).
    """
    tails: list[float] = []
    lengths = [0] * len(values)
    for pos in range(len(values) - 1, -1, -1):
        v = -values[pos]
        p = bisect_left(tails, v)
        if p == len(tails):
            tails.append(v)
        else:
            tails[p] = v
        lengths[pos] = p + 1
    return lengths


def longest_monotone_subsequence(values: Sequence[float], direction: str = "increasing") -> list[int]:
    """Indices of a longest strictly monotone subsequence, O(n log n).

    Among equally long answers, returns the lexicographically smallest index
    sequence (greedy left-to-right over per-start run lengths).
    """
    if direction == "decreasing":
        return longest_monotone_subsequence([-v for v in values], "increasing")
    if direction != "increasing":
        raise ValueError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")
    if not values:
        raise DegenerateInput("values must be non-empty")
    lengths = _lis_start_lengths(values)
    remaining = max(lengths)
    out: list[int] = []
    floor = -math.inf
    for i, v in enumerate(values):
        if lengths[i] == remaining and v > floor:
            out.append(i)
            floor = v
            remaining -= 1
            if remaining == 0:
                break
    return out


def _chain_at_rotation(config: Configuration, k: int, rotation_deg: float,
                       direction: str) -> tuple[int, ...] | None:
    """k-term strictly monotone y-chain of the rotated config, or None."""
    rot = rotate(config, rotation_deg)
    order = sorted(range(len(rot)), key=lambda i: (rot[i][0], rot[i][1]))
    ys = [rot[i][1] for i in order]
    chain = longest_monotone_subsequence(ys, direction)
    if len(chain) < k:
        return None
    return tuple(sorted(order[p] for p in chain[:k]))


def monotone_witness(config: Configuration, k: int) -> MonotoneWitness:
    """k-subset whose angles all deviate from 90 by roughly the gap width.

    Tries three gap placements in order, keeping the first that yields a
    k-term strictly monotone chain:

    1. gap just below horizontal, increasing chain  (floor: ~full gap width)
    2. gap just above horizontal, decreasing chain  (floor: ~full gap width)
    3. gap centered on horizontal, either chain     (floor: half gap width)

    Placements 1 and 2 put all chain chords within [width, 90] degrees of
    slope (up to the tiny edge margin), so the subset's minimum deviation is
    at least the gap width; the centered fallback halves that but always
    succeeds for n >= (k-1)^2 + 1, because no two points share a y-coordinate
    after any of these rotations.
    """
    n = len(config)
    if n < (k - 1) ** 2 + 1:
        raise TooFewPoints(
            f"monotone witness needs at least (k-1)^2+1 = {(k - 1) ** 2 + 1} points, got {n}")
    gap = largest_direction_gap(config)
    w = gap.width_deg
    delta = w * _EDGE_MARGIN

    attempts = (
        (-(gap.start_deg + delta), "increasing", w * (1.0 - 2.0 * _EDGE_MARGIN)),
        (-(gap.start_deg + w - delta), "decreasing", w * (1.0 - 2.0 * _EDGE_MARGIN)),
        (-(gap.start_deg + w / 2.0), "increasing", w / 2.0),
        (-(gap.start_deg + w / 2.0), "decreasing", w / 2.0),
    )
    for rotation_deg, direction, floor in attempts:
        subset = _chain_at_rotation(config, k, rotation_deg, direction)
        if subset is None:
            continue
        measured = subset_min_deviation(config, subset).deviation_deg
        return MonotoneWitness(
            subset=subset,
            guaranteed_deviation_deg=floor,
            measured_deviation_deg=measured,
            rotation_deg=rotation_deg % 360.0,
            direction=direction,
        )
    # Unreachable: the centered placement leaves no y-ties, so a k-term
    # monotone chain exists whenever n >= (k-1)^2 + 1.
    raise AssertionError("no monotone chain found despite n >= (k-1)^2 + 1")


def direction_bin(a, b, m: int) -> int:
    """Bin index of the left-to-right slope of segment ab.

    The segment is oriented by increasing x and its directed angle, in
    (-90, 90) degrees, falls into one of m half-open bins of width 180/m
    (boundary values go to the higher bin). Directed angles make each bin a
    convex cone, so sums of same-bin chords stay in the bin.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx < 0.0:
        dx, dy = -dx, -dy
    if dx == 0.0:
        raise DuplicateXCoordinate("direction bins need distinct x-coordinates")
    theta = math.degrees(math.atan2(dy, dx))
    b_idx = int((theta + 90.0) * m / 180.0)
    return min(max(b_idx, 0), m - 1)


def bin_chain_labels(config: Configuration, k: int, m: int) -> tuple[BinChainState, tuple[int, ...] | None]:
    """Run the label-update scan; return the state and a found chain (if any).

    Point i (in x-order) gets an m-vector of labels: coordinate b is the
    length of the longest chain ending at i whose consecutive segments all lie
    in direction bin b. A label reaching k yields the chain via back-pointers.
    """
    n = len(config)
    xs = [p[0] for p in config]
    if len(set(xs)) != n:
        raise DuplicateXCoordinate("points must have pairwise distinct x-coordinates")
    order = sorted(range(n), key=lambda i: xs[i])
    labels = [[1] * m for _ in range(n)]
    back: list[list[int]] = [[-1] * m for _ in range(n)]

    chain: tuple[int, ...] | None = None
    for pos in range(n):
        i = order[pos]
        for prev_pos in range(pos):
            j = order[prev_pos]
            b = direction_bin(config[j], config[i], m)
            cand = labels[j][b] + 1
            if cand > labels[i][b]:
                labels[i][b] = cand
                back[i][b] = j
        if chain is None:
            for b in range(m):
                if labels[i][b] >= k:
                    rev = [i]
                    cur, cur_b = i, b
                    while back[cur][cur_b] != -1 and len(rev) < k:
                        cur = back[cur][cur_b]
                        rev.append(cur)
                    chain = tuple(reversed(rev))
                    break

    state = BinChainState(
        m=m,
        labels=tuple(tuple(lbl) for lbl in labels),
        order=tuple(order),
    )
    return state, chain


def bin_chain_witness(config: Configuration, k: int, m: int) -> tuple[int, ...]:
    """k points, in x-order, whose pairwise segments share one direction bin.

    Requires n >= (k-1)^m + 1 (pigeonhole on the label vectors) and pairwise
    distinct x-coordinates; rotate away a direction gap first if needed.
    Consecutive chords land in one bin by construction, and convexity of the
    chord directions puts every pairwise chord in the same closed bin, so each
    angle of the subset deviates from 90 by at least 90 - 180/m.
    """
    n = len(config)
    if m < 1:
        raise ValueError(f"bin count m must be >= 1, got {m}")
    needed = (k - 1) ** m + 1
    if n < needed:
        raise TooFewPoints(
            f"bin-chain witness needs at least (k-1)^m + 1 = {needed} points, got {n}")
    _, chain = bin_chain_labels(config, k, m)
    if chain is None:
        # Unreachable: with n >= (k-1)^m + 1 two equal labels would contradict
        # the update rule, so some label reaches k during the scan.
        raise AssertionError("pigeonhole scan found no chain despite n >= (k-1)^m + 1")
    return chain

# Scratch: compare gap-rotation placements for the monotone witness. Not shipped.
import math
import numpy as np

from angledev.geometry import Configuration, largest_direction_gap, rotate
from angledev.scoring import subset_min_deviation


def lis_r_lengths(values):
    # R[i] = length of longest strictly increasing subsequence starting at i,
    # via strictly-decreasing-ending lengths on the reversed sequence.
    import bisect
    rev = values[::-1]
    neg = [-v for v in rev]
    tails = []
    lens = []
    for v in neg:
        pos = bisect.bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
        lens.append(pos + 1)
    return lens[::-1]


def lex_smallest_lis(values):
    R = lis_r_lengths(values)
    L = max(R)
    out = []
    t = L
    cur = -math.inf
    for i, v in enumerate(values):
        if R[i] == t and v > cur:
            out.append(i)
            cur = v
            t -= 1
            if t == 0:
                break
    return out


def extract(config, k, rotation_deg, direction):
    rot = rotate(config, rotation_deg)
    order = sorted(range(len(rot)), key=lambda i: (rot[i][0], rot[i][1]))
    ys = [rot[i][1] for i in order]
    if direction == "decreasing":
        ys = [-y for y in ys]
    chain = lex_smallest_lis(ys)
    if len(chain) < k:
        return None
    return tuple(sorted(order[i] for i in chain[:k]))


def witness(config, k, placement):
    gap = largest_direction_gap(config)
    w = gap.width_deg
    if placement == "centered":
        subset = extract(config, k, -(gap.start_deg + w / 2.0), "increasing")
        if subset is None:
            subset = extract(config, k, -(gap.start_deg + w / 2.0), "decreasing")
        return subset, w
    # edge placement: gap -> (-delta, w - delta), increasing chain;
    # fall back to mirrored placement (gap -> (delta - w, delta)) decreasing.
    delta = w * 1e-9
    subset = extract(config, k, -(gap.start_deg + delta), "increasing")
    if subset is None:
        subset = extract(config, k, -(gap.start_deg + w - delta), "decreasing")
        if subset is None:
            return None, w
    return subset, w


rng = np.random.default_rng(12345)
stats = {"centered": [], "edge": []}
fails = {"centered": 0, "edge": 0}
fails_half = 0
none_count = 0
N_TRIALS = 4000
for trial in range(N_TRIALS):
    pts = rng.uniform(0, 100, size=(10, 2))
    config = Configuration(pts)
    for placement in ("centered", "edge"):
        subset, w = witness(config, 4, placement)
        if subset is None:
            none_count += 1
            continue
        measured = subset_min_deviation(config, subset).deviation_deg
        stats[placement].append(measured - w)
        if measured < w - 1e-9:
            fails[placement] += 1
            if placement == "centered" and measured < w / 2 - 1e-9:
                fails_half += 1

for placement in ("centered", "edge"):
    arr = np.array(stats[placement])
    print(f"{placement}: n={len(arr)} min(measured-width)={arr.min():.4f} "
          f"frac_below_width={(arr < -1e-9).mean():.4%} fails={fails[placement]}")
print(f"centered fails vs width/2: {fails_half}, none_count={none_count}")

# criterion-7 style check: measured >= 4 for 10-point sets under both placements
for placement in ("centered", "edge"):
    rng2 = np.random.default_rng(20240501)
    bad = 0
    worst = 90.0
    for trial in range(200):
        config = Configuration(rng2.uniform(0, 100, size=(10, 2)))
        subset, w = witness(config, 4, placement)
        measured = subset_min_deviation(config, subset).deviation_deg
        worst = min(worst, measured)
        if measured < 4.0:
            bad += 1
    print(f"{placement}: criterion-7 sweep min measured = {worst:.4f}, below 4: {bad}")

# Scratch: exercise final witness implementations. Not shipped.
import numpy as np

from angledev.geometry import Configuration, largest_direction_gap, segment_direction
from angledev.scoring import subset_min_deviation, gamma
from angledev.witnesses import monotone_witness, bin_chain_witness, longest_monotone_subsequence

rng = np.random.default_rng(777)
viol = 0
half_count = 0
worst_margin = 1e9
for trial in range(4000):
    config = Configuration(rng.uniform(0, 100, size=(10, 2)))
    wit = monotone_witness(config, 4)
    gap = largest_direction_gap(config)
    if wit.measured_deviation_deg < wit.guaranteed_deviation_deg - 1e-9:
        viol += 1
    if wit.guaranteed_deviation_deg < gap.width_deg * 0.9:
        half_count += 1
    worst_margin = min(worst_margin, wit.measured_deviation_deg - wit.guaranteed_deviation_deg)
print(f"monotone: violations={viol}, centered_fallbacks={half_count}/4000, worst margin={worst_margin:.6f}")

# criterion-7 style
rng = np.random.default_rng(20240501)
vals = []
for trial in range(200):
    config = Configuration(rng.uniform(0, 100, size=(10, 2)))
    wit = monotone_witness(config, 4)
    vals.append(wit.measured_deviation_deg)
print(f"criterion 7 sweep: min measured = {min(vals):.4f} (need >= 4)")

# bin chain: criterion 9 style
rng = np.random.default_rng(999)
ok = True
minmin = 90.0
import time
t0 = time.perf_counter()
for trial in range(100):
    pts = rng.uniform(0, 1000, size=(82, 2))
    config = Configuration(pts)
    subset = bin_chain_witness(config, 4, 4)
    dirs = [segment_direction(config[i], config[j]) for ii, i in enumerate(subset) for j in subset[ii+1:]]
    bins = {int(d * 4 / 180.0) for d in dirs}
    if len(bins) != 1:
        ok = False
        print("bin spread FAIL", sorted(dirs))
    md = subset_min_deviation(config, subset).deviation_deg
    minmin = min(minmin, md)
print(f"bin chain: single-bin={ok}, min measured={minmin:.4f} (need >= 45), time={time.perf_counter()-t0:.2f}s")

# LIS examples
print(longest_monotone_subsequence([1, 3, 2, 4], "increasing"), "expect [0,1,3]")
print(longest_monotone_subsequence([5, 4, 3, 2, 1], "increasing"), "expect [0]")
print(longest_monotone_subsequence([5, 4, 3, 2, 1], "decreasing"), "expect [0,1,2,3,4]")

# ES sweep: 1000 permutations of 10 distinct -> max(LIS, LDS) >= 4
rng = np.random.default_rng(4)
for _ in range(1000):
    vals = list(rng.permutation(10).astype(float))
    li = longest_monotone_subsequence(vals, "increasing")
    ld = longest_monotone_subsequence(vals, "decreasing")
    assert max(len(li), len(ld)) >= 4
print("ES sweep ok")

# x^3 example
config = Configuration([(x, x**3) for x in range(1, 6)])
wit = monotone_witness(config, 3)
print(f"x^3 witness: subset={wit.subset} dir={wit.direction} guaranteed={wit.guaranteed_deviation_deg:.4f} measured={wit.measured_deviation_deg:.4f}")

# collinear bin chain example: 5 points at 30 degrees, k=3, m=2
import math
c, s = math.cos(math.radians(30)), math.sin(math.radians(30))
config = Configuration([(t * c, t * s) for t in range(5)])
subset = bin_chain_witness(config, 3, 2)
md = subset_min_deviation(config, subset).deviation_deg
print(f"collinear chain: subset={subset} measured={md}")

# Scratch: verify table data, gamma values, and witness-rotation math. Not shipped.
import math
import time

from angledev.constructions import record_config_10, record_config_11, seven_point, cluster_grid, circle_points, spiral, SpiralParams
from angledev.geometry import angle_at, deviation, largest_direction_gap, rotate, Configuration
from angledev.scoring import gamma, subset_min_deviation, all_subset_argmins

S10 = record_config_10()
S11 = record_config_11()

# Table 1 digitization: (a, b, c, printed deviation, fourth points)
TABLE = [
    (2,1,6,"0.0126",(0,3,4,5,7,8,9)), (0,1,8,"0.0566",(2,3,4,5,6,7,9)),
    (4,7,9,"0.1913",(0,1,2,3,5,6,8)), (4,6,9,"0.2006",(0,1,2,3,5,8)),
    (0,4,5,"0.2080",(1,2,3,6,7,8,9)), (2,6,5,"0.3123",(0,3,4,7,8,9)),
    (2,6,7,"0.8479",(0,3,4,8,9)), (2,0,6,"1.1361",(3,4,8,9)),
    (1,4,5,"1.5933",(2,3,6,7,8,9)), (2,5,8,"1.8450",(0,1,3,4,7,9)),
    (3,7,8,"1.9362",(0,1,2,4,5,6,9)), (3,6,8,"2.2042",(0,1,2,4,5,9)),
    (0,7,9,"2.2356",(1,2,3,5,6,8)), (4,7,8,"2.6813",(0,1,2,5,6)),
    (1,7,9,"2.7460",(2,3,5,6,8)), (0,1,4,"2.9012",(2,3,6,7,9)),
    (3,8,9,"3.4730",(0,1,2,4,5)), (1,0,9,"4.3740",(2,3,5,6)),
    (3,7,9,"4.4262",(2,5,6)), (6,9,7,"4.4810",(5,8)),
    (0,7,8,"4.7256",(2,5,6)), (6,4,7,"4.8729",(0,1,3,5)),
    (1,7,8,"5.2360",(2,5,6)), (5,4,8,"5.6920",(3,6,9)),
    (5,3,8,"6.2840",(0,1)), (5,9,7,"6.3125",(2,8)),
    (5,3,7,"6.3521",(0,1,2,4,6)),
    (4,6,8,"6.8323",(0,1,2)), (0,8,9,"6.8542",(2,4,5,6)),
    (1,2,3,"7.2653",(0,4,5,7,8,9)), (0,2,4,"7.2844",(3,7,8,9)),
    (5,4,7,"7.3522",(2,)), (1,8,9,"7.3575",(2,4,5,6)),
    (1,3,4,"7.3905",(6,7,8,9)), (1,5,7,"7.4430",(0,2,6)),
    (2,5,9,"8.1633",(0,1,3,4)), (3,5,9,"8.2384",(0,1,4,6)),
    (0,5,7,"8.2389",(2,6)), (1,5,6,"8.4960",(0,3,8,9)),
    (4,8,9,"8.4985",(2,)), (6,8,7,"9.0239",(5,)),
    (6,9,8,"9.2179",(2,5)), (3,6,9,"9.2371",(0,1,2)),
    (0,2,3,"9.2726",(5,7,8,9)), (2,4,3,"9.2903",(5,6,7,8,9)),
    (0,3,4,"9.2913",(6,7,8,9)), (2,1,5,"9.2916",(0,)),
    (1,2,4,"9.2917",(7,8,9)), (2,7,9,"9.2919",(8,)),
    (0,5,6,"9.2919",(3,8,9)), (0,1,7,"9.2919",(2,3,6)),
    (6,3,7,"9.2919",(0,1)), (1,0,3,"9.2919",(5,6)),
    (3,6,5,"9.2919",(4,)),
]

print(f"table rows: {len(TABLE)}, quadruples covered: {sum(len(t[4]) for t in TABLE)}")

worst = 0.0
for a,b,c,dev_s,fourth in TABLE:
    d = deviation(S10[a], S10[b], S10[c])
    err = abs(d - float(dev_s))
    worst = max(worst, err)
    if err > 0.0005:
        print(f"MISMATCH angle P{a} P{b} P{c}: printed {dev_s}, computed {d:.6f}")
print(f"max |computed - printed| over 54 entries: {worst:.3061}")
print(f"max err: {worst:.6g}")

t0 = time.perf_counter()
g10o = gamma(S10, 4, mode="oracle")
t1 = time.perf_counter()
g10p = gamma(S10, 4, mode="pruned")
t2 = time.perf_counter()
print(f"gamma(S10,4) oracle={g10o.gamma_deg!r} ({t1-t0:.3f}s) pruned={g10p.gamma_deg!r} ({t2-t1:.3f}s)")
print(f"  witness={g10o.witness} argmin=({g10o.argmin_angle.a},{g10o.argmin_angle.b},{g10o.argmin_angle.c}) examined={g10o.subsets_examined}/{g10p.subsets_examined} pruned_count={g10p.subsets_pruned}")
assert g10o.gamma_deg == g10p.gamma_deg and g10o.witness == g10p.witness

g11 = gamma(S11, 4)
print(f"gamma(S11,4) = {g11.gamma_deg!r} witness={g11.witness}")

g7 = gamma(seven_point(), 4)
print(f"gamma(seven,4) = {g7.gamma_deg!r}")

gc = gamma(cluster_grid(1e6), 4)
print(f"gamma(cluster 1e6, 4) = {gc.gamma_deg!r} bound 2.3e-4")

for n,k in ((6,3),(4,3),(12,3),(12,4)):
    g = gamma(circle_points(n), k)
    print(f"gamma(circle {n},{k}) = {g.gamma_deg!r}")

for t in (2,3,4,5):
    g = gamma(spiral(SpiralParams(t=t, R=1e4)), 3)
    print(f"spiral t={t}: gamma={g.gamma_deg:.6f} product=(90-g)*t={(90-g.gamma_deg)*t:.6f}")

# subset {1,2,6,9} argmin should be angle P2 P1 P6
r = subset_min_deviation(S10, (1,2,6,9))
print(f"argmin of (1,2,6,9): a={r.a} b={r.b} c={r.c} dev={r.deviation_deg:.4f}")

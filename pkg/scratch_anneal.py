# Scratch: anneal feasibility for n=11, k=4 on a 100-grid. Not shipped.
import time

from angledev.optimize import AnnealParams, anneal, refine, RefineParams, smoothed_gamma
from angledev.constructions import record_config_10
from angledev.scoring import gamma

t0 = time.perf_counter()
params = AnnealParams(n=11, k=4, grid=100, iterations=200_000, seed=0)
config, result, trace = anneal(params)
t1 = time.perf_counter()
print(f"seed 0: gamma_best={result.gamma_deg:.4f} in {t1-t0:.1f}s "
      f"(trace last: {trace[-1]})")

best = (result.gamma_deg, 0, config)
for seed in range(1, 6):
    t0 = time.perf_counter()
    config_s, result_s, _ = anneal(AnnealParams(n=11, k=4, grid=100, iterations=200_000, seed=seed))
    print(f"seed {seed}: gamma_best={result_s.gamma_deg:.4f} ({time.perf_counter()-t0:.1f}s)")
    if result_s.gamma_deg < best[0]:
        best = (result_s.gamma_deg, seed, config_s)

print(f"best over seeds: {best[0]:.4f} (seed {best[1]})")

# smoothed sanity
S10 = record_config_10()
for beta in (1e2, 1e4, 1e6):
    print(f"beta={beta:g}: smoothed={smoothed_gamma(S10, 4, beta):.6f} exact={gamma(S10,4).gamma_deg:.6f}")

# refine the best annealed config
t0 = time.perf_counter()
refined, rres = refine(best[2], 4)
print(f"refine: {best[0]:.4f} -> {rres.gamma_deg:.4f} in {time.perf_counter()-t0:.1f}s")

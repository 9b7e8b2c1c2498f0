# Scratch: remaining anneal spec-example probes. Not shipped.
import time

from angledev.optimize import AnnealParams, anneal

t0 = time.perf_counter()
config, result, trace = anneal(AnnealParams(n=4, k=4, grid=50, iterations=10_000, seed=0))
print(f"n=k=4: gamma={result.gamma_deg:.6f} in {time.perf_counter()-t0:.2f}s (want <= 0.5)")

for seed in range(8):
    t0 = time.perf_counter()
    config, result, _ = anneal(AnnealParams(n=10, k=4, grid=100, iterations=200_000, seed=seed))
    print(f"n=10 seed {seed}: gamma_best={result.gamma_deg:.4f} ({time.perf_counter()-t0:.1f}s)")

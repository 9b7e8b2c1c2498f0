"""Search for low-score configurations.

anneal() runs a seeded Metropolis chain over n distinct lattice points,
minimizing gamma(S, k). Moving one point only changes angles through that
point, so the evaluator keeps per-subset minima cached and rescores just the
touched subsets per proposal (with the untouched block entering through its
cached maximum).

refine() polishes a configuration in continuous coordinates: the max-min
objective is smoothed with log-sum-exp at increasing sharpness beta, the
gradient is estimated by central finite differences, and a backtracking line
search accepts a step only when the exact score strictly decreases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.special import logsumexp

from .errors import BudgetExceeded, InvalidK, InvalidParams
from .geometry import Configuration
from .scoring import DEFAULT_BUDGET, GammaResult, gamma

_MAX_MATRIX_CELLS = 2 * 10**7  # subsets x angles kept in memory
_LINE_SEARCH_HALVINGS = 40
_INITIAL_STEP = 1.0
_MOVE_RETRIES = 32


@dataclass(frozen=True)
class AnnealParams:
    n: int
    k: int
    grid: int = 100
    iterations: int = 200_000
    t_initial: float = 10.0
    cooling: float = 0.999
    relocate_prob: float = 0.2
    local_radius: int = 3
    seed: int = 0

    def __post_init__(self):
        if not 3 <= self.k <= self.n:
            raise InvalidParams(f"need 3 <= k <= n, got k={self.k}, n={self.n}")
        if self.grid < 1 or self.n > self.grid**2:
            raise InvalidParams(f"{self.n} points do not fit a {self.grid}x{self.grid} grid")
        if self.iterations < 0:
            raise InvalidParams("iterations must be >= 0")
        if not self.t_initial > 0:
            raise InvalidParams("t_initial must be > 0")
        if not 0.0 < self.cooling < 1.0:
            raise InvalidParams("cooling must be in (0, 1)")
        if not 0.0 <= self.relocate_prob <= 1.0:
            raise InvalidParams("relocate_prob must be in [0, 1]")
        if self.local_radius < 1:
            raise InvalidParams("local_radius must be >= 1")


@dataclass(frozen=True)
class RefineParams:
    beta_schedule: tuple[float, ...] = (1e2, 1e3, 1e4)
    fd_step: float = 1e-6
    max_iters: int = 100
    min_rel_improvement: float = 1e-4

    def __post_init__(self):
        sched = tuple(self.beta_schedule)
        if not sched or any(b <= 0 for b in sched):
            raise InvalidParams("beta_schedule must be non-empty and positive")
        if any(b2 <= b1 for b1, b2 in zip(sched, sched[1:])):
            raise InvalidParams("beta_schedule must be strictly increasing")
        if not self.fd_step > 0:
            raise InvalidParams("fd_step must be > 0")
        if self.max_iters < 1:
            raise InvalidParams("max_iters must be >= 1")
        if self.min_rel_improvement < 0:
            raise InvalidParams("min_rel_improvement must be >= 0")
        object.__setattr__(self, "beta_schedule", sched)


class _SubsetGeometry:
    """Index tables for vectorized scoring of all k-subsets of n points.

    Angles are stored once per (vertex b, unordered pair {a, c}) triple;
    subset_angles maps each k-subset (lexicographic order) to its 3*C(k,3)
    triple slots.
    """

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        n_subsets = math.comb(n, k)
        per_subset = 3 * math.comb(k, 3)
        if n_subsets * per_subset > _MAX_MATRIX_CELLS:
            raise BudgetExceeded(
                f"vectorized scorer needs {n_subsets}x{per_subset} angle slots; "
                f"limit is {_MAX_MATRIX_CELLS}")

        triple_index: dict[tuple[int, int, int], int] = {}
        ta, tb, tc = [], [], []
        for b in range(n):
            for a, c in combinations([i for i in range(n) if i != b], 2):
                triple_index[(b, a, c)] = len(ta)
                ta.append(a)
                tb.append(b)
                tc.append(c)
        self.ta = np.array(ta, dtype=np.int32)
        self.tb = np.array(tb, dtype=np.int32)
        self.tc = np.array(tc, dtype=np.int32)

        subsets = list(combinations(range(n), k))
        rows = np.empty((n_subsets, per_subset), dtype=np.int32)
        for r, subset in enumerate(subsets):
            slot = 0
            for b in subset:
                others = [i for i in subset if i != b]
                for a, c in combinations(others, 2):
                    rows[r, slot] = triple_index[(b, a, c)]
                    slot += 1
        self.subset_angles = rows
        self.subsets = subsets

        touched = [[] for _ in range(n)]
        for idx, (b, a, c) in enumerate(zip(tb, ta, tc)):
            touched[a].append(idx)
            touched[b].append(idx)
            touched[c].append(idx)
        self.triples_with = [np.array(t, dtype=np.int64) for t in touched]

        with_rows = [[] for _ in range(n)]
        without_rows = [[] for _ in range(n)]
        for r, subset in enumerate(subsets):
            inside = set(subset)
            for p in range(n):
                (with_rows if p in inside else without_rows)[p].append(r)
        self.rows_with = [np.array(r, dtype=np.int64) for r in with_rows]
        self.rows_without = [np.array(r, dtype=np.int64) for r in without_rows]

    def deviations(self, coords: np.ndarray) -> np.ndarray:
        """Deviation from 90 degrees for every angle triple (degrees)."""
        return self.deviations_at(coords, slice(None))

    def deviations_at(self, coords: np.ndarray, idx) -> np.ndarray:
        ax, ay = coords[self.ta[idx], 0], coords[self.ta[idx], 1]
        bx, by = coords[self.tb[idx], 0], coords[self.tb[idx], 1]
        cx, cy = coords[self.tc[idx], 0], coords[self.tc[idx], 1]
        ux, uy = ax - bx, ay - by
        vx, vy = cx - bx, cy - by
        cross = ux * vy - uy * vx
        dot = ux * vx + uy * vy
        return np.abs(np.degrees(np.arctan2(np.abs(cross), dot)) - 90.0)

    def subset_mins(self, devs: np.ndarray) -> np.ndarray:
        return devs[self.subset_angles].min(axis=1)

    def score(self, coords: np.ndarray) -> float:
        return float(self.subset_mins(self.deviations(coords)).max())


@lru_cache(maxsize=8)
def _geometry(n: int, k: int) -> _SubsetGeometry:
    return _SubsetGeometry(n, k)


def smoothed_gamma(config: Configuration, k: int, beta: float,
                   budget: int = DEFAULT_BUDGET) -> float:
    """Soft-max over subsets of soft-min over angle deviations, sharpness beta.

    softmin(x) = -(1/beta) log sum exp(-beta x), softmax dually; the value
    converges to gamma(S, k) as beta -> infinity, with error at most
    (ln C(n,k) + ln 3C(k,3)) / beta.
    """
    n = len(config)
    if not 3 <= k <= n:
        raise InvalidK(f"need 3 <= k <= n, got k={k}, n={n}")
    if not beta > 0:
        raise InvalidParams(f"beta must be > 0, got {beta}")
    if math.comb(n, k) > budget:
        raise BudgetExceeded(f"C({n},{k}) exceeds the budget of {budget}")
    geom = _geometry(n, k)
    coords = np.asarray(config.points, dtype=np.float64)
    per_angle = geom.deviations(coords)[geom.subset_angles]
    soft_min = -logsumexp(-beta * per_angle, axis=1) / beta
    return float(logsumexp(beta * soft_min) / beta)


def _initial_lattice(rng: np.random.Generator, n: int, N: int) -> list[tuple[int, int]]:
    cells: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    while len(cells) < n:
        cell = (int(rng.integers(1, N + 1)), int(rng.integers(1, N + 1)))
        if cell not in seen:
            seen.add(cell)
            cells.append(cell)
    return cells


def anneal(params: AnnealParams, debug: bool = False
           ) -> tuple[Configuration, GammaResult, list[tuple[int, float, float, float]]]:
    """Seeded Metropolis chain over lattice configurations, minimizing gamma.

    Proposals move one uniformly chosen point, to a uniform empty cell with
    probability relocate_prob or to a uniform empty cell within L-inf radius
    local_radius otherwise; invalid targets are redrawn a bounded number of
    times, after which the iteration makes no move. Acceptance probability is
    min(1, exp((old - new) / T)) with T cooled geometrically each iteration.

    Returns (best configuration, its exact GammaResult, trace) where trace
    rows are (iteration, T, gamma_current, gamma_best). Deterministic for a
    fixed parameter set.
    """
    n, k, N = params.n, params.k, params.grid
    rng = np.random.default_rng(params.seed)
    geom = _geometry(n, k)

    cells = _initial_lattice(rng, n, N)
    occupied = set(cells)
    coords = np.array(cells, dtype=np.float64)

    devs = geom.deviations(coords)
    mins = geom.subset_mins(devs)
    g_cur = float(mins.max())

    best_cells = list(cells)
    g_best = g_cur

    temp = params.t_initial
    trace: list[tuple[int, float, float, float]] = []

    for it in range(1, params.iterations + 1):
        p = int(rng.integers(n))
        relocate = bool(rng.random() < params.relocate_prob)
        target: tuple[int, int] | None = None
        for _ in range(_MOVE_RETRIES):
            if relocate:
                cand = (int(rng.integers(1, N + 1)), int(rng.integers(1, N + 1)))
            else:
                r = params.local_radius
                cand = (cells[p][0] + int(rng.integers(-r, r + 1)),
                        cells[p][1] + int(rng.integers(-r, r + 1)))
                if not (1 <= cand[0] <= N and 1 <= cand[1] <= N):
                    continue
            if cand not in occupied:
                target = cand
                break

        if target is not None:
            old_cell = cells[p]
            coords[p, 0], coords[p, 1] = target
            touched = geom.triples_with[p]
            new_devs = geom.deviations_at(coords, touched)
            trial = devs.copy()
            trial[touched] = new_devs
            mins_p = trial[geom.subset_angles[geom.rows_with[p]]].min(axis=1)
            rest = mins[geom.rows_without[p]]
            best_rest = float(rest.max()) if rest.size else -math.inf
            g_new = max(best_rest, float(mins_p.max()))

            accept = g_new <= g_cur
            if not accept and temp > 0.0:
                accept = bool(rng.random() < math.exp((g_cur - g_new) / temp))
            if accept:
                cells[p] = target
                occupied.discard(old_cell)
                occupied.add(target)
                devs = trial
                mins[geom.rows_with[p]] = mins_p
                g_cur = g_new
                if g_cur < g_best:
                    g_best = g_cur
                    best_cells = list(cells)
            else:
                coords[p, 0], coords[p, 1] = old_cell

        if debug:
            assert len(occupied) == n
            assert all(1 <= x <= N and 1 <= y <= N for x, y in cells)
            if it % 500 == 0:
                full = geom.subset_mins(geom.deviations(coords))
                assert np.array_equal(full, mins), "incremental score drifted"

        trace.append((it, temp, g_cur, g_best))
        temp *= params.cooling

    best_config = Configuration([(float(x), float(y)) for x, y in best_cells])
    result = gamma(best_config, k, mode="pruned")
    return best_config, result, trace


def _distinct_and_finite(coords: np.ndarray) -> bool:
    if not np.all(np.isfinite(coords)):
        return False
    return len({(float(x), float(y)) for x, y in coords}) == len(coords)


def refine(config: Configuration, k: int, params: RefineParams | None = None,
           budget: int = DEFAULT_BUDGET) -> tuple[Configuration, GammaResult]:
    """Gradient-based polish; never returns a configuration with larger gamma.

    For each beta in the schedule, repeatedly: estimate the gradient of the
    smoothed score by central differences, then backtrack along the negative
    gradient, accepting the first step that strictly decreases the exact
    score. A beta round stops when no step improves or when the relative
    improvement drops below min_rel_improvement.
    """
    p = params or RefineParams()
    n = len(config)
    result = gamma(config, k, budget=budget)
    g_cur = result.gamma_deg
    coords = np.asarray(config.points, dtype=np.float64).copy()

    def smoothed(c: np.ndarray, beta: float) -> float:
        return smoothed_gamma(Configuration(c), k, beta, budget=budget)

    for beta in p.beta_schedule:
        for _ in range(p.max_iters):
            grad = np.zeros_like(coords)
            for i in range(n):
                for axis in range(2):
                    coords[i, axis] += p.fd_step
                    hi = smoothed(coords, beta)
                    coords[i, axis] -= 2.0 * p.fd_step
                    lo = smoothed(coords, beta)
                    coords[i, axis] += p.fd_step
                    grad[i, axis] = (hi - lo) / (2.0 * p.fd_step)
            scale = float(np.abs(grad).max())
            if scale == 0.0:
                break
            direction = -grad / scale

            step = _INITIAL_STEP
            improved = False
            for _ in range(_LINE_SEARCH_HALVINGS):
                cand = coords + step * direction
                if _distinct_and_finite(cand):
                    cand_cfg = Configuration(cand)
                    cand_res = gamma(cand_cfg, k, budget=budget)
                    if cand_res.gamma_deg < g_cur:
                        rel = (g_cur - cand_res.gamma_deg) / max(g_cur, 1e-12)
                        coords = cand
                        g_cur = cand_res.gamma_deg
                        result = cand_res
                        improved = True
                        break
                step *= 0.5
            if not improved:
                break
            if rel < p.min_rel_improvement:
                break

    final = Configuration(coords)
    return final, result

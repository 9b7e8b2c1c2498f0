"""Exact max-min scoring of k-subsets.

score(S, k) -- written gamma(S, k) throughout -- is the maximum over all
k-subsets T of the minimum deviation from 90 degrees over the 3*C(k,3)
vertex-labeled angles of T. A subset attaining the maximum is the witness;
its minimum-deviation angle is the argmin angle.

Two interchangeable evaluators are provided: a brute-force oracle that
enumerates every subset, and a depth-first branch-and-bound that prunes any
partial subset whose running minimum already fails to beat the incumbent
(adding points can only lower a subset's minimum). Both produce identical
results, including tie-breaks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceeded, InvalidK, SubsetTooSmall
from .geometry import Configuration, angle_at

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class DeviationReport:
    """One vertex-labeled angle and its deviation from 90 degrees.

    b is the vertex; a, c are the (unordered) ray endpoints with a < c.
    """

    a: int
    b: int
    c: int
    angle_deg: float
    deviation_deg: float


@dataclass(frozen=True)
class GammaResult:
    gamma_deg: float
    delta_deg: float
    witness: tuple[int, ...]
    argmin_angle: DeviationReport
    subsets_examined: int
    subsets_pruned: int


def _check_subset(config: Configuration, indices: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(indices)
    if len(idx) < 3:
        raise SubsetTooSmall(f"a subset needs at least 3 points, got {len(idx)}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"subset indices must be distinct: {idx}")
    if any(i < 0 or i >= len(config) for i in idx):
        raise ValueError(f"subset index out of range for n={len(config)}: {idx}")
    return tuple(sorted(idx))


def _check_budget(n: int, k: int, budget: int) -> None:
    if math.comb(n, k) > budget:
        raise BudgetExceeded(
            f"C({n},{k}) = {math.comb(n, k)} exceeds the budget of {budget}")


def subset_min_deviation(config: Configuration, indices: Sequence[int]) -> DeviationReport:
    """Minimum-deviation angle among all angles of the subset.

    Ties at equal deviation go to the lexicographically smallest (b, a, c).
    """
    idx = _check_subset(config, indices)
    pts = config.points
    best: DeviationReport | None = None
    for b in idx:
        others = [i for i in idx if i != b]
        for a, c in combinations(others, 2):
            ang = angle_at(pts[a], pts[b], pts[c])
            dev = abs(ang - 90.0)
            if best is None or dev < best.deviation_deg:
                best = DeviationReport(a=a, b=b, c=c, angle_deg=ang, deviation_deg=dev)
    assert best is not None
    return best


def gamma(config: Configuration, k: int, mode: str = "pruned",
          budget: int = DEFAULT_BUDGET) -> GammaResult:
    """gamma(S, k): the best achievable min-deviation over k-subsets of S.

    mode="oracle" enumerates every subset; mode="pruned" runs the
    branch-and-bound. Ties between subsets go to the lexicographically
    smallest witness (the first one found in enumeration order).
    """
    n = len(config)
    if not 3 <= k <= n:
        raise InvalidK(f"need 3 <= k <= n, got k={k}, n={n}")
    _check_budget(n, k, budget)
    if mode == "oracle":
        return _gamma_oracle(config, k)
    if mode == "pruned":
        return _gamma_pruned(config, k)
    raise ValueError(f"unknown mode {mode!r}; expected 'oracle' or 'pruned'")


def _gamma_oracle(config: Configuration, k: int) -> GammaResult:
    n = len(config)
    best_min: DeviationReport | None = None
    best_subset: tuple[int, ...] | None = None
    examined = 0
    for subset in combinations(range(n), k):
        examined += 1
        report = subset_min_deviation(config, subset)
        if best_min is None or report.deviation_deg > best_min.deviation_deg:
            best_min, best_subset = report, subset
    assert best_min is not None and best_subset is not None
    return GammaResult(
        gamma_deg=best_min.deviation_deg,
        delta_deg=90.0 - best_min.deviation_deg,
        witness=best_subset,
        argmin_angle=best_min,
        subsets_examined=examined,
        subsets_pruned=0,
    )


def _gamma_pruned(config: Configuration, k: int) -> GammaResult:
    n = len(config)
    pts = config.points

    best_gamma = -math.inf
    best_subset: tuple[int, ...] | None = None
    examined = 0
    pruned = 0

    chosen: list[int] = []

    def extend(start: int, current_min: float) -> None:
        nonlocal best_gamma, best_subset, examined, pruned
        depth = len(chosen)
        if depth == k:
            examined += 1
            if current_min > best_gamma:
                best_gamma = current_min
                best_subset = tuple(chosen)
            return
        need = k - depth
        for j in range(start, n - need + 1):
            # Angles introduced by j: j as vertex over pairs of chosen, and
            # chosen vertices paired with j. min() over floats is exact, so
            # the running minimum matches a from-scratch evaluation.
            new_min = current_min
            pj = pts[j]
            for x, y in combinations(chosen, 2):
                ang = abs(angle_at(pts[x], pj, pts[y]) - 90.0)
                if ang < new_min:
                    new_min = ang
            for b in chosen:
                pb = pts[b]
                for x in chosen:
                    if x == b:
                        continue
                    ang = abs(angle_at(pts[x], pb, pj) - 90.0)
                    if ang < new_min:
                        new_min = ang
            if len(chosen) + 1 >= 3 and new_min <= best_gamma:
                pruned += math.comb(n - j - 1, need - 1)
                continue
            chosen.append(j)
            extend(j + 1, new_min)
            chosen.pop()

    extend(0, math.inf)
    assert best_subset is not None
    report = subset_min_deviation(config, best_subset)
    return GammaResult(
        gamma_deg=report.deviation_deg,
        delta_deg=90.0 - report.deviation_deg,
        witness=best_subset,
        argmin_angle=report,
        subsets_examined=examined,
        subsets_pruned=pruned,
    )


def all_subset_argmins(config: Configuration, k: int,
                       budget: int = DEFAULT_BUDGET) -> list[tuple[tuple[int, ...], DeviationReport]]:
    """Per-subset argmin angles for every k-subset, in lexicographic order."""
    n = len(config)
    if not 3 <= k <= n:
        raise InvalidK(f"need 3 <= k <= n, got k={k}, n={n}")
    _check_budget(n, k, budget)
    return [(subset, subset_min_deviation(config, subset))
            for subset in combinations(range(n), k)]

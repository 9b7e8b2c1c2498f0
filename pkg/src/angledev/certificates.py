"""Upper-bound certificates: grouped near-right angles covering all k-subsets.

A certificate witnesses gamma(S, k) <= bound_deg by listing angles together
with the completion indices that extend each angle's three points to a full
k-subset. Verification recomputes every listed deviation, checks that the
listed quadruples cover each k-subset exactly once, and confirms each listed
angle attains its subset's minimum deviation within tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ShapeError
from .geometry import Configuration, deviation
from .scoring import DEFAULT_BUDGET, all_subset_argmins, subset_min_deviation

DEFAULT_VERIFY_TOL = 5e-4  # half an ulp of a 4-decimal printed table


@dataclass(frozen=True)
class CertEntry:
    """One near-right angle (vertex b) plus the completions it covers.

    Each completion is a (k-3)-tuple of extra indices; the covered subset is
    {a, b, c} plus the completion. For k = 4 a completion is one fourth point.
    """

    a: int
    b: int
    c: int
    deviation_deg: float
    completions: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Certificate:
    n: int
    k: int
    bound_deg: float
    entries: tuple[CertEntry, ...]


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    subsets_checked: int
    failed_check: int | None = None  # 1..4 per verify_certificate's docstring
    message: str | None = None


def generate_certificate(config: Configuration, k: int,
                         budget: int = DEFAULT_BUDGET) -> Certificate:
    """Group every k-subset under its argmin angle; bound is the max deviation.

    Entries are sorted by deviation ascending (tie-break on the (b, a, c)
    triple), completions lexicographically.
    """
    argmins = all_subset_argmins(config, k, budget=budget)
    groups: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}
    devs: dict[tuple[int, int, int], float] = {}
    bound = 0.0
    for subset, report in argmins:
        key = (report.b, report.a, report.c)
        rest = tuple(i for i in subset if i not in (report.a, report.b, report.c))
        groups.setdefault(key, []).append(rest)
        devs[key] = report.deviation_deg
        bound = max(bound, report.deviation_deg)
    entries = [
        CertEntry(a=a, b=b, c=c, deviation_deg=devs[(b, a, c)],
                  completions=tuple(sorted(groups[(b, a, c)])))
        for (b, a, c) in groups
    ]
    entries.sort(key=lambda e: (e.deviation_deg, e.b, e.a, e.c))
    return Certificate(n=len(config), k=k, bound_deg=bound, entries=tuple(entries))


def _shape_check(config: Configuration, cert: Certificate) -> None:
    n, k = cert.n, cert.k
    if n != len(config):
        raise ShapeError(f"certificate is for n={n}, configuration has {len(config)} points")
    if not 3 <= k <= n:
        raise ShapeError(f"certificate k={k} outside 3..n")
    if not cert.entries:
        raise ShapeError("certificate has no entries")
    for e in cert.entries:
        triple = (e.a, e.b, e.c)
        if len(set(triple)) != 3 or any(i < 0 or i >= n for i in triple):
            raise ShapeError(f"bad angle indices {triple}")
        if not e.completions:
            raise ShapeError(f"entry {triple} covers no subsets")
        for rest in e.completions:
            if len(rest) != k - 3:
                raise ShapeError(f"entry {triple}: completion {rest} has wrong size")
            full = set(triple) | set(rest)
            if len(full) != k or any(i < 0 or i >= n for i in rest):
                raise ShapeError(f"entry {triple}: completion {rest} is not a valid {k}-subset")


def verify_certificate(config: Configuration, cert: Certificate,
                       tol_deg: float = DEFAULT_VERIFY_TOL) -> VerifyReport:
    """Check a certificate against a configuration, failing fast.

    Checks, in order:
      1. each entry's recomputed deviation is within tol_deg of the stated one;
      2. the covered subsets are exactly the C(n, k) k-subsets, each once;
      3. each entry's angle attains its subset's minimum deviation within tol_deg;
      4. bound_deg equals the maximum stated entry deviation within tol_deg.
    """
    _shape_check(config, cert)
    n, k = cert.n, cert.k

    for e in cert.entries:
        recomputed = deviation(config[e.a], config[e.b], config[e.c])
        if abs(recomputed - e.deviation_deg) > tol_deg:
            return VerifyReport(
                passed=False, subsets_checked=0, failed_check=1,
                message=(f"angle ({e.a},{e.b},{e.c}): stated {e.deviation_deg}, "
                         f"recomputed {recomputed:.6f}"))

    covered: dict[frozenset[int], tuple[int, int, int]] = {}
    for e in cert.entries:
        for rest in e.completions:
            subset = frozenset((e.a, e.b, e.c) + rest)
            if subset in covered:
                return VerifyReport(
                    passed=False, subsets_checked=0, failed_check=2,
                    message=f"subset {tuple(sorted(subset))} covered twice")
            covered[subset] = (e.a, e.b, e.c)
    if len(covered) != comb(n, k):
        for subset in combinations(range(n), k):
            if frozenset(subset) not in covered:
                return VerifyReport(
                    passed=False, subsets_checked=0, failed_check=2,
                    message=f"subset {subset} not covered")

    checked = 0
    for e in cert.entries:
        entry_dev = deviation(config[e.a], config[e.b], config[e.c])
        for rest in e.completions:
            subset = tuple(sorted((e.a, e.b, e.c) + rest))
            true_min = subset_min_deviation(config, subset).deviation_deg
            if entry_dev > true_min + tol_deg:
                return VerifyReport(
                    passed=False, subsets_checked=checked, failed_check=3,
                    message=(f"subset {subset}: listed angle ({e.a},{e.b},{e.c}) has "
                             f"deviation {entry_dev:.6f} but the minimum is {true_min:.6f}"))
            checked += 1

    stated_max = max(e.deviation_deg for e in cert.entries)
    if abs(cert.bound_deg - stated_max) > tol_deg:
        return VerifyReport(
            passed=False, subsets_checked=checked, failed_check=4,
            message=f"bound {cert.bound_deg} != max entry deviation {stated_max}")

    return VerifyReport(passed=True, subsets_checked=checked)


# ---------------------------------------------------------------------------
# Serialization: JSON document mirroring the table columns.
# ---------------------------------------------------------------------------

def certificate_to_dict(cert: Certificate) -> dict:
    entries = []
    for e in cert.entries:
        item: dict = {"a": e.a, "b": e.b, "c": e.c, "deviation_deg": e.deviation_deg}
        if cert.k == 4:
            item["fourth_points"] = [rest[0] for rest in e.completions]
        else:
            item["fourth_points"] = [list(rest) for rest in e.completions]
        entries.append(item)
    return {"n": cert.n, "k": cert.k, "bound_deg": cert.bound_deg, "entries": entries}


def certificate_from_dict(doc: dict) -> Certificate:
    try:
        n = int(doc["n"])
        k = int(doc["k"])
        bound = float(doc["bound_deg"])
        raw_entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed certificate document: {exc}") from exc
    if not isinstance(raw_entries, list):
        raise ShapeError("certificate 'entries' must be a list")
    entries = []
    for item in raw_entries:
        try:
            completions = []
            for rest in item["fourth_points"]:
                if isinstance(rest, int):
                    completions.append((rest,))
                else:
                    completions.append(tuple(int(i) for i in rest))
            entries.append(CertEntry(
                a=int(item["a"]), b=int(item["b"]), c=int(item["c"]),
                deviation_deg=float(item["deviation_deg"]),
                completions=tuple(completions)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ShapeError(f"malformed certificate entry {item!r}: {exc}") from exc
    return Certificate(n=n, k=k, bound_deg=bound, entries=tuple(entries))


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(certificate_to_dict(cert), fh, indent=1)
        fh.write("\n")


def load_certificate(path) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ShapeError(f"certificate is not valid JSON: {exc}") from exc
    return certificate_from_dict(doc)


def render_certificate_table(cert: Certificate) -> str:
    """Human-readable table, one angle per row, for visual diffing."""
    lines = [f"n={cert.n} k={cert.k} bound={cert.bound_deg:.4f}",
             f"{'angle':<14}{'deviation':>10}  completions"]
    for e in cert.entries:
        if cert.k == 4:
            rest = ", ".join(str(r[0]) for r in e.completions)
        else:
            rest = "; ".join(",".join(map(str, r)) for r in e.completions) or "-"
        lines.append(f"P{e.a} P{e.b} P{e.c}".ljust(14)
                     + f"{e.deviation_deg:>10.4f}  {rest}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# The published certificate for the bundled 10-point record configuration:
# 54 angles covering all 210 quadruples with deviations below 9.292 degrees.
# Deviations are the 4-decimal published values; verification tolerance
# 5e-4 degrees absorbs the rounding.
# ---------------------------------------------------------------------------

_RECORD_10_TABLE: tuple[tuple[int, int, int, str, tuple[int, ...]], ...] = (
    (2, 1, 6, "0.0126", (0, 3, 4, 5, 7, 8, 9)),
    (0, 1, 8, "0.0566", (2, 3, 4, 5, 6, 7, 9)),
    (4, 7, 9, "0.1913", (0, 1, 2, 3, 5, 6, 8)),
    (4, 6, 9, "0.2006", (0, 1, 2, 3, 5, 8)),
    (0, 4, 5, "0.2080", (1, 2, 3, 6, 7, 8, 9)),
    (2, 6, 5, "0.3123", (0, 3, 4, 7, 8, 9)),
    (2, 6, 7, "0.8479", (0, 3, 4, 8, 9)),
    (2, 0, 6, "1.1361", (3, 4, 8, 9)),
    (1, 4, 5, "1.5933", (2, 3, 6, 7, 8, 9)),
    (2, 5, 8, "1.8450", (0, 1, 3, 4, 7, 9)),
    (3, 7, 8, "1.9362", (0, 1, 2, 4, 5, 6, 9)),
    (3, 6, 8, "2.2042", (0, 1, 2, 4, 5, 9)),
    (0, 7, 9, "2.2356", (1, 2, 3, 5, 6, 8)),
    (4, 7, 8, "2.6813", (0, 1, 2, 5, 6)),
    (1, 7, 9, "2.7460", (2, 3, 5, 6, 8)),
    (0, 1, 4, "2.9012", (2, 3, 6, 7, 9)),
    (3, 8, 9, "3.4730", (0, 1, 2, 4, 5)),
    (1, 0, 9, "4.3740", (2, 3, 5, 6)),
    (3, 7, 9, "4.4262", (2, 5, 6)),
    (6, 9, 7, "4.4810", (5, 8)),
    (0, 7, 8, "4.7256", (2, 5, 6)),
    (6, 4, 7, "4.8729", (0, 1, 3, 5)),
    (1, 7, 8, "5.2360", (2, 5, 6)),
    (5, 4, 8, "5.6920", (3, 6, 9)),
    (5, 3, 8, "6.2840", (0, 1)),
    (5, 9, 7, "6.3125", (2, 8)),
    (5, 3, 7, "6.3521", (0, 1, 2, 4, 6)),
    (4, 6, 8, "6.8323", (0, 1, 2)),
    (0, 8, 9, "6.8542", (2, 4, 5, 6)),
    (1, 2, 3, "7.2653", (0, 4, 5, 7, 8, 9)),
    (0, 2, 4, "7.2844", (3, 7, 8, 9)),
    (5, 4, 7, "7.3522", (2,)),
    (1, 8, 9, "7.3575", (2, 4, 5, 6)),
    (1, 3, 4, "7.3905", (6, 7, 8, 9)),
    (1, 5, 7, "7.4430", (0, 2, 6)),
    (2, 5, 9, "8.1633", (0, 1, 3, 4)),
    (3, 5, 9, "8.2384", (0, 1, 4, 6)),
    (0, 5, 7, "8.2389", (2, 6)),
    (1, 5, 6, "8.4960", (0, 3, 8, 9)),
    (4, 8, 9, "8.4985", (2,)),
    (6, 8, 7, "9.0239", (5,)),
    (6, 9, 8, "9.2179", (2, 5)),
    (3, 6, 9, "9.2371", (0, 1, 2)),
    (0, 2, 3, "9.2726", (5, 7, 8, 9)),
    (2, 4, 3, "9.2903", (5, 6, 7, 8, 9)),
    (0, 3, 4, "9.2913", (6, 7, 8, 9)),
    (2, 1, 5, "9.2916", (0,)),
    (1, 2, 4, "9.2917", (7, 8, 9)),
    (2, 7, 9, "9.2919", (8,)),
    (0, 5, 6, "9.2919", (3, 8, 9)),
    (0, 1, 7, "9.2919", (2, 3, 6)),
    (6, 3, 7, "9.2919", (0, 1)),
    (1, 0, 3, "9.2919", (5, 6)),
    (3, 6, 5, "9.2919", (4,)),
)


def record_certificate_10() -> Certificate:
    """The published 54-angle certificate for the 10-point record (k = 4)."""
    entries = tuple(
        CertEntry(a=a, b=b, c=c, deviation_deg=float(dev),
                  completions=tuple((d,) for d in fourth))
        for a, b, c, dev, fourth in _RECORD_10_TABLE
    )
    bound = max(e.deviation_deg for e in entries)
    return Certificate(n=10, k=4, bound_deg=bound, entries=entries)

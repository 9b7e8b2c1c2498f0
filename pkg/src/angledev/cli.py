"""Command-line interface.

Subcommands: score, cert generate|verify, witness monotone|binchain,
construct <name>, anneal, refine, render. Exit codes: 0 on success or a
passing verification, 1 on a failing verification, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .certificates import (DEFAULT_VERIFY_TOL, generate_certificate, load_certificate,
                           record_certificate_10, render_certificate_table,
                           save_certificate, verify_certificate)
from .constructions import (SpiralParams, circle_points, cluster_grid, record_config_10,
                            record_config_11, seven_point, spiral, spiral_truncated)
from .errors import AngleDevError, ParseError, ShapeError
from .geometry import largest_direction_gap
from .optimize import AnnealParams, RefineParams, anneal, refine
from .pointsio import load_points, save_points
from .scoring import DEFAULT_BUDGET, gamma
from .svgrender import RenderOptions, render_svg
from .witnesses import bin_chain_witness, monotone_witness

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _write_or_print(config, out: str | None, k: int | None = None) -> None:
    if out:
        save_points(config, out, k=k)
        print(f"wrote {len(config)} points to {out}")
    else:
        strings = config.coord_strings or tuple((repr(x), repr(y)) for x, y in config.points)
        for sx, sy in strings:
            print(f"{sx} {sy}")


def _cmd_score(args) -> int:
    config = load_points(args.points)
    result = gamma(config, args.k, mode=args.mode, budget=args.budget)
    print(f"n={len(config)} k={args.k}")
    print(f"gamma_deg={result.gamma_deg:.9f}")
    print(f"delta_deg={result.delta_deg:.9f}")
    print(f"witness={','.join(map(str, result.witness))}")
    am = result.argmin_angle
    print(f"argmin_angle=P{am.a} P{am.b} P{am.c} deviation={am.deviation_deg:.9f}")
    print(f"subsets_examined={result.subsets_examined} subsets_pruned={result.subsets_pruned}")
    return EXIT_OK


def _cmd_cert_generate(args) -> int:
    config = load_points(args.points)
    cert = generate_certificate(config, args.k, budget=args.budget)
    if args.out:
        save_certificate(cert, args.out)
        print(f"wrote certificate ({len(cert.entries)} entries, bound "
              f"{cert.bound_deg:.4f}) to {args.out}")
    else:
        print(render_certificate_table(cert))
    return EXIT_OK


def _cmd_cert_verify(args) -> int:
    config = load_points(args.points)
    if args.certificate == "builtin:record10":
        cert = record_certificate_10()
    else:
        cert = load_certificate(args.certificate)
    report = verify_certificate(config, cert, tol_deg=args.tol)
    if report.passed:
        print(f"PASS: {report.subsets_checked} subsets covered, bound {cert.bound_deg}")
        return EXIT_OK
    print(f"FAIL (check {report.failed_check}): {report.message}")
    return EXIT_VERIFY_FAILED


def _cmd_witness_monotone(args) -> int:
    config = load_points(args.points)
    wit = monotone_witness(config, args.k)
    print(f"subset={','.join(map(str, wit.subset))}")
    print(f"direction={wit.direction} rotation_deg={wit.rotation_deg:.6f}")
    print(f"guaranteed_deviation_deg={wit.guaranteed_deviation_deg:.6f}")
    print(f"measured_deviation_deg={wit.measured_deviation_deg:.6f}")
    return EXIT_OK


def _cmd_witness_binchain(args) -> int:
    config = load_points(args.points)
    if args.rotate_gap:
        gap = largest_direction_gap(config)
        from .geometry import rotate
        config = rotate(config, -(gap.start_deg + gap.width_deg / 2.0) + 90.0)
    subset = bin_chain_witness(config, args.k, args.bins)
    floor = 90.0 - 180.0 / args.bins
    print(f"subset={','.join(map(str, subset))}")
    print(f"bins={args.bins} deviation_floor_deg={floor:.6f}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    name = args.name
    if name == "seven":
        config = seven_point()
    elif name == "cluster":
        config = cluster_grid(args.scale)
    elif name == "circle":
        config = circle_points(args.count)
    elif name == "szekeres":
        if args.count:
            config = spiral_truncated(args.count, args.scale)
        else:
            config = spiral(SpiralParams(t=args.levels, R=args.scale))
    elif name == "record10":
        config = record_config_10()
    elif name == "record11":
        config = record_config_11()
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(name)
    _write_or_print(config, args.out, k=args.k)
    return EXIT_OK


def _cmd_anneal(args) -> int:
    params = AnnealParams(
        n=args.n, k=args.k, grid=args.grid, iterations=args.iterations,
        t_initial=args.t_initial, cooling=args.cooling,
        relocate_prob=args.relocate_prob, local_radius=args.local_radius,
        seed=args.seed)
    config, result, trace = anneal(params)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for it, temp, g_cur, g_best in trace:
                fh.write(f"{it} {temp:.6g} {g_cur:.9f} {g_best:.9f}\n")
        print(f"wrote trace ({len(trace)} rows) to {args.trace}")
    print(f"gamma_deg={result.gamma_deg:.9f} seed={args.seed}")
    _write_or_print(config, args.out, k=args.k)
    return EXIT_OK


def _cmd_refine(args) -> int:
    config = load_points(args.points)
    params = RefineParams(
        beta_schedule=tuple(args.betas), fd_step=args.fd_step,
        max_iters=args.max_iters, min_rel_improvement=args.min_rel_improvement)
    before = gamma(config, args.k, budget=args.budget).gamma_deg
    refined, result = refine(config, args.k, params, budget=args.budget)
    print(f"gamma_deg: {before:.9f} -> {result.gamma_deg:.9f}")
    _write_or_print(refined, args.out, k=args.k)
    return EXIT_OK


def _cmd_render(args) -> int:
    config = load_points(args.points)
    chains = []
    for spec_str in args.chain or []:
        chains.append([int(tok) for tok in spec_str.replace("-", ",").split(",") if tok])
    options = RenderOptions(width=args.width, labels=not args.no_labels, chains=chains)
    render_svg(config, args.out, options)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angledev",
        description="Max-min right-angle deviation of planar point sets: "
                    "scoring, certificates, witnesses, constructions, and search.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_k(p, default=4):
        p.add_argument("--k", type=int, default=default, help="subset size (default %(default)s)")

    def add_budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max number of subsets to enumerate")

    p = sub.add_parser("score", help="compute gamma/delta for a points file")
    p.add_argument("points")
    add_k(p)
    add_budget(p)
    p.add_argument("--mode", choices=("pruned", "oracle"), default="pruned")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("cert", help="generate or verify covering certificates")
    certsub = p.add_subparsers(dest="cert_command", required=True)

    pg = certsub.add_parser("generate", help="group all k-subsets under their argmin angles")
    pg.add_argument("points")
    add_k(pg)
    add_budget(pg)
    pg.add_argument("--out", help="write JSON here (default: print table)")
    pg.set_defaults(func=_cmd_cert_generate)

    pv = certsub.add_parser("verify", help="verify a certificate against a points file")
    pv.add_argument("points")
    pv.add_argument("certificate",
                    help="certificate JSON path, or 'builtin:record10' for the bundled table")
    pv.add_argument("--tol", type=float, default=DEFAULT_VERIFY_TOL,
                    help="per-angle tolerance in degrees (default %(default)s)")
    pv.set_defaults(func=_cmd_cert_verify)

    p = sub.add_parser("witness", help="constructive lower-bound witnesses")
    witsub = p.add_subparsers(dest="witness_command", required=True)

    pm = witsub.add_parser("monotone", help="direction-gap + monotone chain witness")
    pm.add_argument("points")
    add_k(pm)
    pm.set_defaults(func=_cmd_witness_monotone)

    pb = witsub.add_parser("binchain", help="pigeonhole bin-chain witness")
    pb.add_argument("points")
    add_k(pb)
    pb.add_argument("--bins", type=int, default=4, help="number of direction bins")
    pb.add_argument("--rotate-gap", action="store_true",
                    help="rotate a direction gap over the vertical axis first "
                         "(ensures distinct x-coordinates)")
    pb.set_defaults(func=_cmd_witness_binchain)

    p = sub.add_parser("construct", help="emit a built-in configuration")
    p.add_argument("name", choices=("seven", "cluster", "circle", "szekeres",
                                    "record10", "record11"))
    p.add_argument("--scale", type=float, default=1e6,
                   help="cluster column spacing, or szekeres base R")
    p.add_argument("--count", type=int, default=0,
                   help="circle point count, or szekeres truncation size")
    p.add_argument("--levels", type=int, default=3, help="szekeres levels t (2^t points)")
    add_k(p, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("anneal", help="lattice simulated annealing")
    p.add_argument("--n", type=int, required=True)
    add_k(p)
    p.add_argument("--grid", type=int, default=100)
    p.add_argument("--iterations", type=int, default=200_000)
    p.add_argument("--t-initial", type=float, default=10.0)
    p.add_argument("--cooling", type=float, default=0.999)
    p.add_argument("--relocate-prob", type=float, default=0.2)
    p.add_argument("--local-radius", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write 'iter T gamma_current gamma_best' lines here")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_anneal)

    p = sub.add_parser("refine", help="gradient-based continuous polish")
    p.add_argument("points")
    add_k(p)
    add_budget(p)
    p.add_argument("--betas", type=float, nargs="+", default=[1e2, 1e3, 1e4])
    p.add_argument("--fd-step", type=float, default=1e-6)
    p.add_argument("--max-iters", type=int, default=100)
    p.add_argument("--min-rel-improvement", type=float, default=1e-4)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_refine)

    p = sub.add_parser("render", help="draw a configuration as SVG")
    p.add_argument("points")
    p.add_argument("--out", required=True)
    p.add_argument("--chain", action="append",
                   help="comma- or dash-separated index path; repeatable, "
                        "styles cycle dashed/dotted/dash-dot")
    p.add_argument("--width", type=float, default=480.0)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AngleDevError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

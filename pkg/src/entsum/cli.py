"""Command-line frontend: evaluate, search, sample, bounds, verify.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 dimension error, 4 invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .distribution import marker_values, sample_distribution, sample_values
from .errors import (
    ArityMismatch,
    DimensionMismatch,
    EntsumError,
    InvalidArity,
    InvalidConfig,
    InvalidM,
    InvalidSubset,
    LengthMismatch,
    NormOutOfTolerance,
    ParseError,
    UnknownName,
)
from .measures import (
    MeasureKind,
    global_measure,
    marginal_mixedness_report,
    meyer_wallach_q,
    scott_q_m,
    upper_bound,
)
from .search import InitialState, MoveRule, SearchConfig, hill_climb, multi_restart
from .states import catalog_state, load_state, save_state
from .verify import run_verification

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_CONFIG = 4

KINDS = (MeasureKind.LINEAR, MeasureKind.VON_NEUMANN,
         MeasureKind.RENYI_INF, MeasureKind.NEGATIVITY)

KIND_LABEL = {
    MeasureKind.LINEAR: "E_L",
    MeasureKind.VON_NEUMANN: "E_VN",
    MeasureKind.RENYI_INF: "E_R",
    MeasureKind.NEGATIVITY: "E_N",
}


def _default_out_dir(args) -> Path:
    out = args.out_dir or os.environ.get("ENTSUM_OUT_DIR") or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_manifest(out_dir: Path, name: str, config: dict, seed, started: float) -> None:
    manifest = {
        "command": " ".join(sys.argv),
        "config": config,
        "seed": seed,
        "version": __version__,
        "duration_seconds": round(time.time() - started, 3),
    }
    (out_dir / name).write_text(json.dumps(manifest, indent=1) + "\n")


def _load_input_state(args):
    if getattr(args, "catalog", None):
        return catalog_state(args.catalog), args.catalog
    state = load_state(args.file)
    return state, Path(args.file).stem


def cmd_evaluate(args) -> int:
    state, name = _load_input_state(args)
    print(f"state: {name}  qubits: {state.n}")
    kinds = KINDS if args.all else (MeasureKind.parse(args.kind),)
    for kind in kinds:
        report = global_measure(state, kind)
        print(f"{KIND_LABEL[kind]:>5} = {report.total:.9g}")
        if args.per_bipartition:
            for b, v in report.per_bipartition:
                print(f"       {str(b):>12}  {v:.9g}")
        if args.json:
            out = Path(args.json)
            stem = out.stem if len(kinds) == 1 else f"{out.stem}_{kind.value}"
            out.with_name(stem + out.suffix).write_text(report.to_json() + "\n")
    if args.all:
        print(f"    Q = {meyer_wallach_q(state):.9g}")
        for m in range(1, state.n // 2 + 1):
            print(f"  Q_{m} = {scott_q_m(state, m):.9g}")
    if args.mixedness:
        for summary in marginal_mixedness_report(state, args.mixedness):
            print(
                f"m={summary.m}: all_maximally_mixed={summary.all_maximally_mixed} "
                f"max_frobenius_dev={summary.max_frobenius_deviation:.3e} "
                f"S_L[{summary.linear[0]:.9g},{summary.linear[1]:.9g}] "
                f"S_VN[{summary.von_neumann[0]:.9g},{summary.von_neumann[1]:.9g}] "
                f"S_Re[{summary.renyi_inf[0]:.9g},{summary.renyi_inf[1]:.9g}]"
            )
    return EXIT_OK


def cmd_search(args) -> int:
    started = time.time()
    config = SearchConfig(
        n=args.n,
        kind=MeasureKind.parse(args.kind),
        move_rule=MoveRule(args.move_rule),
        delta_init=args.delta_init,
        rejection_window=args.window,
        delta_floor=args.floor,
        seed=args.seed,
        initial_state=InitialState(args.init) if not args.initial_file else InitialState.FILE,
        initial_file=args.initial_file,
    )
    config.validate()
    out_dir = _default_out_dir(args)
    if args.restarts > 1:
        best, summary = multi_restart(config, args.restarts, workers=args.threads)
        for row in summary:
            print(f"seed={row['seed']} final={row['final_objective']:.9g} "
                  f"proposals={row['total_proposals']}")
        (out_dir / "restarts.json").write_text(json.dumps(summary, indent=1) + "\n")
    else:
        best = hill_climb(config)
    print(f"best seed={best.config.seed} final {KIND_LABEL[best.config.kind]} = "
          f"{best.final_objective:.9g} (bound {upper_bound(best.config.kind, args.n):.9g})")
    save_state(best.final_state, out_dir / "final.state")
    (out_dir / "trace.json").write_text(best.to_json() + "\n")
    (out_dir / "convergence.csv").write_text(best.convergence_csv())
    if args.plot:
        from .plotting import plot_convergence

        plot_convergence(best, out_dir / "convergence.png")
    _write_manifest(out_dir, "search.manifest.json", config.as_dict(), args.seed, started)
    return EXIT_OK


def cmd_sample(args) -> int:
    started = time.time()
    kind = MeasureKind.parse(args.kind)
    out_dir = _default_out_dir(args)
    values = sample_values(args.n, kind, args.samples, args.seed, workers=args.threads)
    hist = sample_distribution(args.n, kind, args.samples, bins=args.bins,
                               seed=args.seed, workers=args.threads)
    (out_dir / "histogram.csv").write_text(hist.to_csv())
    (out_dir / "histogram.json").write_text(hist.to_json() + "\n")
    median = float(np.median(values))
    print(f"n={args.n} {KIND_LABEL[kind]}: {args.samples} samples, "
          f"median={median:.9g} max={values.max():.9g} "
          f"bound={upper_bound(kind, args.n):.9g}")
    markers = []
    if args.markers:
        markers = marker_values(args.n, kind, args.markers.split(","))
        lines = ["name,value"]
        for name, value in markers:
            side = "above" if value > median else "below"
            print(f"marker {name} = {value:.9g} ({side} median)")
            lines.append(f"{name},{value:.12g}")
        (out_dir / "markers.csv").write_text("\n".join(lines) + "\n")
    if args.plot:
        from .plotting import plot_histogram

        plot_histogram(hist, markers, out_dir / "histogram.png")
    _write_manifest(
        out_dir, "sample.manifest.json",
        {"n": args.n, "kind": kind.value, "samples": args.samples,
         "bins": args.bins, "markers": args.markers},
        args.seed, started)
    return EXIT_OK


def _parse_n_range(token: str) -> list[int]:
    if ".." in token:
        lo, hi = token.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(token)]


def cmd_bounds(args) -> int:
    from .reference import TABLE1_BOUNDS

    ns = _parse_n_range(args.n)
    for n in ns:
        if not 2 <= n <= 10:
            raise InvalidConfig(f"bounds support n in 2..10, got {n}")
    failures = 0
    print("n  " + "  ".join(f"{KIND_LABEL[k]:>12}" for k in KINDS))
    for n in ns:
        row = [upper_bound(kind, n) for kind in KINDS]
        print(f"{n}  " + "  ".join(f"{v:>12.9g}" for v in row))
        if args.check:
            if n not in TABLE1_BOUNDS:
                print(f"   (no published row for n={n}; skipped)")
                continue
            for kind, value in zip(KINDS, row):
                expected = TABLE1_BOUNDS[n][kind]
                ok = abs(value - expected) <= 1e-6
                failures += 0 if ok else 1
                print(f"   {'PASS' if ok else 'FAIL'} {KIND_LABEL[kind]} "
                      f"computed={value:.9g} published={expected:.9g}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def cmd_verify(args) -> int:
    results = run_verification(quick=args.quick)
    failed = [r for r in results if not r.passed]
    for r in results:
        print(r.format_row())
    print(f"\n{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        print("failing checks:")
        for r in failed:
            print(f"  {r.name}")
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entsum",
        description="Bipartition-sum entanglement measures: evaluation, "
        "stochastic maximization, and Haar-distribution sampling.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="measure a catalog state or state file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", help="catalog name (GHZ3, W4, HS, BSSB5, PSI6QB, REN4, VN7)")
    src.add_argument("--file", help="state file (.state text or .json)")
    p.add_argument("--kind", default="vn", help="linear | vn | renyi | neg")
    p.add_argument("--all", action="store_true", help="all four measures plus Q and Q_m")
    p.add_argument("--per-bipartition", action="store_true")
    p.add_argument("--mixedness", type=int, metavar="M",
                   help="report marginal mixedness up to subset size M")
    p.add_argument("--json", help="write MeasureReport JSON here")
    p.set_defaults(fn=cmd_evaluate)

    p = sub.add_parser("search", help="stochastic hill climb for high entanglement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", default="vn")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--delta-init", type=float, default=0.1)
    p.add_argument("--window", type=int, default=500)
    p.add_argument("--floor", type=float, default=1e-8)
    p.add_argument("--move-rule", choices=[m.value for m in MoveRule], default="additive")
    p.add_argument("--init", choices=["zero", "haar"], default="zero")
    p.add_argument("--initial-file", help="start from this state file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out-dir")
    p.add_argument("--plot", action="store_true", help="render convergence.png")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("sample", help="Haar-distribution histogram of a measure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", default="vn")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--bins", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--markers", help="comma-separated catalog names or state files")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out-dir")
    p.add_argument("--plot", action="store_true", help="render histogram.png")
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("bounds", help="fully-mixed-marginals upper bounds")
    p.add_argument("--n", required=True, help="a qubit count or a range like 3..7")
    p.add_argument("--check", action="store_true",
                   help="diff against the published table")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="run the reproduction checklist")
    p.add_argument("--quick", action="store_true",
                   help="closed-form checks only, skip search-based ones")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, NormOutOfTolerance, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, LengthMismatch, InvalidSubset,
            InvalidArity, InvalidM, ArityMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (InvalidConfig, EntsumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

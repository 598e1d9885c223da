"""Command-line front end: generate, stats, plan, and sweep workflows.

All commands are file-based and deterministic: identical flags, config,
and input produce byte-identical output files.  Outputs are plot-ready
CSV (or JSON mirroring the CSV columns); nothing is rendered here.
"""

import argparse
import csv
import json
import sys
from pathlib import Path

from .concentration import concentration_curve, geo_concentration_profile
from .errors import UnknownIdError
from .placement import estimate_target_cells, partition_cells
from .planning import (
    CASE_ASSUMED_LOCATION,
    CASE_LIMITED_COVERAGE,
    CASE_PERFECT,
    DEFAULT_COVERAGE_GRID,
    DEFAULT_LIMITED_COVERAGE,
    CostBreakdown,
    sweep_coverage,
    titles_by_popularity,
    traffic_vs_broadcast_ratio,
)
from .synth import SynthParams, generate
from .trace import parse_trace, write_trace

MODE_CASES = {
    "perfect": CASE_PERFECT,
    "assumed": CASE_ASSUMED_LOCATION,
    "limited": CASE_LIMITED_COVERAGE,
}

DEFAULT_RATIO_GRID = tuple(round(0.05 * k, 2) for k in range(0, 21))
DEFAULT_SWEEP_RANKS = (1, 10, 100, 1000)

_GEN_INT_KEYS = ("n_users", "n_titles", "n_cells", "n_visits",
                 "max_cells_per_user", "seed")
_GEN_FLOAT_KEYS = ("title_zipf_exponent", "user_zipf_exponent")
_GEN_REQUIRED_KEYS = ("n_users", "n_titles", "n_cells", "n_visits")


def _float_list(text):
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers, got {text!r}"
        ) from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prepush",
        description="Trace-driven planning for content pre-push broadcasting.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser(
        "gen", help="generate a synthetic trace file from workload parameters"
    )
    gen.add_argument("--output", required=True, help="trace CSV to write")
    gen.add_argument(
        "--config",
        help="key=value file with SynthParams fields; flags override it",
    )
    gen.add_argument("--n-users", type=int)
    gen.add_argument("--n-titles", type=int)
    gen.add_argument("--n-cells", type=int)
    gen.add_argument("--n-visits", type=int)
    gen.add_argument("--title-zipf-exponent", type=float)
    gen.add_argument("--user-zipf-exponent", type=float)
    gen.add_argument(
        "--geo-profile", type=_float_list,
        help="comma-separated per-rank cell shares, e.g. 0.58,0.22,0.09",
    )
    gen.add_argument("--max-cells-per-user", type=int)
    gen.add_argument("--seed", type=int)
    gen.set_defaults(handler=_handle_gen)

    stats = sub.add_parser(
        "stats",
        help="write user/title/cell concentration curves and the geo profile",
    )
    stats.add_argument("--input", required=True, help="trace CSV to read")
    stats.add_argument("--output", required=True, help="output directory")
    stats.add_argument("--format", choices=("csv", "json"), default="csv")
    stats.add_argument(
        "--max-rank", type=int, default=10,
        help="cell ranks reported in the geo profile (default 10)",
    )
    stats.set_defaults(handler=_handle_stats)

    plan = sub.add_parser(
        "plan",
        help="write per-title cost breakdowns and the traffic-vs-ratio curve",
    )
    plan.add_argument("--input", required=True, help="trace CSV to read")
    plan.add_argument("--output", required=True, help="output directory")
    plan.add_argument("--mode", choices=sorted(MODE_CASES), default="perfect")
    plan.add_argument(
        "--coverage", type=float, default=DEFAULT_LIMITED_COVERAGE,
        help="oracle coverage for mode limited (default 0.2)",
    )
    plan.add_argument(
        "--ratio-grid", type=_float_list,
        default=DEFAULT_RATIO_GRID,
        help="broadcast ratios for the traffic curve (default 0,0.05,...,1)",
    )
    plan.add_argument("--format", choices=("csv", "json"), default="csv")
    plan.set_defaults(handler=_handle_plan)

    sweep = sub.add_parser(
        "sweep", help="write per-title cost-vs-coverage sweeps with optima"
    )
    sweep.add_argument("--input", required=True, help="trace CSV to read")
    sweep.add_argument("--output", required=True, help="output directory")
    sweep.add_argument(
        "--coverage-grid", type=_float_list, default=DEFAULT_COVERAGE_GRID,
        help="coverage fractions to evaluate (default 0.05,0.10,...,1.0)",
    )
    sweep.add_argument(
        "--titles",
        help="comma-separated popularity ranks (all-numeric tokens) or "
        "title ids; default ranks 1,10,100,1000 where available",
    )
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.set_defaults(handler=_handle_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (OSError, ValueError, UnknownIdError) as exc:
        message = exc.args[0] if isinstance(exc, UnknownIdError) else exc
        print(f"prepush: error: {message}", file=sys.stderr)
        return 1


def _read_config(path):
    values = {}
    for line_no, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}: line {line_no}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def _gen_params(args, parser_error):
    merged = {}
    if args.config:
        for key, text in _read_config(args.config).items():
            if key in _GEN_INT_KEYS:
                merged[key] = int(text)
            elif key in _GEN_FLOAT_KEYS:
                merged[key] = float(text)
            elif key == "geo_profile":
                merged[key] = tuple(float(t) for t in text.split(","))
            else:
                raise ValueError(f"{args.config}: unknown key {key!r}")
    for key in _GEN_INT_KEYS + _GEN_FLOAT_KEYS + ("geo_profile",):
        value = getattr(args, key)
        if value is not None:
            merged[key] = value
    missing = [k for k in _GEN_REQUIRED_KEYS if k not in merged]
    if missing:
        parser_error(f"gen requires {', '.join(missing)} via flags or --config")
    return SynthParams(**merged)


def _handle_gen(args):
    params = _gen_params(args, build_parser().error)
    dataset = generate(params)
    write_trace(dataset, args.output)
    print(
        f"wrote {dataset.total_visits} visits "
        f"({dataset.n_users} users, {dataset.n_titles} titles) "
        f"to {args.output}"
    )
    return 0


def _format_value(value):
    return repr(value) if isinstance(value, float) else value


def _write_rows(outdir, stem, fmt, header, rows):
    """Write one table as CSV or as JSON rows mirroring the CSV columns."""
    path = outdir / f"{stem}.{fmt}"
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format_value(v) for v in row])
    else:
        payload = [dict(zip(header, row)) for row in rows]
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    return path


def _handle_stats(args):
    dataset = parse_trace(args.input)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)

    for kind in ("user", "title", "cell"):
        curve = concentration_curve(dataset, kind)
        path = _write_rows(
            outdir, f"{kind}_curve", args.format,
            ("fraction", "share"), curve.points,
        )
        print(f"wrote {path}")

    profile = geo_concentration_profile(dataset, args.max_rank)
    rows = [
        (rank, mean, cum)
        for rank, (mean, cum) in enumerate(
            zip(profile.mean_share_by_rank, profile.cumulative_by_rank),
            start=1,
        )
    ]
    path = _write_rows(
        outdir, "geo_profile", args.format,
        ("rank", "mean_share", "cumulative"), rows,
    )
    print(f"wrote {path}")
    print(f"mean_active_cells={profile.mean_active_cells!r}")
    return 0


def _plan_rows(dataset, case, coverage):
    """Cost breakdown and partition-size rows for every title."""
    breakdown_rows = []
    partition_rows = []
    for title in titles_by_popularity(dataset):
        if case == CASE_PERFECT:
            estimated = frozenset(dataset.title_cell_visits[title])
            row_coverage = 1.0
        else:
            row_coverage = 1.0 if case == CASE_ASSUMED_LOCATION else coverage
            estimated = estimate_target_cells(dataset, title, row_coverage)
        part = partition_cells(dataset, title, estimated)
        breakdown = CostBreakdown(
            title_id=title,
            case=case,
            coverage=row_coverage,
            broadcast_transmissions=len(part.estimated),
            missed_visits=part.missed_visits,
            total_transmissions=len(part.estimated) + part.missed_visits,
        )
        breakdown_rows.append(
            (
                breakdown.title_id,
                breakdown.case,
                breakdown.coverage,
                breakdown.broadcast_transmissions,
                breakdown.missed_visits,
                breakdown.total_transmissions,
            )
        )
        partition_rows.append(
            (
                title,
                len(part.estimated),
                len(part.actual),
                len(part.hit),
                len(part.missing),
                len(part.mistaken),
                part.missed_visits,
            )
        )
    return breakdown_rows, partition_rows


def _handle_plan(args):
    dataset = parse_trace(args.input)
    case = MODE_CASES[args.mode]
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)

    breakdown_rows, partition_rows = _plan_rows(dataset, case, args.coverage)
    path = _write_rows(
        outdir, "breakdowns", args.format,
        ("title_id", "case", "coverage", "broadcast_transmissions",
         "missed_visits", "total_transmissions"),
        breakdown_rows,
    )
    print(f"wrote {path}")
    path = _write_rows(
        outdir, "partitions", args.format,
        ("title_id", "estimated", "actual", "hit", "missing", "mistaken",
         "missed_visits"),
        partition_rows,
    )
    print(f"wrote {path}")

    curve = traffic_vs_broadcast_ratio(
        dataset, case, args.ratio_grid, coverage=args.coverage
    )
    baseline = dataset.total_visits
    rows = [(p, total, total / baseline) for p, total in curve]
    path = _write_rows(
        outdir, "traffic_curve", args.format,
        ("broadcast_ratio", "total_transmissions", "fraction_of_baseline"),
        rows,
    )
    print(f"wrote {path}")
    return 0


def _select_sweep_titles(dataset, titles_arg):
    ordered = titles_by_popularity(dataset)
    if titles_arg is None:
        chosen = []
        for rank in DEFAULT_SWEEP_RANKS:
            if rank <= len(ordered):
                chosen.append(ordered[rank - 1])
            else:
                print(
                    f"skipping default rank {rank}: trace has only "
                    f"{len(ordered)} titles",
                    file=sys.stderr,
                )
        return chosen
    tokens = [tok.strip() for tok in titles_arg.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("--titles must name at least one rank or title id")
    if all(tok.isdigit() for tok in tokens):
        chosen = []
        for tok in tokens:
            rank = int(tok)
            if not 1 <= rank <= len(ordered):
                raise ValueError(
                    f"rank {rank} out of range (trace has {len(ordered)} titles)"
                )
            chosen.append(ordered[rank - 1])
        return chosen
    for tok in tokens:
        if tok not in dataset.title_visits:
            raise UnknownIdError("title", tok)
    return tokens


def _handle_sweep(args):
    dataset = parse_trace(args.input)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)

    optima_rows = []
    for title in _select_sweep_titles(dataset, args.titles):
        sweep = sweep_coverage(dataset, title, args.coverage_grid)
        path = _write_rows(
            outdir, f"sweep_{title}", args.format,
            ("coverage", "total_transmissions"),
            list(zip(sweep.grid, sweep.costs)),
        )
        print(f"wrote {path}")
        optima_rows.append(
            (
                title,
                sweep.optimal_coverage,
                sweep.optimal_cost,
                sweep.unicast_baseline,
            )
        )
    path = _write_rows(
        outdir, "sweep_optima", args.format,
        ("title_id", "optimal_coverage", "optimal_cost", "unicast_baseline"),
        optima_rows,
    )
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

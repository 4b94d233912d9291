"""Command-line front end.

Subcommands: ci (interval from a data file), tables (exact population
tables), coverage / power (Monte Carlo studies to CSV), samplesize.
Output is CSV by default (--pretty adds aligned human output for ci);
all output is byte-deterministic given identical flags and seeds.

Exit codes: 0 success, 1 malformed input (bad flags, unreadable or
non-numeric data, too few values), 2 estimation failure (ties or a
degenerate variance quadratic).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import distributions, estimation, inference, measures, simulation
from .estimation import DEFAULT_BANDWIDTH_A

_TABLE1_RS = (0.3, 1.0 / 3.0, 0.35, 0.4)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1 (malformed input)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="qshape",
                     description="Quantile-based kurtosis, peakedness and "
                                 "tail weight: estimates, exact tables, and "
                                 "Monte Carlo studies.")
    sub = parser.add_subparsers(dest="command", required=True)

    ci = sub.add_parser("ci", parents=[], help="confidence interval from a data file")
    ci.add_argument("file", help="newline-delimited numeric file (optional header line)")
    ci.add_argument("--p", type=float, default=None,
                    help="outer tail area (default: matched to --r)")
    ci.add_argument("--q", type=float, default=None,
                    help="middle tail area; if given, peakedness and tail-weight "
                         "intervals are reported too")
    ci.add_argument("--r", type=float, default=1.0 / 3.0, help="inner tail area")
    ci.add_argument("--alpha", type=float, default=0.05, help="two-sided miss probability")
    ci.add_argument("--bandwidth-a", type=float, default=DEFAULT_BANDWIDTH_A,
                    help="sparsity bandwidth constant a in b = a*n^(-1/5)")
    ci.add_argument("--pretty", action="store_true", help="aligned human-readable output")

    tables = sub.add_parser("tables", help="exact population tables to CSV")
    tables.add_argument("which", type=int, choices=(1, 2, 3), help="table number")
    tables.add_argument("--p", type=float, default=None, help="outer tail area (table 2)")
    tables.add_argument("--q", type=float, default=None, help="middle tail area (table 2)")
    tables.add_argument("--r", type=float, default=None, help="inner tail area")
    tables.add_argument("--precise", action="store_true",
                        help="full precision instead of 3 decimals")

    coverage = sub.add_parser("coverage", help="interval coverage study to CSV")
    coverage.add_argument("--model", required=True,
                          help="model spec, e.g. normal, beta(0.5,0.5), mixt(0.5,3)")
    coverage.add_argument("--n", default="400",
                          help="comma-separated sample sizes, e.g. 100,400,1000")
    coverage.add_argument("--alpha", type=float, default=0.05)
    coverage.add_argument("--reps", type=int, default=2000)
    coverage.add_argument("--r", type=float, default=1.0 / 3.0)
    coverage.add_argument("--p", type=float, default=None)
    coverage.add_argument("--seed", type=int, default=0)
    coverage.add_argument("--bandwidth-a", type=float,
                          default=DEFAULT_BANDWIDTH_A)

    power = sub.add_parser("power", help="peakedness-test power study to CSV")
    power.add_argument("--family", required=True, choices=("beta", "tmix"),
                       help="beta: Beta(b,b); tmix: half-half t(1/2) mixture at lag delta")
    power.add_argument("--grid", required=True,
                       help="comma-separated parameter grid, e.g. 0.333,1,3")
    power.add_argument("--n", type=int, default=200)
    power.add_argument("--reps", type=int, default=1000)
    power.add_argument("--q", type=float, default=0.25)
    power.add_argument("--r", type=float, default=0.375)
    power.add_argument("--level", type=float, default=0.05)
    power.add_argument("--pi0", type=float, default=None,
                       help="null peakedness (default: the flat-center value (1-2q)/(1-2r))")
    power.add_argument("--seed", type=int, default=0)
    power.add_argument("--bandwidth-a", type=float,
                       default=DEFAULT_BANDWIDTH_A)

    size = sub.add_parser("samplesize", help="sample size for a target relative width")
    size.add_argument("--alpha", type=float, default=0.05)
    size.add_argument("--target-rw", type=float, required=True,
                      help="desired relative interval width")
    size.add_argument("--max-rw", type=float, default=None,
                      help="worst-case asymptotic relative width "
                           "(default: catalogue maximum excluding the skew-t models)")
    return parser


def read_data_file(path: str) -> np.ndarray:
    """Load a newline-delimited numeric file; one optional header line allowed."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    values = []
    for i, ln in enumerate(ln for ln in lines if ln):
        try:
            values.append(float(ln))
        except ValueError:
            if i == 0:
                continue  # header line
            raise ValueError(f"non-numeric line in {path}: {ln!r}") from None
    if len(values) < estimation.MIN_SAMPLE:
        raise ValueError(f"insufficient data: need at least "
                         f"{estimation.MIN_SAMPLE} values, got {len(values)}")
    return np.sort(np.asarray(values, dtype=float))


def _ci_row(name, data, lo_area, hi_area, alpha, bandwidth_a):
    constants = estimation.vst_constants_estimated(data, lo_area, hi_area,
                                                   bandwidth_a=bandwidth_a)
    estimate = estimation.kurtosis_estimate(data, lo_area, hi_area)
    ci = inference.confidence_interval(constants, data.size, estimate, alpha)
    return name, ci, constants


def cmd_ci(args) -> int:
    data = read_data_file(args.file)
    r = args.r
    p = measures.matched_p(r) if args.p is None else args.p
    if not 0.0 < p < r < 0.5:
        raise ValueError(f"need 0 < p < r < 1/2, got p={p}, r={r}")
    if args.q is not None and not p < args.q < r:
        raise ValueError(f"need p < q < r, got p={p}, q={args.q}, r={r}")

    rows = [_ci_row("kappa", data, p, r, args.alpha, args.bandwidth_a)]
    if args.q is not None:
        rows.append(_ci_row("pi", data, args.q, r, args.alpha, args.bandwidth_a))
        rows.append(_ci_row("tau", data, p, args.q, args.alpha, args.bandwidth_a))

    if args.pretty:
        print(f"n            {data.size}")
        for name, ci, constants in rows:
            print(f"{name:<12} {ci.estimate:.4f}")
            print(f"  {100 * ci.level:.0f}% CI      [{ci.lower:.4f}, {ci.upper:.4f}]")
            print(f"  rel. width  {ci.relative_width:.4f}")
            print(f"  a0, a1, a2  {constants.a0:.4f}, {constants.a1:.4f}, "
                  f"{constants.a2:.4f}")
    else:
        print("measure,n,estimate,lower,upper,level,relative_width,a0,a1,a2")
        for name, ci, constants in rows:
            print(f"{name},{data.size},{ci.estimate:.6f},{ci.lower:.6f},"
                  f"{ci.upper:.6f},{ci.level:.4f},{ci.relative_width:.6f},"
                  f"{constants.a0:.6f},{constants.a1:.6f},{constants.a2:.6f}")
    return 0


def _fmt(x: float, precise: bool) -> str:
    return f"{x:.12g}" if precise else f"{x:.3f}"


def cmd_tables(args) -> int:
    models = distributions.catalogue()
    fmt = lambda x: _fmt(x, args.precise)
    if args.which == 1:
        rs = (args.r,) if args.r is not None else _TABLE1_RS
        print("model," + ",".join(f"r{r:.4f}" for r in rs))
        for label, model in models:
            cells = [fmt(measures.kurtosis_ratio(model, measures.matched_p(r), r))
                     for r in rs]
            print(label + "," + ",".join(cells))
    elif args.which == 2:
        p = 0.125 if args.p is None else args.p
        q = 0.25 if args.q is None else args.q
        r = 0.375 if args.r is None else args.r
        triple = measures.QuantileTriple(p, q, r)
        print("model,pi,tau,kappa")
        for label, model in models:
            s = measures.shape_summary(model, triple)
            print(f"{label},{fmt(s.pi)},{fmt(s.tau)},{fmt(s.kappa)}")
    else:
        r = 1.0 / 3.0 if args.r is None else args.r
        p = measures.matched_p(r)
        print("model,kappa,a0,a1,a2,w_asym,rw_asym")
        for label, model in models:
            kappa = measures.kurtosis_ratio(model, p, r)
            constants = estimation.vst_constants_theoretical(model, p, r)
            w, rw = measures.asymptotic_width(constants, kappa)
            print(f"{label},{fmt(kappa)},{fmt(constants.a0)},{fmt(constants.a1)},"
                  f"{fmt(constants.a2)},{fmt(w)},{fmt(rw)}")
    return 0


def cmd_coverage(args) -> int:
    try:
        sizes = [int(part) for part in args.n.split(",") if part]
    except ValueError:
        raise ValueError(f"bad --n list: {args.n!r}") from None
    if not sizes:
        raise ValueError("--n must name at least one sample size")
    distributions.parse_model(args.model)  # validate the model string up front
    reports = []
    for n in sizes:
        cfg = simulation.StudyConfig(model=args.model, n=n, reps=args.reps,
                                     r=args.r, p=args.p, alpha=args.alpha,
                                     master_seed=args.seed,
                                     bandwidth_a=args.bandwidth_a)
        reports.append(simulation.coverage_study(cfg))
    sys.stdout.write(simulation.coverage_csv(reports))
    return 0


def _beta_family(b: float) -> distributions.Distribution:
    return distributions.Beta(b, b)


def _tmix_family(delta: float) -> distributions.Distribution:
    return distributions.shifted_t_mixture(0.5, delta)


_FAMILIES = {
    "beta": (_beta_family, lambda b: b / (b + 1.0)),
    "tmix": (_tmix_family, lambda d: d),
}


def cmd_power(args) -> int:
    try:
        grid = [float(part) for part in args.grid.split(",") if part]
    except ValueError:
        raise ValueError(f"bad --grid list: {args.grid!r}") from None
    if not grid:
        raise ValueError("--grid must name at least one parameter")
    family, x_of = _FAMILIES[args.family]
    pi0 = args.pi0
    if pi0 is None:
        pi0 = (1.0 - 2.0 * args.q) / (1.0 - 2.0 * args.r)
    points = simulation.power_study(family, grid, n=args.n, reps=args.reps,
                                    q=args.q, r=args.r, pi0=pi0,
                                    level=args.level, master_seed=args.seed,
                                    bandwidth_a=args.bandwidth_a)
    sys.stdout.write(simulation.power_csv(points, x_of_parameter=x_of))
    return 0


def default_max_rw_asym(r: float = 1.0 / 3.0) -> float:
    """Worst-case asymptotic relative width over the catalogue, excluding the
    skew-t models (whose widths grow without useful bound)."""
    p = measures.matched_p(r)
    worst = 0.0
    for label, model in distributions.catalogue():
        if label.startswith("skewt"):
            continue
        constants = estimation.vst_constants_theoretical(model, p, r)
        kappa = measures.kurtosis_ratio(model, p, r)
        _, rw = measures.asymptotic_width(constants, kappa)
        worst = max(worst, rw)
    return worst


def cmd_samplesize(args) -> int:
    max_rw = args.max_rw if args.max_rw is not None else default_max_rw_asym()
    print(measures.required_sample_size(args.alpha, args.target_rw, max_rw))
    return 0


_COMMANDS = {
    "ci": cmd_ci,
    "tables": cmd_tables,
    "coverage": cmd_coverage,
    "power": cmd_power,
    "samplesize": cmd_samplesize,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except estimation.EstimationFailure as exc:
        print(f"qshape: estimation failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qshape: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

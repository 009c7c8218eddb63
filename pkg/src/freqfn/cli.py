"""Command-line front end.

Subcommands: eval, profile, scan, density, band, discont, check, corpus,
plot. Numeric flags parse as exact rationals (`p/q` or integers); nothing
numeric passes through floating point. Exit codes: 0 success, 1 usage or
input error, 2 a check suite found a violated invariant.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import analysis, output
from .corpus import CORPUS_IDS, CorpusSpec, generate
from .freq import Attainment, aux_frequency, frequency
from .oracle import oracle_eval
from .profile import build_profile, eval_average, local_limit
from .rational import (
    Rat,
    RationalFormatError,
    format_rational,
    inv_pow2,
    parse_rational,
    sample_rationals,
)
from .stepfn import StepFn, StepFnError, parse_stepfn

__all__ = ["main", "run"]

CHECK_SUITES = (
    "attained-witness",
    "small-radius-limit",
    "zeros-near-jumps",
    "nonlebesgue-near-jumps",
    "weak-type",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _rat(text: str) -> Rat:
    try:
        return parse_rational(text)
    except RationalFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _aux_pair(text: str) -> tuple[int, int]:
    try:
        k_text, l_text = text.split(",")
        k, l = int(k_text), int(l_text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected k,l as two integers") from None
    if k < 1 or l < 1:
        raise argparse.ArgumentTypeError("k and l must be positive")
    return k, l


def _load_fn(path: str) -> StepFn:
    with open(path, "rb") as handle:
        return parse_stepfn(handle.read())


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _build_parser() -> _Parser:
    parser = _Parser(prog="freqfn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="maximal value and frequency at one point")
    p.add_argument("--fn", required=True, help="step-function file")
    p.add_argument("--x", required=True, type=_rat, help="query point, p/q")
    p.add_argument("--aux", type=_aux_pair, metavar="k,l", help="also print the auxiliary approximant")
    p.add_argument("--oracle", action="store_true", help="also print the grid-oracle view")
    p.add_argument("--r-max", type=_rat, default=None, help="oracle radius limit")
    p.add_argument("--grid-count", type=int, default=4096, help="oracle grid size")

    p = sub.add_parser("profile", help="emit the radius profile at one point as CSV")
    p.add_argument("--fn", required=True)
    p.add_argument("--x", required=True, type=_rat)
    p.add_argument("--out", default=None)

    p = sub.add_parser("scan", help="maximal value and frequency over a grid")
    p.add_argument("--fn", required=True)
    p.add_argument("--N", required=True, type=_rat)
    p.add_argument("--step", required=True, type=_rat)
    p.add_argument("--out", default=None)

    p = sub.add_parser("density", help="density of {T f(x) <= |x|/C} on [-N, N]")
    p.add_argument("--fn", required=True)
    p.add_argument("--C", required=True, type=_rat)
    p.add_argument("--N", required=True, type=_rat)
    p.add_argument("--step", required=True, type=_rat)
    p.add_argument("--out", default=None)

    p = sub.add_parser("band", help="extent of the band |x|/(2C) <= T f(x) <= |x|/C")
    p.add_argument("--fn", required=True)
    p.add_argument("--C", required=True, type=_rat)
    p.add_argument("--N", required=True, type=_rat)
    p.add_argument("--step", required=True, type=_rat)
    p.add_argument("--out", default=None)

    p = sub.add_parser("discont", help="certified discontinuities of the maximal function")
    p.add_argument("--fn", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("check", help="run an invariant suite against one function")
    p.add_argument("--suite", required=True, choices=CHECK_SUITES)
    p.add_argument("--fn", required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=12, help="radii 2^-j for j = 1..depth")
    p.add_argument("--lam", type=_rat, default=Rat(1, 2), help="weak-type level")
    p.add_argument("--N", type=_rat, default=Rat(16))
    p.add_argument("--step", type=_rat, default=Rat(1, 16))

    p = sub.add_parser("corpus", help="write a corpus function in the file format")
    p.add_argument("--id", required=True, choices=CORPUS_IDS)
    p.add_argument("--K", type=int, default=None, help="truncation level")
    p.add_argument("--k", type=int, default=None, help="height parameter for f4")
    p.add_argument("--n-min", type=int, default=None, help="first bump index for f3")
    p.add_argument("--eps", type=_rat, default=None, help="sparsity exponent for sparse")
    p.add_argument("--M-max", type=int, default=None, help="last bump index for sparse")
    p.add_argument("--out", default=None)

    p = sub.add_parser("plot", help="render a scan as SVG (plus sibling CSV)")
    p.add_argument("--kind", choices=("line", "density"), default="line")
    p.add_argument("--fn", required=True)
    p.add_argument("--N", type=_rat, default=None, help="line: domain bound")
    p.add_argument("--Ns", default=None, help="density: comma-separated domain bounds")
    p.add_argument("--C", type=_rat, default=Rat(2))
    p.add_argument("--step", required=True, type=_rat)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("svg", "csv"), default="svg")
    return parser


def _cmd_eval(args) -> int:
    f = _load_fn(args.fn)
    res = frequency(f, args.x)
    lines = [
        f"maximal={format_rational(res.maximal)}",
        f"frequency={format_rational(res.frequency)}",
        f"status={res.status.value}",
    ]
    if res.status is Attainment.ATTAINED:
        lines.append(f"witness={format_rational(res.witness)}")
    if args.aux is not None:
        k, l = args.aux
        lines.append(f"aux_frequency={format_rational(aux_frequency(f, args.x, k, l))}")
    if args.oracle:
        r_max = args.r_max
        if r_max is None:
            far = max((abs(e - args.x) for e in f.breakpoints()), default=Rat(0))
            r_max = far + 1
        view = oracle_eval(f, args.x, r_max, args.grid_count)
        lines.append(f"oracle_maximal={format_rational(view.approx_maximal)}")
        lines.append(f"oracle_frequency={format_rational(view.approx_frequency)}")
        lines.append(f"oracle_error_bound={format_rational(view.error_bound)}")
    print("\n".join(lines))
    return 0


def _cmd_profile(args) -> int:
    f = _load_fn(args.fn)
    _write_text(args.out, output.render_profile_csv(build_profile(f, args.x)))
    return 0


def _cmd_scan(args) -> int:
    f = _load_fn(args.fn)
    _write_text(args.out, output.render_scan_csv(analysis.scan(f, args.N, args.step)))
    return 0


def _cmd_density(args) -> int:
    f = _load_fn(args.fn)
    report = analysis.level_density(f, args.C, args.N, args.step)
    _write_text(args.out, output.render_scan_csv(report))
    return 0


def _cmd_band(args) -> int:
    f = _load_fn(args.fn)
    report = analysis.band_extent(f, args.C, args.N, args.step)
    _write_text(args.out, output.render_scan_csv(report))
    return 0


def _cmd_discont(args) -> int:
    f = _load_fn(args.fn)
    _write_text(args.out, output.render_certificates_csv(analysis.discontinuities(f)))
    return 0


def _suite_attained_witness(f, args):
    rng = random.Random(args.seed)
    xs = sample_rationals(rng, args.samples, f.support_radius() + 2)
    failures = []
    for x in xs:
        res = frequency(f, x)
        if res.frequency > 0:
            profile = build_profile(f, x)
            if eval_average(profile, res.frequency) != res.maximal:
                failures.append(f"x={format_rational(x)} witness average misses the maximum")
    return len(xs), failures


def _suite_small_radius_limit(f, args):
    rng = random.Random(args.seed)
    xs = sample_rationals(rng, args.samples, f.support_radius() + 2)
    failures = []
    for x in xs:
        res = frequency(f, x)
        if res.frequency == 0 and not f.is_zero:
            profile = build_profile(f, x)
            if local_limit(profile) != res.maximal:
                failures.append(f"x={format_rational(x)} zero frequency without local attainment")
    return len(xs), failures


def _suite_zeros_near_jumps(f, args):
    radii = [inv_pow2(j) for j in range(1, args.depth + 1)]
    failures = []
    total = 0
    for cert in analysis.discontinuities(f):
        found = analysis.zero_frequency_witnesses(f, cert.point, radii)
        total += len(found)
        for r, witness in found:
            if witness is None:
                failures.append(
                    f"b={format_rational(cert.point)} r={format_rational(r)} no zero-frequency point found"
                )
    return total, failures


def _suite_nonlebesgue_near_jumps(f, args):
    radii = [inv_pow2(j) for j in range(1, args.depth + 1)]
    failures = []
    total = 0
    for cert in analysis.discontinuities(f):
        try:
            found = analysis.non_lebesgue_witnesses(f, cert.point, radii)
            total += len(found)
        except analysis.InvariantViolation as exc:
            failures.append(str(exc))
    return total, failures


def _suite_weak_type(f, args):
    failures = []
    try:
        analysis.weak_type_check(f, args.lam, args.N, args.step)
    except analysis.InvariantViolation as exc:
        failures.append(str(exc))
    return 1, failures


_SUITES = {
    "attained-witness": _suite_attained_witness,
    "small-radius-limit": _suite_small_radius_limit,
    "zeros-near-jumps": _suite_zeros_near_jumps,
    "nonlebesgue-near-jumps": _suite_nonlebesgue_near_jumps,
    "weak-type": _suite_weak_type,
}


def _cmd_check(args) -> int:
    f = _load_fn(args.fn)
    total, failures = _SUITES[args.suite](f, args)
    for failure in failures:
        print(f"FAIL {failure}")
    print(f"{args.suite}: {total - len(failures)}/{total} exact")
    return 2 if failures else 0


def _cmd_corpus(args) -> int:
    params = {}
    if args.K is not None:
        params["K"] = args.K
    if args.k is not None:
        params["k"] = args.k
    if args.n_min is not None:
        params["n_min"] = args.n_min
    if args.eps is not None:
        params["eps"] = args.eps
    if args.M_max is not None:
        params["M_max"] = args.M_max
    f = generate(CorpusSpec(args.id, params))
    _write_text(args.out, f.serialize())
    return 0


def _cmd_plot(args) -> int:
    f = _load_fn(args.fn)
    if args.kind == "line":
        if args.N is None:
            raise _UsageError("line plots need --N")
        report = analysis.scan(f, args.N, args.step)
        payload = report
        csv_text = output.render_scan_csv(report)
    else:
        if not args.Ns:
            raise _UsageError("density plots need --Ns")
        bounds = [parse_rational(part) for part in args.Ns.split(",")]
        reports = [analysis.level_density(f, args.C, n, args.step) for n in bounds]
        payload = reports
        csv_text = output.render_density_series_csv(reports)
    if args.format == "csv":
        _write_text(args.out, csv_text)
    else:
        output.emit_plot(payload, args.out, kind=args.kind)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "profile": _cmd_profile,
    "scan": _cmd_scan,
    "density": _cmd_density,
    "band": _cmd_band,
    "discont": _cmd_discont,
    "check": _cmd_check,
    "corpus": _cmd_corpus,
    "plot": _cmd_plot,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (StepFnError, RationalFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

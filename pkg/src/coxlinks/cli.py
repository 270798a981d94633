"""Command-line front end: every computation behind one ``coxlinks`` binary.

Global flags come before the subcommand::

    coxlinks [--format plain|tree] [--degree D] [--seed S] [--jobs J] <command> ...

Output formats:

* ``plain`` — stable, line-oriented text; one record per line where the
  command produces many.
* ``tree`` — a single JSON document ``{"command": ..., "records": [...]}``
  with sorted keys.  Polynomial fields are strings in the canonical
  grammar, so the document round-trips through ``json.loads`` plus
  :func:`coxlinks.polyalg.parse_poly`.

Exit codes: 0 success; 2 argument or validation error (every library
error is reported with the module it came from and a one-line remedy);
3 a consistency check ran and failed (``check``, ``mfcheck``).

Both formats are bit-stable for a fixed configuration: the only
randomness is seeded (``--seed``, default 0) and parallel work
(``--jobs``) is reassembled in deterministic order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from . import __version__, acceptance
from .charts import Chart, all_charts, gyt_injectivity_report
from .errors import (
    BraidSyntaxError,
    CapacityError,
    ConsistencyError,
    CoxlinksError,
    DegenerateChartError,
    ExpansionError,
    NotDivisibleError,
    SingularMatrixError,
)
from .homfly import coxeter_braid, homfly, parse_braid
from .localization import (
    calibrated_superpolynomial,
    detect_degenerate,
    superpolynomial_even,
)
from .mfcheck import containment_suite
from .twostrand import homology_T2_even, homology_T2_odd
from .weights import fixed_dim_check, weight_data

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3

_REMEDIES = [
    (BraidSyntaxError, "write the braid as 'strands=N s1 s2^-1 ...'"),
    (CapacityError, "stay inside the documented size caps (see --help and docstrings)"),
    (DegenerateChartError, "run 'degenerate <n>' to list the charts with vanishing factors"),
    (SingularMatrixError, "supply an invertible matrix g"),
    (ExpansionError, "denominator factors must have positive weighted degree; raise --degree weights"),
    (NotDivisibleError, "the value is genuinely rational; keep its denominator"),
    (ConsistencyError, "internal invariant violated — please report the full command line"),
    (ValueError, "check the argument ranges described in --help"),
]


def _module_of(exc: BaseException) -> str:
    """The deepest package module in the traceback, for error reporting."""
    module = "cli"
    trace = exc.__traceback__
    while trace is not None:
        name = trace.tb_frame.f_globals.get("__name__", "")
        if name.startswith("coxlinks."):
            module = name.split(".", 1)[1]
        trace = trace.tb_next
    return module


def _report_error(exc: BaseException) -> int:
    remedy = next(
        (text for kind, text in _REMEDIES if isinstance(exc, kind)),
        "re-run with --format tree for the full record",
    )
    print(f"error [{_module_of(exc)}]: {exc}", file=sys.stderr)
    print(f"remedy: {remedy}", file=sys.stderr)
    return EXIT_USAGE


def _int_list(text: str) -> Tuple[int, ...]:
    """Parse '2,1' (or '2, 1') into (2, 1); empty string means ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}"
        ) from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(args: argparse.Namespace, records: List[dict], lines: Iterable[str]) -> None:
    if args.format == "tree":
        document = {"command": args.command, "records": records}
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _chart_map(jobs: int, build: Callable[[Chart], dict], charts: Sequence[Chart]) -> List[dict]:
    """Apply ``build`` to every chart, in order, optionally in parallel."""
    if jobs > 1 and len(charts) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(build, charts))
    return [build(chart) for chart in charts]


# -- subcommand handlers -------------------------------------------------------


def _cmd_charts(args: argparse.Namespace) -> int:
    charts = all_charts(args.n)
    records = _chart_map(args.jobs, lambda chart: chart.to_record(), charts)
    lines = [
        "label sx={sx} sy={sy} monomials={monomials} commutes={commutes}".format(
            sx=json.dumps(record["label"]["sx"]),
            sy=json.dumps(record["label"]["sy"]),
            monomials=json.dumps(record["monomials"]),
            commutes=record["commutes"],
        )
        for record in records
    ]
    _emit(args, records, [f"charts n={args.n}: {len(records)} records"] + lines)
    return EXIT_OK


def _cmd_weights(args: argparse.Namespace) -> int:
    def build(chart: Chart) -> dict:
        record = weight_data(chart).to_record()
        record["label"] = chart.label.to_record()
        record["fixed_dim"] = fixed_dim_check(chart)
        return record

    records = _chart_map(args.jobs, build, all_charts(args.n))
    lines = [
        "wx={wx} wy={wy} dimT0={t0} dimOb0={ob0} inequality={ineq}"
        " vanishing_factors={vf}".format(
            wx=json.dumps(record["wx"]),
            wy=json.dumps(record["wy"]),
            t0=record["fixed_dim"]["dimT0"],
            ob0=record["fixed_dim"]["dimOb0"],
            ineq=record["fixed_dim"]["inequality"],
            vf=record["fixed_dim"]["vanishing_factors"],
        )
        for record in records
    ]
    _emit(args, records, [f"weights n={args.n}: {len(records)} records"] + lines)
    return EXIT_OK


def _cmd_superpoly(args: argparse.Namespace) -> int:
    if args.variant == "even":
        result = superpolynomial_even(args.n, args.k, args.link_s)
        record = result.to_record()
        lines = [
            f"P_even(n={args.n}, k={list(args.k)}, link_s={list(args.link_s)})"
            f" = {result.value}",
            f"canonical (a,q,t) image = {result.image}",
        ]
    else:
        result = calibrated_superpolynomial(args.n, args.k, args.link_s)
        record = result.to_record()
        record["truncated"] = str(result.truncated(args.degree))
        lines = [
            f"P(n={args.n}, k={list(args.k)}, link_s={list(args.link_s)})"
            f" = {result.value}",
            f"shift_exponent = {result.shift_exponent}",
            f"in_conjecture_regime = {result.in_conjecture_regime}",
            f"series to total degree {args.degree}: {record['truncated']}",
        ]
    _emit(args, [record], lines)
    return EXIT_OK


def _cmd_twostrand(args: argparse.Namespace) -> int:
    compute = homology_T2_odd if args.column == "odd" else homology_T2_even
    result = compute(args.index)
    record = result.to_record()
    record["truncated"] = str(
        result.value.truncate_series({"a": 1, "q": 1, "t": 1}, args.degree)
    )
    lines = [
        f"H_2strand_{args.column}({args.index}) = {result.value}",
        f"t-parities = {sorted(result.t_parities())}",
        f"series to total degree {args.degree}: {record['truncated']}",
    ]
    _emit(args, [record], lines)
    return EXIT_OK


def _cmd_homfly(args: argparse.Namespace) -> int:
    braid = parse_braid(args.braid)
    value = homfly(braid)
    record = braid.to_record()
    record["homfly"] = str(value)
    lines = [
        f"braid: {braid.to_text()}",
        f"writhe = {braid.writhe()}, components = {braid.components()}",
        f"homfly = {value}",
    ]
    _emit(args, [record], lines)
    return EXIT_OK


def _cmd_coxbraid(args: argparse.Namespace) -> int:
    braid = coxeter_braid(args.n, args.link_s, args.k)
    record = braid.to_record()
    lines = [
        braid.to_text(),
        f"writhe = {braid.writhe()}, components = {braid.components()}",
    ]
    _emit(args, [record], lines)
    return EXIT_OK


def _cmd_degenerate(args: argparse.Namespace) -> int:
    flagged = detect_degenerate(args.n)
    records = [chart.to_record() for chart in flagged]
    lines = [f"degenerate charts at n={args.n}: {len(flagged)}"] + [
        "label sx={sx} sy={sy}".format(
            sx=json.dumps(record["label"]["sx"]),
            sy=json.dumps(record["label"]["sy"]),
        )
        for record in records
    ]
    _emit(args, records, lines)
    return EXIT_OK


def _cmd_gyt(args: argparse.Namespace) -> int:
    report = gyt_injectivity_report(args.n)
    groups = report["collisions"]
    lines = [
        f"gyt n={args.n}: {report['total']} charts, {len(groups)} collision groups"
    ]
    for group in groups:
        lines.append(f"collision on cells {json.dumps(group['gyt'])}:")
        for label in group["labels"]:
            lines.append(
                f"  sx={json.dumps(label['sx'])} sy={json.dumps(label['sy'])}"
            )
    _emit(args, [report], lines)
    return EXIT_OK


def _cmd_mfcheck(args: argparse.Namespace) -> int:
    report = containment_suite(args.n, args.samples, args.seed)
    lines = [
        f"mfcheck n={args.n}: {args.samples} samples, seed {args.seed}: "
        + ("all passed" if report["passed"] else f"{len(report['failures'])} failures")
    ]
    _emit(args, [report], lines)
    return EXIT_OK if report["passed"] else EXIT_CHECK_FAILED


def _cmd_check(args: argparse.Namespace) -> int:
    results = acceptance.run(args.level, args.seed)
    records = [result.to_record() for result in results]
    passed = sum(result.passed for result in results)
    lines = [result.line() for result in results]
    lines.append(f"{passed}/{len(results)} criteria passed (level {args.level})")
    _emit(args, records, lines)
    return EXIT_OK if passed == len(results) else EXIT_CHECK_FAILED


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxlinks",
        description=__doc__.split("\n\n")[0],
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--format",
        choices=("plain", "tree"),
        default="plain",
        help="plain text lines or one JSON document (default: plain)",
    )
    parser.add_argument(
        "--degree",
        type=int,
        default=40,
        help="truncation degree for series output (default: 40)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for the randomized suites (default: 0)",
    )
    parser.add_argument(
        "--jobs",
        type=_positive_int,
        default=os.cpu_count() or 1,
        help="parallel workers for chart-level work (default: cpu count)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("charts", help="enumerate all chart records for size n")
    sub.add_argument("n", type=_positive_int)
    sub.set_defaults(handler=_cmd_charts)

    sub = commands.add_parser("weights", help="weight and fixed-dimension data per chart")
    sub.add_argument("n", type=_positive_int)
    sub.set_defaults(handler=_cmd_weights)

    sub = commands.add_parser(
        "superpoly", help="fixed-point superpolynomial for (n, k, link_s)"
    )
    sub.add_argument("n", type=_positive_int)
    sub.add_argument("--k", type=_int_list, required=True, help="comma list, length n-1")
    sub.add_argument(
        "--link-s", type=_int_list, default=(), dest="link_s",
        help="skipped generator indices (experimental; comma list)",
    )
    sub.add_argument(
        "--variant",
        choices=("calibrated", "even"),
        default="calibrated",
        help="calibrated (a,q,t) sum or the verbatim even-t surrogate in (a,Q,T)",
    )
    sub.set_defaults(handler=_cmd_superpoly)

    sub = commands.add_parser("twostrand", help="closed-form two-strand homology")
    sub.add_argument("column", choices=("odd", "even"))
    sub.add_argument("index", type=int, help="k for odd columns, n for even columns")
    sub.set_defaults(handler=_cmd_twostrand)

    sub = commands.add_parser("homfly", help="HOMFLY polynomial of a braid closure")
    sub.add_argument("braid", help="braid word, e.g. 'strands=2 s1 s1 s1'")
    sub.set_defaults(handler=_cmd_homfly)

    sub = commands.add_parser(
        "coxbraid", help="the quasi-Coxeter braid word for (n, k, link_s)"
    )
    sub.add_argument("n", type=_positive_int)
    sub.add_argument("--k", type=_int_list, required=True, help="comma list, length n-1")
    sub.add_argument(
        "--link-s", type=_int_list, default=(), dest="link_s",
        help="skipped generator indices (comma list)",
    )
    sub.set_defaults(handler=_cmd_coxbraid)

    sub = commands.add_parser("degenerate", help="charts with vanishing localization factors")
    sub.add_argument("n", type=_positive_int)
    sub.set_defaults(handler=_cmd_degenerate)

    sub = commands.add_parser("gyt", help="tableau-image injectivity report")
    sub.add_argument("n", type=_positive_int)
    sub.set_defaults(handler=_cmd_gyt)

    sub = commands.add_parser("mfcheck", help="seeded determinant/containment suite")
    sub.add_argument("--n", type=_positive_int, required=True)
    sub.add_argument("--samples", type=_positive_int, default=500)
    sub.set_defaults(handler=_cmd_mfcheck)

    sub = commands.add_parser("check", help="run the acceptance suite")
    sub.add_argument(
        "--level",
        choices=("quick", "full"),
        default="quick",
        help="quick: fast all-green subset; full: all eleven criteria",
    )
    sub.set_defaults(handler=_cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CoxlinksError as exc:
        return _report_error(exc)
    except ValueError as exc:
        return _report_error(exc)


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end for realauto.

Usage:
    realauto build --a 4 --grid 2001 --out arctan4.csv
    realauto iterate --n 4 --out iterates.csv
    realauto verify --family arctan --a 4 --b 1
    realauto series --family tan --a 0.25 --order 60
    realauto counterexample --kind bump --n inf --out f.csv

Exit codes: 0 success, 1 verification or solver failure, 2 usage error.
The primary artifact goes to --out (stdout stays empty) or to stdout. Its
companion (report, table or curves) is written beside --out, or to stderr when
there is no --out. Diagnostics always go to stderr.
"""

import argparse
import math
import sys
from collections.abc import Callable, Sequence

from .config.settings import RealAutoConfig, SolverSettings, ToleranceProfile, load_config
from .counterexamples.sequences import (
    convergence_table,
    injectivity_witness,
    sample_sequence,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    NoBracketError,
    ParameterError,
)
from .family.family_core import (
    analytic_slope_at_origin,
    iteration_table,
    sample_curve,
)
from .logging import LogContext, cli_logger, configure_logging
from .models.map_expr import ArctanFam, ErfFam, Iterate, MapExpr, SinHalfPi, TanFam
from .models.run_config import OutputFormat, RunConfig, Subcommand
from .models.seq_family import SeqFamily, SeqKind, parse_seq_index
from .models.verification_report import VerificationReport
from .series.series_engine import default_order, taylor
from .solver.param_solver import build_automorphism, solve_b_arctan, solve_b_tan
from .utils.artifacts import (
    curve_to_csv,
    iterates_to_csv,
    series_to_csv,
    sibling_path,
    to_json,
    write_text,
)
from .utils.constants import ITERATION_GAP_TOL
from .verifier.verifier import verify

logger = cli_logger()

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FAMILIES = ("arctan", "tan", "sin", "erf")


def seq_index(raw: str) -> float:
    """argparse type for sequence indices (positive integer or inf)."""
    return parse_seq_index(raw)


def _add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--profile", default="default", help="Tolerance profile")
    parser.add_argument("--tol-endpoint", type=float, help="Override endpoint tolerance")
    parser.add_argument("--tol-deriv", type=float, help="Override derivative tolerance")


def _add_output_flags(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    parser.add_argument("--out", help="Primary artifact path (default: stdout)")
    if formats:
        parser.add_argument(
            "--format",
            choices=[f.value for f in OutputFormat],
            default=OutputFormat.CSV.value,
            help="Primary artifact format",
        )


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = argparse.ArgumentParser(
        prog="realauto",
        description="Real analytic automorphisms of (-1, 1) with prescribed slope at 0",
    )
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level for stderr diagnostics",
    )
    parser.add_argument(
        "--log-format",
        default="console",
        choices=["console", "json"],
        help="Log record format",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="Build and verify the map with f'(0) = a")
    build.add_argument("--a", type=float, required=True, help="Target derivative at 0")
    build.add_argument("--grid", type=int, help="CSV grid size")
    build.add_argument("--eps", type=float, default=0.0, help="Grid margin")
    _add_tolerance_flags(build)
    _add_output_flags(build)

    iterate = sub.add_parser("iterate", help="Iterates of sin(pi x / 2)")
    iterate.add_argument("--n", type=int, required=True, help="Number of iterates")
    iterate.add_argument("--grid", type=int, help="CSV grid size")
    iterate.add_argument("--eps", type=float, default=0.0, help="Grid margin")
    _add_output_flags(iterate)

    verify_cmd = sub.add_parser("verify", help="Verify a family map")
    verify_cmd.add_argument("--family", choices=FAMILIES, help="Primitive family")
    verify_cmd.add_argument("--a", type=float, help="Family derivative a")
    verify_cmd.add_argument("--b", type=float, help="Shape parameter (b, or k for erf)")
    verify_cmd.add_argument("--n", type=int, help="Iterate the family map n times")
    verify_cmd.add_argument("--claim", type=float, help="Claimed derivative at 0")
    verify_cmd.add_argument("--grid", type=int, help="Verification grid size")
    verify_cmd.add_argument("--eps", type=float, default=0.0, help="Grid margin")
    _add_tolerance_flags(verify_cmd)
    _add_output_flags(verify_cmd, formats=False)

    series = sub.add_parser("series", help="Maclaurin coefficients of a family")
    series.add_argument("--family", choices=FAMILIES, required=True)
    series.add_argument("--a", type=float, help="Family derivative a")
    series.add_argument("--b", type=float, help="Shape parameter (b, or k for erf)")
    series.add_argument("--order", type=int, help="Truncation order N")
    _add_output_flags(series)

    counter = sub.add_parser("counterexample", help="Counterexample sequences")
    counter.add_argument(
        "--kind", choices=[k.value for k in SeqKind], required=True
    )
    counter.add_argument(
        "--n", type=seq_index, required=True, help="Member index or inf"
    )
    counter.add_argument("--grid", type=int, help="CSV grid size")
    counter.add_argument("--eps", type=float, help="Open-interval margin")
    counter.add_argument("--rows", type=int, help="Convergence table rows")
    _add_output_flags(counter)

    return parser


def _run_config(args: argparse.Namespace, config: RealAutoConfig) -> RunConfig:
    subcommand = Subcommand(args.command)
    grid = getattr(args, "grid", None)
    if grid is None:
        grid = config.cli.verify_grid if subcommand is Subcommand.VERIFY else config.cli.grid
    eps = getattr(args, "eps", None)
    if eps is None:
        eps = config.cli.eps if subcommand is Subcommand.COUNTEREXAMPLE else 0.0
    rows = getattr(args, "rows", None)
    return RunConfig(
        subcommand=subcommand,
        grid=grid,
        eps=eps,
        out=args.out,
        format=OutputFormat(getattr(args, "format", OutputFormat.CSV.value)),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None),
        n=getattr(args, "n", None),
        claim=getattr(args, "claim", None),
        order=getattr(args, "order", None),
        family=getattr(args, "family", None),
        kind=getattr(args, "kind", None),
        rows=rows if rows is not None else config.cli.convergence_rows,
        profile=getattr(args, "profile", "default"),
        tol_endpoint=getattr(args, "tol_endpoint", None),
        tol_deriv=getattr(args, "tol_deriv", None),
    )


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _emit_companion(text: str, out: str | None, suffix: str) -> None:
    # Secondary artifact: beside --out, or on stderr when the primary goes to stdout
    if out is None:
        sys.stderr.write(text)
    else:
        write_text(sibling_path(out, suffix), text)


def _profile(run: RunConfig, config: RealAutoConfig) -> ToleranceProfile:
    return config.get_profile(run.profile).with_overrides(
        endpoint=run.tol_endpoint, derivative=run.tol_deriv
    )


def _log_report(report: VerificationReport) -> None:
    logger.info(
        "Verification report",
        expr=report.expr,
        passed=report.passed,
        failed=[name.value for name in report.failed_checks],
        notes=list(report.notes),
    )


def _family_map(
    family: str | None, a: float | None, b: float | None, solver: SolverSettings
) -> MapExpr:
    match family:
        case "sin":
            return SinHalfPi()
        case "erf":
            return ErfFam(k=b if b is not None else 1.0)
        case "arctan" | "tan":
            if a is None:
                raise ParameterError(f"--a is required for --family {family}")
            if b is None:
                if family == "arctan":
                    b = solve_b_arctan(a, solver.tol, solver.max_iter).b_star
                else:
                    b = solve_b_tan(
                        a, solver.tol, solver.max_iter, solver.tan_bracket_margin
                    ).b_star
            return ArctanFam(a=a, b=b) if family == "arctan" else TanFam(a=a, b=b)
    raise ParameterError(f"Unknown family {family!r}")


def cmd_build(run: RunConfig, config: RealAutoConfig) -> int:
    """Build the map for --a, sample it and verify it."""
    assert run.a is not None
    e = build_automorphism(
        run.a,
        config.solver.tol,
        config.solver.max_iter,
        config.solver.tan_bracket_margin,
    )
    sample = sample_curve(e, run.grid, run.eps)
    report = verify(
        e, run.a, config.cli.verify_grid, _profile(run, config), eps=run.eps
    )
    _log_report(report)

    csv_text = curve_to_csv(sample)
    report_text = to_json(report.to_dict())
    if run.format is OutputFormat.CSV:
        _emit(csv_text, run.out)
        _emit_companion(report_text, run.out, ".report.json")
    else:
        _emit(report_text, run.out)
        _emit_companion(csv_text, run.out, ".curve.csv")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_iterate(run: RunConfig, config: RealAutoConfig) -> int:
    """Sample h_1..h_n of sin(pi x / 2) and tabulate the slope power law."""
    n = int(run.n) if run.n is not None else 0
    if n < 1:
        raise ParameterError(f"--n must be >= 1, got {n}")
    base = SinHalfPi()
    table = iteration_table(base, n)
    samples = [
        sample_curve(base if k == 1 else Iterate(base=base, n=k), run.grid, run.eps)
        for k in range(1, n + 1)
    ]

    csv_text = iterates_to_csv(samples)
    table_text = to_json(table)
    if run.format is OutputFormat.CSV:
        _emit(csv_text, run.out)
        _emit_companion(table_text, run.out, "_table.json")
    else:
        _emit(table_text, run.out)
        _emit_companion(csv_text, run.out, ".curves.csv")

    worst = max(row["relative_gap"] for row in table)
    logger.info("Iteration table", n=n, worst_relative_gap=worst)
    return EXIT_OK if worst <= ITERATION_GAP_TOL else EXIT_FAILURE


def cmd_verify(run: RunConfig, config: RealAutoConfig) -> int:
    """Verify a family map (or the built map for --a) against a claimed slope."""
    if run.family is None:
        if run.a is None:
            raise ParameterError("verify needs --family or --a")
        e = build_automorphism(
            run.a,
            config.solver.tol,
            config.solver.max_iter,
            config.solver.tan_bracket_margin,
        )
        default_claim = run.a
    else:
        e = _family_map(run.family, run.a, run.b, config.solver)
        if run.n is not None and run.n != 1:
            e = Iterate(base=e, n=int(run.n))
        default_claim = analytic_slope_at_origin(e)

    claim = run.claim if run.claim is not None else default_claim
    report = verify(e, claim, run.grid, _profile(run, config), eps=run.eps)
    _log_report(report)
    _emit(to_json(report.to_dict()), run.out)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_series(run: RunConfig, config: RealAutoConfig) -> int:
    """Emit Maclaurin coefficients of a primitive family."""
    node = _family_map(run.family, run.a, run.b, config.solver)
    order = run.order
    if order is None:
        order = default_order(node.kind, config.series.orders)
    expansion = taylor(node, order)
    if run.format is OutputFormat.CSV:
        _emit(series_to_csv(expansion), run.out)
    else:
        _emit(to_json(expansion.to_dict()), run.out)
    return EXIT_OK


def cmd_counterexample(run: RunConfig, config: RealAutoConfig) -> int:
    """Sample a sequence member and tabulate sup-norm convergence."""
    assert run.kind is not None and run.n is not None
    kind = SeqKind(run.kind)
    member = SeqFamily(kind=kind, n=run.n)
    sample = sample_sequence(member, run.grid, run.eps)
    witness = injectivity_witness(kind, member.n, run.grid, run.eps)
    rows = convergence_table(
        kind,
        range(1, run.rows + 1),
        interval=(-1.0 + run.eps, 1.0 - run.eps),
        grid_m=run.grid,
    )
    table = {
        "member": member.describe(),
        "injectivity_witness": list(witness) if witness is not None else None,
        "convergence": rows,
    }

    csv_text = curve_to_csv(sample)
    table_text = to_json(table)
    if run.format is OutputFormat.CSV:
        _emit(csv_text, run.out)
        _emit_companion(table_text, run.out, "_convergence.json")
    else:
        _emit(table_text, run.out)
        _emit_companion(csv_text, run.out, ".curve.csv")
    return EXIT_OK


HANDLERS: dict[Subcommand, Callable[[RunConfig, RealAutoConfig], int]] = {
    Subcommand.BUILD: cmd_build,
    Subcommand.ITERATE: cmd_iterate,
    Subcommand.VERIFY: cmd_verify,
    Subcommand.SERIES: cmd_series,
    Subcommand.COUNTEREXAMPLE: cmd_counterexample,
}


def _report_error(e: Exception) -> None:
    sys.stderr.write(f"realauto: error: {e}\n")


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(level=args.log_level, format=args.log_format)
    with LogContext(command=args.command):
        try:
            config = load_config(args.config)
            run = _run_config(args, config)
            if run.a is not None and not math.isfinite(run.a):
                raise ParameterError(f"--a must be finite, got {run.a}")
            return HANDLERS[run.subcommand](run, config)
        except (ParameterError, DomainError, ConfigError) as e:
            logger.error("Invalid invocation", error=str(e))
            _report_error(e)
            return EXIT_USAGE
        except (NoBracketError, ConvergenceError) as e:
            logger.error("Numerical failure", error=str(e))
            _report_error(e)
            return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: protocol runs, parameter sweeps, oracle-vs-formula
verification, and the channel-rating quartic.

Exit codes: 0 success, 1 verification failure in the pure rows, 2 usage
error, 3 numerical failure.  CSV and JSON outputs carry full double
precision and are byte-stable for identical configurations; tables round to
six significant digits.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import sqrt
from typing import Sequence

import numpy as np

from .analysis import (
    DEFAULT_ALPHA_SQ_GRID,
    VerificationRow,
    input_concurrence,
    quartic,
    quartic_roots,
    sweep,
)
from .protocol import (
    BellOutcome,
    BobOutcome,
    Branch,
    ProtocolResult,
    run_protocol_mixed,
    run_protocol_pure,
)
from .states import DensityMatrix, InvalidBasis, InvalidInput, NumericalFailure, StateVector

SWEEP_CSV_COLUMNS = (
    "mode",
    "n",
    "alpha_sq",
    "p",
    "bell",
    "bob",
    "probability",
    "oracle_concurrence",
    "formula_concurrence",
    "abs_diff",
    "verdict",
)

SPOT_CHECK_TOL = 1e-10
DEADNESS_TOL = 1e-12


def _full(x: float) -> str:
    """Shortest decimal that round-trips the double exactly."""
    return repr(float(x))


def _opt(x: float | None) -> str:
    return "" if x is None else _full(x)


def _sig6(x: float) -> str:
    return f"{x:.6g}"


def _bits(index: int, width: int) -> str:
    return format(index, f"0{width}b")


def _format_pure_state(state: StateVector) -> str:
    if state.is_zero():
        return "(zero)"
    terms = []
    for index, amp in enumerate(state.amplitudes):
        if abs(amp) < 1e-12:
            continue
        if abs(amp.imag) < 1e-12:
            coeff = _sig6(amp.real)
        else:
            coeff = f"({_sig6(amp.real)}{amp.imag:+.6g}j)"
        terms.append(f"{coeff}|{_bits(index, state.num_qubits)}>")
    return " + ".join(terms).replace("+ -", "- ")


def _format_matrix_lines(entries: np.ndarray, indent: str) -> list[str]:
    lines = []
    for row in entries:
        cells = []
        for value in row:
            if abs(value.imag) < 1e-12:
                cells.append(f"{value.real:>12.6g}")
            else:
                cells.append(f"{value.real:.6g}{value.imag:+.6g}j")
        lines.append(indent + "[" + "  ".join(cells) + "]")
    return lines


def _state_csv(post: StateVector | DensityMatrix) -> str:
    if isinstance(post, StateVector):
        values = post.amplitudes
    else:
        values = post.entries.reshape(-1)
    return " ".join(repr(complex(v)) for v in values)


def _state_json(post: StateVector | DensityMatrix):
    if isinstance(post, StateVector):
        return [[float(v.real), float(v.imag)] for v in post.amplitudes]
    return [[[float(v.real), float(v.imag)] for v in row] for row in post.entries]


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _parse_values(text: str, name: str) -> tuple[tuple[float, ...], bool]:
    """Parse a scalar or an inclusive grid spec start:stop:count."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise InvalidInput(f"{name}: grid spec must be start:stop:count, got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise InvalidInput(f"{name}: grid spec must be numeric start:stop:count, got {text!r}")
        if count < 1:
            raise InvalidInput(f"{name}: grid count must be at least 1, got {count}")
        if start > stop:
            raise InvalidInput(f"{name}: grid start must not exceed stop, got {text!r}")
        return tuple(float(v) for v in np.linspace(start, stop, count)), True
    try:
        return (float(text),), False
    except ValueError:
        raise InvalidInput(f"{name}: expected a number or start:stop:count, got {text!r}")


def _mode_parameter(args: argparse.Namespace) -> tuple[tuple[float, ...], bool]:
    """The grid of the parameter that matches --mode; the other must be absent."""
    if args.mode == "pure":
        if args.alpha_sq is None:
            raise InvalidInput("--alpha-sq is required with --mode pure")
        if args.p is not None:
            raise InvalidInput("--p does not apply to --mode pure")
        values, is_grid = _parse_values(args.alpha_sq, "--alpha-sq")
    else:
        if args.p is None:
            raise InvalidInput("--p is required with --mode werner")
        if args.alpha_sq is not None:
            raise InvalidInput("--alpha-sq does not apply to --mode werner")
        values, is_grid = _parse_values(args.p, "--p")
    return values, is_grid


def _config_dict(args: argparse.Namespace, **extra) -> dict:
    config = {"subcommand": args.subcommand, "format": args.format}
    config.update(extra)
    return config


def _row_dict(row: VerificationRow) -> dict:
    return {
        "mode": row.mode,
        "n": row.n,
        "alpha_sq": row.alpha_sq,
        "p": row.p,
        "bell": row.bell.value,
        "bob": row.bob.value,
        "probability": row.probability,
        "oracle_concurrence": row.oracle_concurrence,
        "formula_concurrence": row.formula_concurrence,
        "abs_diff": row.abs_diff,
        "verdict": row.verdict,
    }


def _rows_csv(rows: Sequence[VerificationRow], comment: str) -> str:
    buffer = io.StringIO()
    buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.mode,
                _full(row.n),
                _opt(row.alpha_sq),
                _opt(row.p),
                row.bell.value,
                row.bob.value,
                _full(row.probability),
                _full(row.oracle_concurrence),
                _full(row.formula_concurrence),
                _full(row.abs_diff),
                row.verdict,
            ]
        )
    return buffer.getvalue()


def _rows_table(rows: Sequence[VerificationRow]) -> str:
    header = (
        f"{'mode':<6} {'n':>8} {'alpha_sq':>9} {'p':>6} {'bell':<8} {'bob':<4} "
        f"{'prob':>10} {'oracle':>10} {'formula':>10} {'abs_diff':>10} verdict"
    )
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.mode:<6} {_sig6(row.n):>8} "
            f"{_sig6(row.alpha_sq) if row.alpha_sq is not None else '-':>9} "
            f"{_sig6(row.p) if row.p is not None else '-':>6} "
            f"{row.bell.value:<8} {row.bob.value:<4} "
            f"{_sig6(row.probability):>10} {_sig6(row.oracle_concurrence):>10} "
            f"{_sig6(row.formula_concurrence):>10} {row.abs_diff:>10.3e} {row.verdict}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- run


def _branch_row_dict(result: ProtocolResult, branch: Branch, mode: str) -> dict:
    return {
        "mode": mode,
        "n": result.channel_n,
        "alpha_sq": None if result.input_alpha is None else result.input_alpha**2,
        "p": result.input_p,
        "bell": branch.bell.value,
        "bob": branch.bob.value,
        "probability": branch.probability,
        "concurrence": branch.concurrence,
        "post_state": _state_json(branch.post_state),
    }


def cmd_run(args: argparse.Namespace) -> int:
    (n_values, n_grid) = _parse_values(args.n, "--n")
    values, p_grid = _mode_parameter(args)
    if n_grid or p_grid:
        raise InvalidInput("run takes scalar parameters; use sweep for grids")
    n = n_values[0]
    value = values[0]

    if args.mode == "pure":
        if not 0.0 <= value <= 1.0:
            raise InvalidInput(f"alpha^2 must lie in [0, 1], got {value}")
        result = run_protocol_pure(sqrt(value), n)
        param_echo = f"alpha_sq={_full(value)}"
    else:
        result = run_protocol_mixed(value, n)
        param_echo = f"p={_full(value)}"
    comment = f"wteleport run mode={args.mode} n={_full(n)} {param_echo}"

    if args.format == "json":
        payload = {
            "config": _config_dict(
                args,
                mode=args.mode,
                n=n,
                alpha_sq=value if args.mode == "pure" else None,
                p=value if args.mode == "werner" else None,
            ),
            "rows": [_branch_row_dict(result, b, args.mode) for b in result.branches],
            "summary": {"total_probability": result.total_probability},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        buffer = io.StringIO()
        buffer.write(f"# {comment}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            ["mode", "n", "alpha_sq", "p", "bell", "bob", "probability", "concurrence", "post_state"]
        )
        for b in result.branches:
            writer.writerow(
                [
                    args.mode,
                    _full(n),
                    _full(value) if args.mode == "pure" else "",
                    _full(value) if args.mode == "werner" else "",
                    b.bell.value,
                    b.bob.value,
                    _full(b.probability),
                    _full(b.concurrence),
                    _state_csv(b.post_state),
                ]
            )
        _write_output(buffer.getvalue(), args.output)
    else:
        lines = [comment, ""]
        for b in result.branches:
            outcome = f"{b.bell.value}/{b.bob.value}"
            lines.append(
                f"branch {outcome:<14} "
                f"probability={_sig6(b.probability):<12} concurrence={b.concurrence:.6f}"
            )
            if isinstance(b.post_state, StateVector):
                lines.append(f"  post-state: {_format_pure_state(b.post_state)}")
            else:
                if b.post_state.is_zero():
                    lines.append("  post-state: (zero)")
                else:
                    lines.append("  post-state matrix:")
                    lines.extend(_format_matrix_lines(b.post_state.entries, "    "))
        lines.append("")
        lines.append(f"total probability: {_sig6(result.total_probability)}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------- sweep


def cmd_sweep(args: argparse.Namespace) -> int:
    (n_values, n_grid) = _parse_values(args.n, "--n")
    values, p_grid = _mode_parameter(args)
    if not (n_grid or p_grid):
        raise InvalidInput("sweep needs at least one grid parameter (start:stop:count)")

    if args.mode == "pure":
        rows = sweep("pure", n_values=n_values, alpha_sq_values=values)
        span = f"alpha_sq={args.alpha_sq}"
    else:
        rows = sweep("werner", n_values=n_values, p_values=values)
        span = f"p={args.p}"
    comment = f"wteleport sweep mode={args.mode} n={args.n} {span}"

    if args.format == "json":
        match = sum(1 for r in rows if r.verdict == "MATCH")
        config = _config_dict(args, mode=args.mode, n=args.n, alpha_sq=args.alpha_sq, p=args.p)
        payload = {
            "config": config,
            "rows": [_row_dict(r) for r in rows],
            "summary": {"rows": len(rows), "match": match, "discrepant": len(rows) - match},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _write_output(_rows_csv(rows, comment), args.output)
    else:
        _write_output(comment + "\n" + _rows_table(rows), args.output)
    return 0


# ---------------------------------------------------------------- verify


def _family(row: VerificationRow) -> str:
    if row.bob is BobOutcome.ONE:
        return "bob_one"
    if row.bell in (BellOutcome.PHI_PLUS, BellOutcome.PHI_MINUS):
        return "phi_zero"
    return "psi_zero"


def _family_counts(rows: Sequence[VerificationRow]) -> dict[str, dict[str, int]]:
    counts = {f: {"match": 0, "discrepant": 0} for f in ("phi_zero", "psi_zero", "bob_one")}
    for row in rows:
        counts[_family(row)]["match" if row.verdict == "MATCH" else "discrepant"] += 1
    return counts


def _spot_checks() -> list[dict]:
    """Concurrence-preservation checks at the state-independent points."""
    checks = []

    worst = 0.0
    for alpha_sq in DEFAULT_ALPHA_SQ_GRID:
        alpha = sqrt(alpha_sq)
        branch = run_protocol_pure(alpha, 1.0).branch(BellOutcome.PHI_PLUS, BobOutcome.ZERO)
        worst = max(worst, abs(branch.concurrence - input_concurrence(alpha)))
    checks.append(
        {
            "name": "n=1 preserves concurrence for every grid input",
            "max_error": worst,
            "passed": worst <= SPOT_CHECK_TOL,
        }
    )

    for n, alpha_sq in ((4.0, 1.0 / 3.0), (9.0, 1.0 / 4.0)):
        alpha = sqrt(alpha_sq)
        branch = run_protocol_pure(alpha, n).branch(BellOutcome.PHI_PLUS, BobOutcome.ZERO)
        error = abs(branch.concurrence - input_concurrence(alpha))
        checks.append(
            {
                "name": f"n={_sig6(n)}, alpha_sq={_sig6(alpha_sq)} preserves concurrence",
                "max_error": error,
                "passed": error <= SPOT_CHECK_TOL,
            }
        )
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    pure_rows = sweep("pure")
    pure_discrepant = [r for r in pure_rows if r.verdict == "DISCREPANT"]
    spot_checks = _spot_checks()
    pure_failed = bool(pure_discrepant) or not all(c["passed"] for c in spot_checks)

    werner_rows: list[VerificationRow] = []
    werner_failure: str | None = None
    try:
        werner_rows = sweep("werner")
    except NumericalFailure as exc:
        # A pure-side failure outranks a numerical failure in the werner
        # phase: a corrupted oracle should report as a verification failure.
        if not pure_failed:
            raise
        werner_failure = str(exc)

    all_rows = pure_rows + werner_rows
    dead_worst = max(
        (r.oracle_concurrence for r in all_rows if r.bob is BobOutcome.ONE), default=0.0
    )
    dead_ok = dead_worst <= DEADNESS_TOL
    if not dead_ok:
        pure_failed = True

    # The werner closed form disagrees with the oracle wherever p > 1/3 (its
    # value can even exceed 1); that mismatch is a reproducible property of
    # the closed form itself, so it is reported but never fails the run.
    werner_examples = [
        r
        for r in werner_rows
        if r.p == 1.0 and r.bell is BellOutcome.PHI_PLUS and r.bob is BobOutcome.ZERO
    ]

    exit_code = 1 if pure_failed else 0
    summary = {
        "pure": {
            "rows": len(pure_rows),
            "match": len(pure_rows) - len(pure_discrepant),
            "discrepant": len(pure_discrepant),
            "families": _family_counts(pure_rows),
        },
        "werner": {
            "rows": len(werner_rows),
            "match": sum(1 for r in werner_rows if r.verdict == "MATCH"),
            "discrepant": sum(1 for r in werner_rows if r.verdict == "DISCREPANT"),
            "families": _family_counts(werner_rows),
            "numerical_failure": werner_failure,
        },
        "spot_checks": spot_checks,
        "bob_one_max_concurrence": dead_worst,
        "bob_one_dead": dead_ok,
        "exit_code": exit_code,
    }

    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "rows": [_row_dict(r) for r in all_rows],
            "summary": summary,
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _write_output(_rows_csv(all_rows, "wteleport verify (pure + werner default grids)"), args.output)
    else:
        lines = ["wteleport verify", "================"]
        for mode, rows in (("pure", pure_rows), ("werner", werner_rows)):
            families = _family_counts(rows)
            lines.append(f"{mode} sweep: {len(rows)} rows")
            for family, label in (
                ("phi_zero", "Phi+/Phi- with Bob 0"),
                ("psi_zero", "Psi+/Psi- with Bob 0"),
                ("bob_one", "any Bell with Bob 1 "),
            ):
                c = families[family]
                lines.append(
                    f"  {label}: {c['match']} MATCH, {c['discrepant']} DISCREPANT"
                )
        if werner_failure is not None:
            lines.append(f"werner sweep aborted: {werner_failure}")
        lines.append("spot checks:")
        for check in spot_checks:
            state = "PASS" if check["passed"] else "FAIL"
            lines.append(f"  {check['name']}: {state} (max error {check['max_error']:.3e})")
        lines.append(
            f"Bob-outcome-1 branches carry no entanglement: "
            f"{'PASS' if dead_ok else 'FAIL'} (max {dead_worst:.3e})"
        )
        if werner_examples:
            lines.append(
                "werner closed form vs oracle at p=1 "
                "(documented mismatch, does not affect the exit code):"
            )
            for r in werner_examples:
                lines.append(
                    f"  n={_sig6(r.n)} p={_sig6(r.p)} {r.bell.value}/{r.bob.value}: "
                    f"formula={_sig6(r.formula_concurrence)} "
                    f"oracle={_sig6(r.oracle_concurrence)} {r.verdict}"
                )
        lines.append(f"result: {'FAIL' if exit_code else 'PASS'} (exit {exit_code})")
        _write_output("\n".join(lines) + "\n", args.output)
    return exit_code


# ---------------------------------------------------------------- roots


def cmd_roots(args: argparse.Namespace) -> int:
    report = quartic_roots()

    def region_dict(region) -> dict:
        return {"lower": region.lower, "upper": region.upper, "sign": region.sign}

    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "coefficients": list(report.coefficients),
            "roots": list(report.roots_positive),
            "rows": [{"root": r, "quartic_value": quartic(r)} for r in report.roots_positive],
            "sign_regions": [region_dict(s) for s in report.sign_regions],
            "summary": {"positive_roots": len(report.roots_positive)},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        buffer = io.StringIO()
        buffer.write("# wteleport roots: n^4 + 4n^3 + 6n^2 - 60n + 1\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["root", "quartic_value"])
        for r in report.roots_positive:
            writer.writerow([_full(r), _full(quartic(r))])
        _write_output(buffer.getvalue(), args.output)
    else:
        lines = ["quartic n^4 + 4n^3 + 6n^2 - 60n + 1"]
        for i, r in enumerate(report.roots_positive, start=1):
            lines.append(f"  root {i}: {r:.12g}   (quartic value {quartic(r):.3e})")
        lines.append("sign on (0, inf):")
        for region in report.sign_regions:
            upper = "inf" if region.upper is None else f"{region.upper:.12g}"
            sign = ">= 0 (inequality holds)" if region.sign > 0 else "< 0 (inequality fails)"
            lines.append(f"  ({region.lower:.12g}, {upper}): {sign}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wteleport",
        description=(
            "Teleportation of entanglement over the |W_n> channel family: "
            "exact branch enumeration and closed-form verification."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_params: bool) -> None:
        if with_params:
            p.add_argument("--mode", choices=("pure", "werner"), required=True)
            p.add_argument("--n", required=True, help="channel parameter, scalar or start:stop:count")
            p.add_argument("--alpha-sq", dest="alpha_sq", help="input weight alpha^2 (pure mode)")
            p.add_argument("--p", help="Werner mixing weight (werner mode)")
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--output", help="write the report to this path instead of stdout")

    p_run = sub.add_parser("run", help="run the protocol at one parameter point")
    add_common(p_run, with_params=True)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="oracle vs closed form over a parameter grid")
    add_common(p_sweep, with_params=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the default verification grids")
    add_common(p_verify, with_params=False)
    p_verify.set_defaults(func=cmd_verify)

    p_roots = sub.add_parser("roots", help="positive roots of the channel-rating quartic")
    add_common(p_roots, with_params=False)
    p_roots.set_defaults(func=cmd_roots)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (InvalidInput, InvalidBasis) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

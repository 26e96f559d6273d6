"""Command-line front end: model evaluation, CSV export, verification.

Exit codes: 0 success, 1 config/CLI error, 2 numerical or verification
failure. Errors go to stderr with stable prefixes ("config:", "numeric:",
"verify:"). All CSV output is written atomically (temp file + rename) and
is byte-stable for identical inputs.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

import numpy as np

from . import materials, multimorph, oracle, scanner, sweep as sweep_mod
from .config import ConfigDoc, ConfigError, parse_config

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors on our config/CLI exit code."""

    def error(self, message):
        self.exit(EXIT_CONFIG, f"config: {self.prog}: {message}\n")


def _fmt(value: float) -> str:
    """Render a number with 9 significant digits."""
    return f"{value:.9g}"


def _write_atomic(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv(header: str, rows: list[list[str]]) -> str:
    lines = [header] + [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def _load_config(path: str) -> ConfigDoc:
    try:
        with open(path, "r") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_config(text)


def _model_row(solution: scanner.ScannerSolution) -> list[str]:
    return [
        _fmt(math.degrees(solution.tilt)),
        _fmt(solution.y_max * 1e6),
        _fmt(solution.x_at_ymax * 1e6),
        _fmt(abs(solution.force) * 1e6),
        _fmt(solution.reaction * 1e6),
        _fmt(solution.rigidity),
    ]


def _cmd_model(args) -> int:
    doc = _load_config(args.config)
    solution = doc.scan_config().solve()
    row = _model_row(solution)
    print(
        f"phi_deg={row[0]} y_max_um={row[1]} x_at_ymax_um={row[2]} "
        f"F_uN={row[3]} R_A_uN={row[4]} rigidity_Nm2={row[5]}"
    )
    _write_atomic(args.out, _csv("phi_deg,y_max_um,x_at_ymax_um,F_uN,R_A_uN,rigidity_Nm2", [row]))
    return EXIT_OK


def _cmd_profile(args) -> int:
    doc = _load_config(args.config)
    if args.samples < 2:
        raise ConfigError("--samples must be >= 2")
    solution = doc.scan_config().solve(samples=args.samples)
    rows = [[_fmt(u * 1e6), _fmt(y * 1e6)] for u, y in solution.profile]
    _write_atomic(args.out, _csv("x_um,y_um", rows))
    return EXIT_OK


def _sweep_rows(axis: str, records: list[sweep_mod.SweepRecord]) -> list[list[str]]:
    rows = []
    for rec in records:
        if rec.ok:
            rows.append(
                [
                    axis,
                    _fmt(rec.param_value),
                    _fmt(rec.tilt_deg),
                    _fmt(rec.y_max_m * 1e6),
                    _fmt(abs(rec.force_N) * 1e6),
                    _fmt(rec.reaction_N * 1e6),
                    "ok",
                ]
            )
        else:
            rows.append([axis, _fmt(rec.param_value), "nan", "nan", "nan", "nan",
                         "error: " + rec.status.replace(",", ";")])
    return rows


_SWEEP_HEADER = "param_name,param_value_si,phi_deg,y_max_um,F_uN,R_A_uN,status"


def _cmd_sweep(args) -> int:
    doc = _load_config(args.config)
    try:
        spec = sweep_mod.SweepSpec(
            base=doc.scan_config(), axis=args.axis,
            start=getattr(args, "from"), stop=args.to, steps=args.steps,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    records = sweep_mod.run_sweep(spec)
    _write_atomic(args.out, _csv(_SWEEP_HEADER, _sweep_rows(args.axis, records)))
    if not all(rec.ok for rec in records):
        print("numeric: some sweep points failed; see the status column", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def _cmd_table1(args) -> int:
    records = sweep_mod.table1()
    _write_atomic(args.out, _csv(_SWEEP_HEADER, _sweep_rows("beam_length", records)))
    for rec in records:
        print(
            f"beam_length_um={_fmt(rec.param_value * 1e6)} "
            f"phi_deg={_fmt(rec.tilt_deg)} y_max_um={_fmt(rec.y_max_m * 1e6)}"
        )
    return EXIT_OK


def _random_stack(rng: np.random.Generator) -> multimorph.MultimorphStack:
    return multimorph.MultimorphStack(
        substrate_E=rng.uniform(10e9, 500e9),
        substrate_t=rng.uniform(0.2e-6, 20e-6),
        piezo_E=rng.uniform(10e9, 500e9),
        piezo_t=rng.uniform(0.2e-6, 20e-6),
        d31=-rng.uniform(10e-12, 500e-12),
        width=rng.uniform(5e-6, 200e-6),
        length=rng.uniform(100e-6, 2000e-6),
    )


def _verify_checks(nodes: int):
    """Yield (name, residual, tolerance) for the whole verification suite."""
    cfg = sweep_mod.reference_config()
    geometry = cfg.geometry()
    force = multimorph.equivalent_force(geometry.stack, cfg.voltage)
    rigidity = multimorph.equivalent_section(geometry.stack).rigidity
    a, span = geometry.a, geometry.half_span

    problem = oracle.BeamProblem(span=span, a=a, force=force, rigidity=rigidity, nodes=nodes)
    fd = oracle.solve_fd(problem)
    r_closed = scanner.reaction(force, fd.a_snapped, span)
    yield "oracle_reaction", abs(fd.reaction - r_closed) / abs(r_closed), 5e-3
    yield "oracle_profile_maxnorm", oracle.profile_error(problem, fd), 5e-3
    tilt_closed = abs(scanner.tilt(force, fd.a_snapped, span, rigidity))
    yield "oracle_tilt", abs(fd.tilt() - tilt_closed) / tilt_closed, 5e-3

    counts = [101, 201, 401]
    orders = oracle.convergence_orders(counts, oracle.convergence_study(problem, counts))
    yield "oracle_convergence_order", 1.8 - min(orders), 0.0

    half = oracle.BeamProblem(span=span, a=span / 2, force=force, rigidity=rigidity, nodes=nodes)
    fd_half = oracle.solve_fd(half)
    target = -5 * force / 14
    yield "oracle_midspan_reaction", abs(fd_half.reaction - target) / abs(target), 5e-3

    rng = np.random.default_rng(20260824)
    worst_identity = 0.0
    worst_norm = 0.0
    for _ in range(1000):
        stack = _random_stack(rng)
        voltage = rng.uniform(1.0, 100.0) * rng.choice([-1.0, 1.0])
        f_pipeline = multimorph.equivalent_force(stack, voltage)
        f_closed = multimorph.equivalent_force_closed_form(stack, voltage)
        worst_identity = max(worst_identity, abs(f_pipeline - f_closed) / abs(f_closed))
        rigs = [multimorph.equivalent_section(stack, choice).rigidity
                for choice in ("substrate", "piezo", "max")]
        worst_norm = max(worst_norm, (max(rigs) - min(rigs)) / max(rigs))
    yield "closed_form_identity", worst_identity, 1e-10
    yield "normalization_independence", worst_norm, 1e-12

    worst_profile = 0.0
    for _ in range(100):
        stack = _random_stack(rng)
        voltage = rng.uniform(1.0, 100.0) * rng.choice([-1.0, 1.0])
        f = multimorph.equivalent_force_closed_form(stack, voltage)
        rig = multimorph.equivalent_section(stack).rigidity
        aa = rng.uniform(10e-6, 500e-6)
        sp = aa + stack.length
        y_max, _ = scanner.max_deflection(f, aa, sp, rig)
        res = max(
            abs(scanner.profile_half(0.0, f, aa, sp, rig)),
            abs(scanner.profile_half(sp, f, aa, sp, rig)),
            abs(scanner.profile_half_slope(sp, f, aa, sp, rig)) * sp,
            abs(scanner._mirror_branch(aa, f, aa, sp, rig)
                - scanner._beam_branch(aa, f, aa, sp, rig)),
            abs(scanner._mirror_branch_slope(f, aa, sp, rig)
                - scanner._beam_branch_slope(aa, f, aa, sp, rig)) * sp,
            abs(math.tan(abs(scanner.tilt(f, aa, sp, rig)))
                - abs(scanner.profile_half_slope(0.0, f, aa, sp, rig))) * sp,
        )
        worst_profile = max(worst_profile, res / y_max)
    yield "profile_invariants", worst_profile, 1e-12


def _cmd_verify(args) -> int:
    if args.nodes < 11 or args.nodes % 2 == 0:
        raise ConfigError("--nodes must be odd and >= 11")
    print(
        "assumed constants: "
        f"silicon E={_fmt(materials.SILICON_E)} Pa, "
        f"pzt-5h E={_fmt(materials.PZT5H_E)} Pa "
        f"d31={_fmt(materials.PZT5H_D31)} m/V s11E={_fmt(materials.PZT5H_S11E)} 1/Pa"
    )
    failures = 0
    for name, residual, tol in _verify_checks(args.nodes):
        ok = residual <= tol
        failures += 0 if ok else 1
        print(f"{name}: residual={_fmt(residual)} tol={_fmt(tol)} {'PASS' if ok else 'FAIL'}")
    if failures:
        print(f"verify: {failures} check(s) exceeded tolerance", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="piezoscanner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model", help="evaluate one design and write model.csv")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default="model.csv")
    p.set_defaults(func=_cmd_model)

    p = sub.add_parser("profile", help="export the full-device deflection profile")
    p.add_argument("--config", required=True)
    p.add_argument("--samples", type=int, default=401)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("sweep", help="sweep one parameter and export records")
    p.add_argument("--config", required=True)
    p.add_argument("--axis", required=True, choices=sorted(sweep_mod.AXES))
    p.add_argument("--from", type=float, required=True)
    p.add_argument("--to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("table1", help="evaluate the three reference designs")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("verify", help="run the oracle and identity verification suite")
    p.add_argument("--nodes", type=int, default=2001)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (
        materials.UnknownMaterialError,
        materials.UnsupportedUnitError,
    ) as exc:
        print(f"config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, ArithmeticError) as exc:
        print(f"numeric: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"config: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

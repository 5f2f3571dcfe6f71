"""Command-line front end.

Subcommands:
  verify       run every identity suite and report pass/fail per claim
  residual     evaluate a named system's equations on a fields file
  manufacture  write an exact solution file for the monochromatic system
  oracle       cross-check a field's closed-form derivative by quadrature

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .errors import FracQuatError
from .fracfield import FracField
from .oracle import compare_axis, kernel_backend
from .physsys import (
    catalog_residual,
    catalog_systems,
    manufacture_maxwell,
    maxwell_payload_to_json,
    parse_payload,
)
from .report import suite_report_csv, suite_report_json
from .sampling import random_vector
from .verify import ORACLE_TOLERANCE, RunConfig, run_all


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON run configuration")
    common.add_argument("--format", choices=("json", "csv"), default=None, help="report format (default from config, else json)")
    common.add_argument("--tolerance", type=float, help="relative tolerance for identity rows")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp for byte-stable reports")
    common.add_argument("--out", metavar="PATH", help="write the output to a file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="fracquat",
        description="Exact verification of fractional vector-calculus and "
        "biquaternionic field identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", parents=[common], help="run all identity suites")

    p_res = sub.add_parser("residual", parents=[common], help="evaluate one system's residuals")
    p_res.add_argument("--system", required=True, choices=catalog_systems())
    p_res.add_argument("--fields", required=True, metavar="PATH", help="named-slot fields JSON")

    p_man = sub.add_parser("manufacture", parents=[common], help="emit an exact monochromatic solution file")
    p_man.add_argument("--seed", type=int, default=42)

    p_orc = sub.add_parser("oracle", parents=[common], help="quadrature cross-check of one field")
    p_orc.add_argument("--mu", required=True, help="derivative order in (0,1), e.g. 1/2")
    p_orc.add_argument("--axis", type=int, default=1, choices=(1, 2, 3))
    p_orc.add_argument("--fields", required=True, metavar="PATH", help="single field-spec JSON")
    return parser


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FracQuatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FracQuatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _load_config(args) -> RunConfig:
    cfg = RunConfig.from_dict(_load_json(args.config)) if args.config else RunConfig()
    overrides = {}
    if args.tolerance is not None:
        overrides["tolerance"] = args.tolerance
    if args.format is not None:
        overrides["format"] = args.format
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    return cfg


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    cfg = _load_config(args)
    rows = run_all(cfg)
    meta = cfg.meta()
    meta["kernel_backend"] = kernel_backend()
    if cfg.format == "csv":
        _emit(args, suite_report_csv(rows))
    else:
        _emit(args, suite_report_json(rows, meta, timestamp=not args.no_timestamp))
    return 0 if all(r.passed for r in rows) else 1


def _cmd_residual(args) -> int:
    cfg = _load_config(args)
    data = _load_json(args.fields)
    payload = parse_payload(args.system, data)
    # a manufactured file carries its own medium/orders; they win so the
    # file stays reproducible independent of the run configuration
    orders = payload.pop("orders", cfg.orders)
    medium = payload.pop("medium", cfg.medium)
    report = catalog_residual(
        args.system,
        payload,
        orders,
        medium=medium if args.system == "maxwell" else None,
        tolerance=cfg.tolerance,
        grid=cfg.grid,
        metadata={"fields": args.fields},
    )
    if cfg.format == "csv":
        _emit(args, report.to_csv())
    else:
        _emit(args, report.to_json(timestamp=not args.no_timestamp))
    return 0 if report.passed else 1


def _cmd_manufacture(args) -> int:
    if not args.out:
        raise FracQuatError("manufacture needs --out <path> for the solution file")
    cfg = _load_config(args)
    rng = random.Random(f"manufacture:{args.seed}")
    seed_field = random_vector(rng, cfg.cube)
    em, src = manufacture_maxwell(seed_field, cfg.medium, cfg.orders)
    payload = maxwell_payload_to_json(em, src, cfg.medium, cfg.orders, seed=args.seed)
    Path(args.out).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return 0


def _cmd_oracle(args) -> int:
    cfg = _load_config(args)
    try:
        mu = Fraction(args.mu)
    except (ValueError, ZeroDivisionError) as exc:
        raise FracQuatError(f"bad order {args.mu!r}: {exc}") from exc
    if not (0 < mu < 1):
        raise FracQuatError(f"oracle order must lie strictly inside (0, 1), got {mu}")
    field = FracField.from_dict(_load_json(args.fields))
    err_n = compare_axis(field, args.axis, "caputo", mu, cfg.oracle_n)
    err_2n = compare_axis(field, args.axis, "caputo", mu, 2 * cfg.oracle_n)
    ratio = err_n / err_2n if err_2n > 0 else None
    passed = err_n <= ORACLE_TOLERANCE
    out = {
        "axis": args.axis,
        "mu": str(mu),
        "n": cfg.oracle_n,
        "error": err_n,
        "error_2n": err_2n,
        "convergence_ratio": ratio,
        "tolerance": ORACLE_TOLERANCE,
        "pass": passed,
        "kernel_backend": kernel_backend(),
    }
    _emit(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0 if passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "residual": _cmd_residual,
        "manufacture": _cmd_manufacture,
        "oracle": _cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except FracQuatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

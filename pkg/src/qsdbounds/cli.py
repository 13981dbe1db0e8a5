"""Command-line surface: single-ensemble reports, theta sweeps, file validation.

Exit codes: 0 success, 2 schema/usage error, 3 ensemble invariant violation,
4 unwritable output path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .ensemble import (
    Ensemble,
    load_json,
    make_four_state,
    make_three_state,
    parse_json,
)
from .entropy import entropic_bound
from .errors import QsdError, SchemaError
from .bounds import pairwise_bound, srm_bound, helstrom
from .hermitian import HERMITICITY_ATOL, hermiticity_residual, hermitize
from .oracle import optimal_success
from .plot import render_svg
from .report import full_report

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_INVARIANT = 3
EXIT_OUTPUT = 4

GENERATOR_FAMILIES = ("three_state_original", "three_state_replaced", "four_state")
BOUND_COLUMNS = ("entropic", "srm", "pairwise", "helstrom", "oracle")


# --- deterministic JSON with 17-significant-digit floats ---------------------


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in JSON output")
    s = f"{x:.17g}"
    if not any(c in s for c in ".eE"):
        s += ".0"
    return s


def _to_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}{json.dumps(k)}: {_to_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{_to_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


# --- ensemble sources ---------------------------------------------------------


def _generate(family: str, theta: float, q: float) -> Ensemble:
    if family == "three_state_original":
        return make_three_state(theta, "original")
    if family == "three_state_replaced":
        return make_three_state(theta, "replaced_psi2")
    if family == "four_state":
        return make_four_state(theta, q)
    raise SchemaError(f"family: unknown generator {family!r}")


def _read_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"input: cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input: invalid JSON in {path}: {exc}") from exc


def _load_ensemble(path: str) -> Ensemble:
    label, probs, states, vectors = parse_json(_read_doc(path))
    return Ensemble(probs, states, vectors, label)


def _ensemble_from_args(args) -> Ensemble:
    if args.input is not None:
        return _load_ensemble(args.input)
    if args.family is None:
        raise SchemaError("input: provide an ensemble JSON path or --family")
    if args.family == "file":
        raise SchemaError("input: --family file requires an ensemble JSON path")
    return _generate(args.family, args.theta, args.q)


# --- diagnostics shared by report and validate --------------------------------


def _member_diagnostics(probs: np.ndarray, states: np.ndarray) -> dict:
    members = []
    for x in range(states.shape[0]):
        herm_res = hermiticity_residual(states[x])
        w = np.linalg.eigvalsh(hermitize(states[x]))
        members.append(
            {
                "trace": float(np.real(np.trace(states[x]))),
                "min_eigenvalue": float(w[0]),
                "hermiticity_residual": float(herm_res),
            }
        )
    return {"prob_sum": float(probs.sum()), "members": members}


def _diagnostic_failures(probs: np.ndarray, diag: dict) -> list[str]:
    failures = []
    if abs(diag["prob_sum"] - 1.0) > 1e-10:
        failures.append(f"probability sum is {diag['prob_sum']!r}, expected 1")
    if np.any(probs < -1e-12) or np.any(probs > 1 + 1e-12):
        failures.append("a probability lies outside [0, 1]")
    for x, m in enumerate(diag["members"]):
        if m["hermiticity_residual"] > HERMITICITY_ATOL:
            failures.append(
                f"member {x}: Hermiticity violation (residual {m['hermiticity_residual']:.3e})"
            )
        if m["min_eigenvalue"] < -1e-10:
            failures.append(
                f"member {x}: PSD violation (min eigenvalue {m['min_eigenvalue']:.3e})"
            )
        if abs(m["trace"] - 1.0) > 1e-10:
            failures.append(f"member {x}: trace {m['trace']!r} is not 1")
    return failures


# --- subcommands ---------------------------------------------------------------


def cmd_report(args) -> int:
    e = _ensemble_from_args(args)
    rep = full_report(e, tol=args.tol, max_iter=args.max_iter)
    res = rep.oracle
    mid = 0.5 * (res.primal + res.dual)
    bounds: dict = {"entropic": rep.bounds.entropic, "srm": rep.bounds.srm}
    if rep.bounds.pairwise is not None:
        bounds["pairwise"] = rep.bounds.pairwise
    if rep.bounds.helstrom is not None:
        bounds["helstrom"] = rep.bounds.helstrom
    doc = {
        "label": e.label,
        "dim": e.dim,
        "n_states": e.n_states,
        "probs": [float(p) for p in e.probs],
        "entropy": {
            "h_x": rep.profile.h_x,
            "s_avg": rep.profile.s_avg,
            "s_members": list(rep.profile.s_members),
            "holevo": rep.profile.holevo,
            "cond": rep.profile.cond,
        },
        "bounds": bounds,
        "oracle": {
            "primal": res.primal,
            "dual": res.dual,
            "gap": res.gap,
            "iterations": res.iterations,
            "converged": res.converged,
            "min_entropy_bits": float(-np.log2(mid)),
            "min_entropy_half_width": float(0.5 * np.log2(res.dual / res.primal)),
        },
        "validation": _member_diagnostics(e.probs, e.states),
    }
    print(_to_json(doc))
    return EXIT_OK


def cmd_validate(args) -> int:
    label, probs, states, _ = parse_json(_read_doc(args.input))
    diag = _member_diagnostics(probs, states)
    for x, m in enumerate(diag["members"]):
        print(
            f"member {x}: trace={m['trace']:.12g} "
            f"min_eigenvalue={m['min_eigenvalue']:.12g} "
            f"hermiticity_residual={m['hermiticity_residual']:.12g}"
        )
    print(f"probability sum: {diag['prob_sum']:.12g}")
    failures = _diagnostic_failures(probs, diag)
    if failures:
        for line in failures:
            print(f"FAIL: {line}")
        return EXIT_INVARIANT
    print("OK")
    return EXIT_OK


def _sweep_columns(requested: list[str]) -> list[str]:
    cols = []
    for name in ("entropic", "srm", "pairwise", "helstrom"):
        if name in requested:
            cols.append(name)
    if "oracle" in requested:
        cols.extend(["oracle_primal", "oracle_dual"])
    return cols


def _sweep_row(e: Ensemble, requested: list[str], tol: float, max_iter: int) -> dict:
    row = {}
    if "entropic" in requested:
        row["entropic"] = entropic_bound(e)
    if "srm" in requested:
        row["srm"] = srm_bound(e)
    if "pairwise" in requested:
        row["pairwise"] = pairwise_bound(e)
    if "helstrom" in requested:
        row["helstrom"] = helstrom(e)
    if "oracle" in requested:
        res = optimal_success(e, tol=tol, max_iter=max_iter)
        row["oracle_primal"] = res.primal
        row["oracle_dual"] = res.dual
    return row


def cmd_sweep(args) -> int:
    requested = [b.strip() for b in args.bounds.split(",") if b.strip()]
    for name in requested:
        if name not in BOUND_COLUMNS:
            raise SchemaError(
                f"bounds: unknown bound {name!r}; choose from {', '.join(BOUND_COLUMNS)}"
            )
    if not requested:
        raise SchemaError("bounds: at least one bound is required")
    if args.points < 2:
        raise SchemaError(f"points: need at least 2 grid points, got {args.points}")
    if not args.theta_min < args.theta_max:
        raise SchemaError(
            f"theta range: need theta-min < theta-max, got [{args.theta_min}, {args.theta_max}]"
        )
    if args.family is None:
        raise SchemaError("family: required for sweep")
    if args.family == "file" and args.input is None:
        raise SchemaError("input: --family file requires --input")

    grid = np.linspace(args.theta_min, args.theta_max, args.points)
    columns = _sweep_columns(requested)
    rows = []
    if args.family == "file":
        # a fixed ensemble has no theta dependence: evaluate once, replicate
        row = _sweep_row(_load_ensemble(args.input), requested, args.tol, args.max_iter)
        rows = [row] * args.points
    else:
        for theta in grid:
            e = _generate(args.family, float(theta), args.q)
            rows.append(_sweep_row(e, requested, args.tol, args.max_iter))

    lines = ["theta," + ",".join(columns)]
    for theta, row in zip(grid, rows):
        lines.append(
            ",".join([f"{theta:.17g}"] + [f"{row[c]:.17g}" for c in columns])
        )
    csv_text = "\n".join(lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    except OSError as exc:
        print(f"output error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT

    if args.svg is not None:
        series = {c: np.array([row[c] for row in rows]) for c in columns}
        svg_text = render_svg(grid, series, title=args.family)
        try:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(svg_text)
        except OSError as exc:
            print(f"output error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_OUTPUT
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def _add_oracle_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-8, help="oracle duality-gap tolerance")
    p.add_argument(
        "--max-iter", type=int, default=10000, help="oracle iteration budget"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsdbounds",
        description="Lower bounds and a certified oracle for quantum state discrimination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="compute every applicable bound for one ensemble")
    p_report.add_argument("input", nargs="?", default=None, help="ensemble JSON path")
    p_report.add_argument(
        "--family", choices=GENERATOR_FAMILIES + ("file",), default=None
    )
    p_report.add_argument("--theta", type=float, default=0.0, help="generator angle (rad)")
    p_report.add_argument("--q", type=float, default=0.5, help="four-state weight parameter")
    _add_oracle_flags(p_report)
    p_report.set_defaults(func=cmd_report)

    p_sweep = sub.add_parser("sweep", help="sweep a family over theta and write CSV/SVG")
    p_sweep.add_argument("--family", choices=GENERATOR_FAMILIES + ("file",), default=None)
    p_sweep.add_argument("--input", default=None, help="ensemble JSON path (family=file)")
    p_sweep.add_argument("--theta-min", type=float, default=0.0)
    p_sweep.add_argument("--theta-max", type=float, default=math.pi / 2)
    p_sweep.add_argument("--points", type=int, default=181)
    p_sweep.add_argument("--q", type=float, default=0.5)
    p_sweep.add_argument(
        "--bounds",
        default="entropic,srm,pairwise",
        help="comma list from: entropic,srm,pairwise,helstrom,oracle",
    )
    p_sweep.add_argument("--out", required=True, help="CSV output path")
    p_sweep.add_argument("--svg", default=None, help="optional SVG output path")
    _add_oracle_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_validate = sub.add_parser("validate", help="check an ensemble JSON file's invariants")
    p_validate.add_argument("input", help="ensemble JSON path")
    p_validate.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except QsdError as exc:
        print(f"invalid ensemble: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command line: ``graphricci {curvature,coxeter,spectral,bounds,verify} ...``.

Structured output is JSON with sorted keys; floats carry 12 significant
digits and exact rationals are printed as fraction strings.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import coxeter as cx
from .curvature import (
    curvature_matrix,
    global_ricci,
    no_tri_quad_bounds,
    triangle_free_lower_bound,
    triangle_upper_bound,
)
from .errors import InputFileError, RicciError
from .graph import find_quadrilateral, find_triangle, load_graph, local_neighborhood, max_joint_triangles
from .linalg import eigenvalues_symmetric
from .spectral import (
    cayley_gap_lower_bound,
    check_gap_vs_curvature,
    coxeter_isoperimetric_coefficient,
    spectral_profile,
)
from .verify import run_scope

EXIT_SUITE_FAILURE = 4

NOTE_TRIANGLE_WEIGHTS = (
    "curvature matrix uses triangle weights +5/2 t_v (diagonal) and -2 T(v,v') (off-diagonal); "
    "the often-quoted weights +3/2 t_v and +2 T(v,v') disagree with the definitional Gamma_2 oracle"
)
NOTE_LOWER_SIGN = (
    "triangle-free lower bound uses 4 - max(3 d(x) + d(y))/2 over ordered adjacent pairs "
    "(the '+' reading; a '-' variant appears in one derivation line and is not used)"
)
NOTE_UPPER_ENDPOINT = (
    "no-triangle/no-quadrilateral upper bound uses (4 + d(x) - d(v))/2; "
    "the (2 + d(x) - d(v))/2 form fails on K2"
)
NOTE_D3 = (
    "D3 = A3: spectral value -1 agrees with the explicit 24-vertex Cayley graph; "
    "the literature approximation -1.7 is not reproduced by the commutation matrix"
)
NOTE_E6 = (
    "E6: largest eigenvalue of M_E6 is 4.30277563773 (root of x^2 - 5x + 3), "
    "not the quoted 4.3082775; the reference constant keeps the quoted decimal"
)
NOTE_EXPONENT = (
    "isoperimetric coefficient uses the |S|^|T| * |T| denominator; "
    "a |S|^(|T|+1) variant appears in one derivation step and is not used"
)
NOTE_AFFINE_A = (
    "~A_n has n+1 generators on a cycle; curvature is 2 - max_j (2 - 2 cos(2 pi j / k)) "
    "with k = number of generators, equal to -2 exactly when k is even"
)


ZERO_SNAP = 1e-12


def fmt(x):
    if isinstance(x, float):
        if math.isinf(x) or math.isnan(x):
            return str(x)
        if abs(x) < ZERO_SNAP:
            return 0.0
        return float(f"{x:.12g}")
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return fmt(obj)


def emit(report: dict, fmt_name: str, out=None) -> None:
    out = out or sys.stdout
    report = _clean(report)
    if fmt_name == "structured":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        return
    for key in report:
        value = report[key]
        if isinstance(value, dict) and value and all(not isinstance(v, (dict, list)) for v in value.values()):
            out.write(f"{key}:\n")
            for k, v in value.items():
                out.write(f"  {k:<24} {v}\n")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for item in value:
                out.write("  " + "  ".join(f"{k}={v}" for k, v in item.items()) + "\n")
        elif isinstance(value, list) and key == "notes":
            for note in value:
                out.write(f"note: {note}\n")
        else:
            out.write(f"{key}: {value}\n")


def _read_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc.strerror}") from None
    return load_graph(text)


def _bound_entries(report):
    return [
        {"name": b.name, "kind": b.kind, "value": b.value, "satisfied": b.satisfied}
        for b in report.bounds
    ]


def cmd_curvature(args) -> int:
    g = _read_graph(args.input)
    report = global_ricci(g, oracle=args.oracle)
    out = {
        "command": "curvature",
        "vertices": len(g),
        "edges": g.num_edges(),
        "per_vertex": dict(report.per_vertex),
        "global": report.global_,
        "bounds": _bound_entries(report),
        "notes": [],
    }
    if args.oracle:
        out["oracle"] = dict(report.oracle)
        out["max_oracle_deviation"] = report.max_oracle_deviation
    if args.matrices:
        out["matrices"] = {
            x: {"order": list(cm.order), "entries": cm.matrix.as_strings()}
            for x in g.vertices
            for cm in [curvature_matrix(local_neighborhood(g, x))]
        }
    if find_triangle(g) is not None:
        out["notes"].append(NOTE_TRIANGLE_WEIGHTS)
    else:
        out["notes"].append(NOTE_LOWER_SIGN)
        if find_quadrilateral(g) is None:
            out["notes"].append(NOTE_UPPER_ENDPOINT)
    emit(out, args.format)
    return 0


def cmd_bounds(args) -> int:
    g = _read_graph(args.input)
    report = global_ricci(g)
    out = {
        "command": "bounds",
        "global": report.global_,
        "max_joint_triangles": max_joint_triangles(g),
        "triangle_upper": triangle_upper_bound(g),
        "bounds": _bound_entries(report),
        "notes": [],
    }
    if find_triangle(g) is None:
        out["triangle_free_lower"] = triangle_free_lower_bound(g)
        out["notes"].append(NOTE_LOWER_SIGN)
        if find_quadrilateral(g) is None:
            lo, hi = no_tri_quad_bounds(g)
            out["no_tri_quad"] = {"lower": lo, "upper": hi}
            out["notes"].append(NOTE_UPPER_ENDPOINT)
    emit(out, args.format)
    return 0 if all(b.satisfied for b in report.bounds) else EXIT_SUITE_FAILURE


def cmd_spectral(args) -> int:
    g = _read_graph(args.input)
    prof = spectral_profile(g)
    verdict = check_gap_vs_curvature(g)
    out = {
        "command": "spectral",
        "laplacian_eigenvalues": list(prof.laplacian_eigenvalues),
        "spectral_gap": prof.spectral_gap,
        "diameter": prof.diameter,
        "gap_vs_curvature": {"status": verdict.status, "detail": verdict.detail},
    }
    emit(out, args.format)
    return 0 if verdict.ok else EXIT_SUITE_FAILURE


def _closed_form_entry(d):
    try:
        closed = cx.weak_order_ricci_closed_form(d)
    except RicciError:
        return None
    if isinstance(closed, cx.Interval):
        return {"kind": "interval", "lower": closed.lower, "upper": closed.upper}
    return {"kind": cx.closed_form_kind(d), "value": closed}


def coxeter_report(tag: str, explicit: bool = True) -> dict:
    parts = cx.parse_tag(tag)
    notes = []
    factors = []
    for d in parts:
        m = cx.commutation_matrix(d)
        eigs = eigenvalues_symmetric(m).eigenvalues
        entry = {
            "type": d.label,
            "rank": d.rank,
            "spectral": 2 - eigs[-1],
            "closed_form": _closed_form_entry(d),
            "commutation_eigenvalues": sorted(eigs, reverse=True),
        }
        if explicit:
            try:
                model = cx.model_for(d)
            except RicciError:
                model = None
            if model is not None:
                g = cx.weak_order_graph(model)
                entry["explicit_cayley"] = {
                    "vertices": len(g),
                    "curvature": global_ricci(g).global_,
                    "relations_ok": cx.check_relations(model, d),
                }
        factors.append(entry)
        if d.family == "D" and d.parameter == 3:
            notes.append(NOTE_D3)
        if d.family == "E6":
            notes.append(NOTE_E6)
        if d.family == "~A":
            notes.append(NOTE_AFFINE_A)
    out = {"command": "coxeter", "tag": tag, "factors": factors}
    out["ricci"] = cx.product_ricci(parts)
    if len(parts) > 1:
        combined = cx.block_diagram(parts)
        out["ricci_combined_diagram"] = cx.weak_order_ricci_spectral(combined)
    finite = all(not d.family.startswith("~") for d in parts)
    if finite:
        order = math.prod(cx.group_order(d) for d in parts)
        reflections = sum(cx.reflection_count(d) for d in parts)
        gens = sum(d.rank for d in parts)
        coeff, log_coeff = coxeter_isoperimetric_coefficient(order, gens, reflections, out["ricci"])
        out["isoperimetry"] = {
            "group_order": order,
            "generators": gens,
            "reflections": reflections,
            "gap_lower_bound": cayley_gap_lower_bound(order, gens, reflections),
            "coefficient": coeff,
            "log10_coefficient": log_coeff,
            "branch": "dihedral" if abs(out["ricci"]) <= 1e-9 else "curvature",
        }
        notes.append(NOTE_EXPONENT)
    out["notes"] = notes
    return out


def cmd_coxeter(args) -> int:
    emit(coxeter_report(args.input, explicit=not args.no_explicit), args.format)
    return 0


def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("RICCI_SEED", "0"))
    results = run_scope(args.input, seed=seed, samples=args.samples)
    ok = all(r.ok for r in results)
    out = {
        "command": "verify",
        "scope": args.input,
        "seed": seed,
        "passed": ok,
        "checks": [
            {
                "suite": r.scope,
                "name": c.name,
                "ok": c.ok,
                "count": c.count,
                "worst": c.worst,
                "witness": c.witness,
            }
            for r in results
            for c in r.checks
        ],
    }
    emit(out, args.format)
    return 0 if ok else EXIT_SUITE_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphricci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler, input_help, **extra):
        p = sub.add_parser(name)
        p.add_argument("input", help=input_help, **extra)
        p.add_argument("--format", choices=("table", "structured"), default="table")
        p.set_defaults(handler=handler)
        return p

    p = add("curvature", cmd_curvature, "edge-list file")
    p.add_argument("--oracle", action="store_true", help="also run the definitional oracle")
    p.add_argument("--matrices", action="store_true", help="print exact curvature matrices")
    add("bounds", cmd_bounds, "edge-list file")
    add("spectral", cmd_spectral, "edge-list file")
    p = add("coxeter", cmd_coxeter, "type tag such as A3, I2:7, ~D4 or A2xA3")
    p.add_argument("--no-explicit", action="store_true", help="skip explicit Cayley graphs")
    p = add("verify", cmd_verify, "suite", choices=("operators", "bounds", "coxeter", "isoperimetry", "all"))
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default: $RICCI_SEED or 0)")
    p.add_argument("--samples", type=int, default=100_000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except RicciError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

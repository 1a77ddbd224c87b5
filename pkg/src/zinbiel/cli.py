"""Command line front end.

Exit codes: 0 = success / all checks pass, 1 = a mathematical check failed
(a witness is printed), 2 = usage or parse error.  Machine-readable output
uses --format json; identical invocations produce byte-identical JSON.
"""

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebras import AxiomReport, Bimodule, FiniteAlgebra, check_axioms, regular
from .catalog import builtin as catalog_builtin
from .complexes import cohomology_dims, dl_delta_matrix
from .fileio import (
    algebra_to_dict,
    bimodule_to_dict,
    is_bimodule_data,
    load_algebra,
    load_bimodule,
    save_algebra,
    save_bimodule,
)
from .free_leibniz import DEFAULT_DIM_CAP
from .linalg import format_scalar
from .tensor_bridge import (
    PsiNotInjectiveError,
    les_report,
    tensor_lie,
    verify_chain_map,
)

DIM_CAP_ENV = "ZINBIEL_DIM_CAP"

_MODULE_FAMILY = {
    "zinbiel": "zinbiel-bimodule",
    "leibniz": "leibniz-representation",
    "lie": "lie-module",
}


class UsageError(Exception):
    pass


def _emit_json(data: dict) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _dim_cap(args: argparse.Namespace) -> int:
    if args.dim_cap is not None:
        return args.dim_cap
    raw = os.environ.get(DIM_CAP_ENV)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{DIM_CAP_ENV} must be an integer, got {raw!r}")
    return DEFAULT_DIM_CAP


def _load_operand(spec: str, dim_cap: int) -> Union[FiniteAlgebra, Bimodule]:
    """Resolve 'builtin:NAME' against the catalog, anything else as a file."""
    if spec.startswith("builtin:"):
        try:
            return catalog_builtin(spec[len("builtin:"):], dim_cap=dim_cap)
        except ValueError as exc:
            raise UsageError(str(exc))
    if not os.path.exists(spec):
        raise UsageError(
            f"no such file: {spec} (catalog entries need the builtin: prefix)"
        )
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {spec}: {exc}")
    try:
        return load_bimodule(spec) if is_bimodule_data(data) else load_algebra(spec)
    except ValueError as exc:
        raise UsageError(f"{spec}: {exc}")


def _load_algebra_operand(spec: str, dim_cap: int, flag: str) -> FiniteAlgebra:
    obj = _load_operand(spec, dim_cap)
    if isinstance(obj, Bimodule):
        raise UsageError(f"{flag} expects an algebra, got a bimodule ({spec})")
    return obj


def _witness_lines(witness: Optional[dict], indent: str = "  ") -> List[str]:
    if not witness:
        return []
    lines = []
    for key, value in witness.items():
        if isinstance(value, dict):
            shown = ", ".join(f"{n}: {c}" for n, c in value.items()) or "0"
        elif isinstance(value, (list, tuple)):
            shown = ", ".join(str(v) for v in value)
        else:
            shown = str(value)
        lines.append(f"{indent}{key}: {shown}")
    return lines


def _axiom_report_dict(name: str, report: AxiomReport) -> dict:
    return {
        "name": name,
        "ok": report.ok,
        "checked": report.checked,
        "witness": report.witness,
    }


def _check_input_axioms(
    g: FiniteAlgebra, B: FiniteAlgebra, fmt: str
) -> Optional[int]:
    """Shared input gate: g must be Leibniz and B Zinbiel, else exit 1."""
    results = [
        ("leibniz", check_axioms(g, "leibniz")),
        ("zinbiel", check_axioms(B, "zinbiel")),
    ]
    bad = [(n, r) for n, r in results if not r.ok]
    if not bad:
        return None
    if fmt == "json":
        _emit_json({"checks": [_axiom_report_dict(n, r) for n, r in results]})
    else:
        for name, rep in bad:
            print(f"input axiom {name}: FAIL")
            for line in _witness_lines(rep.witness):
                print(line)
    return 1


def cmd_check(args: argparse.Namespace) -> int:
    obj = _load_operand(args.target, _dim_cap(args))
    alg = obj.algebra if isinstance(obj, Bimodule) else obj
    if alg.kind not in _MODULE_FAMILY:
        raise UsageError(
            f"no axiom family for algebra kind {alg.kind!r}; "
            f"known kinds: {', '.join(sorted(_MODULE_FAMILY))}"
        )
    results: List[Tuple[str, AxiomReport]] = [
        (alg.kind, check_axioms(alg, alg.kind))
    ]
    if isinstance(obj, Bimodule):
        family = _MODULE_FAMILY[alg.kind]
        results.append((family, check_axioms(alg, family, module=obj)))
    ok = all(r.ok for _, r in results)
    if args.format == "json":
        data = {
            "kind": alg.kind,
            "dim": alg.dim,
            "ok": ok,
            "checks": [_axiom_report_dict(n, r) for n, r in results],
        }
        if isinstance(obj, Bimodule):
            data["module_dim"] = obj.dim
        _emit_json(data)
    else:
        for name, rep in results:
            print(f"{name}: {'PASS' if rep.ok else 'FAIL'}")
            if not rep.ok:
                for line in _witness_lines(rep.witness):
                    print(line)
    return 0 if ok else 1


def cmd_cohomology(args: argparse.Namespace) -> int:
    cap = _dim_cap(args)
    alg = _load_algebra_operand(args.algebra, cap, "--algebra")
    if args.regular:
        module = regular(alg)
    else:
        obj = _load_operand(args.module, cap)
        if not isinstance(obj, Bimodule):
            raise UsageError("--module expects a bimodule file")
        if obj.algebra != alg:
            raise UsageError("--module was built over a different algebra")
        module = obj
    try:
        dims = cohomology_dims(module, args.complex, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        _emit_json({
            "dim_Z": dims.dim_cocycles,
            "dim_B": dims.dim_coboundaries,
            "dim_H": dims.dim_cohomology,
        })
    else:
        n = args.degree
        print(f"complex {args.complex}, degree {n}, coefficient module dim {module.dim}")
        print(f"dim C^{n} = {dims.dim_cochains}")
        print(f"dim Z^{n} = {dims.dim_cocycles}")
        print(f"dim B^{n} = {dims.dim_coboundaries}")
        print(f"dim H^{n} = {dims.dim_cohomology}")
    return 0


def cmd_tensor_lie(args: argparse.Namespace) -> int:
    cap = _dim_cap(args)
    g = _load_algebra_operand(args.leibniz, cap, "--leibniz")
    B = _load_algebra_operand(args.zinbiel, cap, "--zinbiel")
    failed = _check_input_axioms(g, B, args.format)
    if failed is not None:
        return failed
    lie = tensor_lie(g, B, validate=False)
    data = algebra_to_dict(lie)
    if args.output:
        save_algebra(lie, args.output)
        if args.format == "json":
            _emit_json({"dim": lie.dim, "path": args.output})
        else:
            print(f"wrote lie algebra of dimension {lie.dim} to {args.output}")
    else:
        _emit_json(data)
    return 0


def cmd_verify_chain_map(args: argparse.Namespace) -> int:
    cap = _dim_cap(args)
    g = _load_algebra_operand(args.leibniz, cap, "--leibniz")
    B = _load_algebra_operand(args.zinbiel, cap, "--zinbiel")
    try:
        report = verify_chain_map(
            g, B, regular(B), args.degree, trials=args.trials, seed=args.seed
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = report.passed and report.axioms_ok
    if args.format == "json":
        data = report.to_dict()
        data["ok"] = ok
        _emit_json(data)
    else:
        exact = report.trials - len(report.failed_trials)
        print(f"chain map at degree {report.degree}: {exact}/{report.trials} exact")
        for name, rep in report.axioms.items():
            print(f"axiom {name}: {'PASS' if rep.ok else 'FAIL'}")
            if not rep.ok:
                for line in _witness_lines(rep.witness):
                    print(line)
        if report.witness:
            print("first equality failure:")
            for line in _witness_lines(report.witness):
                print(line)
    return 0 if ok else 1


def cmd_les(args: argparse.Namespace) -> int:
    cap = _dim_cap(args)
    g = _load_algebra_operand(args.leibniz, cap, "--leibniz")
    B = _load_algebra_operand(args.zinbiel, cap, "--zinbiel")
    failed = _check_input_axioms(g, B, args.format)
    if failed is not None:
        return failed
    try:
        report = les_report(g, B, regular(B), args.max_degree)
    except PsiNotInjectiveError as exc:
        if args.format == "json":
            _emit_json({"error": str(exc), "failures": exc.failures})
        else:
            print(str(exc))
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = all(row["identity_holds"] for row in report["rows"])
    if args.format == "json":
        _emit_json(report)
    else:
        print(
            f"tensor algebra dim {report['tensor_dim']}, "
            f"module dim {report['tensor_module_dim']}"
        )
        ranks = report["precheck"]["psi_ranks"]
        shown = ", ".join(f"{k}: {v}" for k, v in sorted(ranks.items()))
        print(f"embedding ranks by degree (all full): {shown}")
        header = ("n", "h_dl", "h_dl_n+1", "h_lie", "dim_Q", "h_Q",
                  "rank_n", "rank_n+1", "identity")
        rows = [header]
        for row in report["rows"]:
            verdict = ("holds" if row["identity_holds"] else
                       f"FAILS ({row['identity_lhs']} != {row['identity_rhs']})")
            rows.append((
                row["degree"], row["h_dl"], row["h_dl_next"], row["h_lie"],
                row["dim_quotient"], row["h_quotient"], row["induced_rank"],
                row["induced_rank_next"], verdict,
            ))
        widths = [max(len(str(r[i])) for r in rows) for i in range(len(header))]
        for r in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip())
    return 0 if ok else 1


def cmd_builtin(args: argparse.Namespace) -> int:
    obj = _load_operand(f"builtin:{args.name}", _dim_cap(args))
    if args.output:
        if isinstance(obj, Bimodule):
            save_bimodule(obj, args.output)
        else:
            save_algebra(obj, args.output)
    else:
        data = bimodule_to_dict(obj) if isinstance(obj, Bimodule) else algebra_to_dict(obj)
        _emit_json(data)
    return 0


_SUP = {0: "¹", 1: "²"}
_SUB = {0: "₁", 1: "₂"}


def _alpha_name(col: int) -> str:
    pair, k = divmod(col, 2)
    i, j = divmod(pair, 2)
    return f"α{_SUP[k]}{_SUB[i]}{_SUB[j]}"


def _relation_text(pivot: int, row: Dict[int, Fraction]) -> str:
    """Render a reduced row as 'pivot = combination of free parameters'."""
    terms = []
    for col in sorted(c for c in row if c != pivot):
        coeff = -row[col]
        if terms:
            sign = " - " if coeff < 0 else " + "
        else:
            sign = "-" if coeff < 0 else ""
        mag = abs(coeff)
        head = "" if mag == 1 else f"{format_scalar(mag)}·"
        terms.append(f"{sign}{head}{_alpha_name(col)}")
    rhs = "".join(terms) or "0"
    return f"{_alpha_name(pivot)} = {rhs}"


# Printed claims being reproduced, keyed by the reduced-row pivot column.
_REFERENCE_COCYCLE_ROWS: Dict[int, Dict[int, Fraction]] = {
    0: {0: Fraction(1), 3: Fraction(1), 5: Fraction(-1)},
    2: {2: Fraction(1)},
    4: {4: Fraction(1)},
    6: {6: Fraction(1)},
    7: {7: Fraction(1)},
}
_REFERENCE_LIE2_H2 = 1
MATCH_LABEL = "matches paper"
DIFFER_LABEL = "differs from paper"


def reproduce_example_4_6() -> Tuple[List[str], dict]:
    """Recompute the worked second-cohomology example and diff each claim.

    Returns the text report lines and the machine-readable summary; every
    deviation is an informational note, never an error.
    """
    B = catalog_builtin("B2")
    M = regular(B)
    d1 = dl_delta_matrix(M, 1)
    d2 = dl_delta_matrix(M, 2)
    dim_b = d1.rank()
    dim_z = d2.ncols - d2.rank()
    dim_h = dim_z - dim_b

    reduced = d2.reduced_rows()
    computed_rows = {pivot: dict(row) for pivot, row in reduced}
    constraints = [_relation_text(p, r) for p, r in sorted(computed_rows.items())]
    free_cols = [c for c in range(d2.ncols) if c not in computed_rows]
    free_names = [_alpha_name(c) for c in free_cols]
    constraints_match = computed_rows == _REFERENCE_COCYCLE_ROWS
    constraint_notes = []
    if not constraints_match:
        for pivot in sorted(set(computed_rows) | set(_REFERENCE_COCYCLE_ROWS)):
            got = computed_rows.get(pivot)
            want = _REFERENCE_COCYCLE_ROWS.get(pivot)
            if got != want:
                shown_want = _relation_text(pivot, want) if want else "(absent)"
                shown_got = _relation_text(pivot, got) if got else "(absent)"
                constraint_notes.append(
                    f"computed {shown_got}; printed claim {shown_want}"
                )

    # Coboundary side: columns of the degree-1 differential, indexed by the
    # 1-cochain parameters g^k_i (coefficient of e_k in g(e_i)).
    cols: List[Dict[int, Fraction]] = [{} for _ in range(d1.ncols)]
    for i, row in enumerate(d1.rows):
        for j, c in row.items():
            cols[j][i] = c
    g11, g21, g12, g22 = cols
    dependent = {k: -Fraction(2) * v for k, v in g22.items()}
    coboundary_match = (
        dim_b == 2 and not g21 and g11 == dependent
    )

    lie_dims = cohomology_dims(regular(catalog_builtin("lie2")), "ce", 2)
    lie_h2 = lie_dims.dim_cohomology
    lie_match = lie_h2 == _REFERENCE_LIE2_H2

    lines = [
        "second cohomology of B2 (e1*e1 = e2) with regular coefficients:",
        f"  dim C^2 = {d2.ncols}",
        f"  dim Z^2 = {dim_z}",
        f"  dim B^2 = {dim_b}",
        f"  dim H^2 = {dim_h}",
        "",
        "cocycle constraints on f(e_i, e_j) = Σ_k α^k_ij e_k, computed:",
    ]
    lines += [f"  {c}" for c in constraints]
    lines += [
        f"free cocycle parameters ({len(free_names)}): {', '.join(free_names)}",
        f"constraint list: {MATCH_LABEL if constraints_match else DIFFER_LABEL}",
    ]
    lines += [f"  note: {n}" for n in constraint_notes]
    lines += [
        "",
        f"coboundaries: rank {dim_b}, determined by g¹₂ and 2·g¹₁ - g²₂ "
        "(2 parameters)",
        f"coboundary parameterization: "
        f"{MATCH_LABEL if coboundary_match else DIFFER_LABEL}",
        "",
        "second Chevalley-Eilenberg cohomology of lie2 with adjoint "
        "coefficients:",
        f"  computed dim H^2 = {lie_h2}, printed claim {_REFERENCE_LIE2_H2}",
        f"H^2(lie2, adjoint): {MATCH_LABEL if lie_match else DIFFER_LABEL}",
    ]
    data = {
        "dl_b2_degree2": {
            "dim_C": d2.ncols, "dim_Z": dim_z, "dim_B": dim_b, "dim_H": dim_h,
        },
        "cocycle_constraints": {
            "computed": constraints,
            "free_parameters": free_names,
            "label": MATCH_LABEL if constraints_match else DIFFER_LABEL,
            "notes": constraint_notes,
        },
        "coboundary_parameterization": {
            "rank": dim_b,
            "parameters": ["g¹₂", "2·g¹₁ - g²₂"],
            "label": MATCH_LABEL if coboundary_match else DIFFER_LABEL,
        },
        "lie2_adjoint_h2": {
            "computed": lie_h2,
            "reference": _REFERENCE_LIE2_H2,
            "label": MATCH_LABEL if lie_match else DIFFER_LABEL,
        },
    }
    return lines, data


def cmd_reproduce(args: argparse.Namespace) -> int:
    lines, data = reproduce_example_4_6()
    if args.format == "json":
        _emit_json(data)
    else:
        for line in lines:
            print(line)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format (default text)",
    )
    parser.add_argument(
        "--dim-cap", type=int, default=None, metavar="N",
        help=f"dimension cap for catalog construction "
             f"(default {DEFAULT_DIM_CAP}, or the {DIM_CAP_ENV} variable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zinbiel",
        description="Exact cohomology for Zinbiel algebras, their tensor-product "
                    "Lie algebras, and the embedding between the two theories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run axiom checks on an algebra or bimodule")
    p.add_argument("target", help="file path or builtin:<name>")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cohomology", help="exact cocycle/coboundary/cohomology dims")
    p.add_argument("--complex", choices=("dl", "ce"), required=True)
    p.add_argument("--algebra", required=True, help="file path or builtin:<name>")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--module", help="bimodule file for the coefficients")
    group.add_argument("--regular", action="store_true",
                       help="use the algebra itself as coefficients")
    p.add_argument("--degree", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("tensor-lie", help="build the Lie algebra g⊗B")
    p.add_argument("--leibniz", required=True, help="file path or builtin:<name>")
    p.add_argument("--zinbiel", required=True, help="file path or builtin:<name>")
    p.add_argument("-o", "--output", help="write the algebra file here")
    _add_common(p)
    p.set_defaults(func=cmd_tensor_lie)

    p = sub.add_parser("verify-chain-map",
                       help="check delta(Ψf) = Ψ(delta f) on random cochains")
    p.add_argument("--leibniz", required=True)
    p.add_argument("--zinbiel", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify_chain_map)

    p = sub.add_parser("les", help="long-exact-sequence dimension table")
    p.add_argument("--leibniz", required=True)
    p.add_argument("--zinbiel", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_les)

    p = sub.add_parser("builtin", help="emit a catalog algebra or bimodule")
    p.add_argument("name", help="catalog name, e.g. B2 or freeleibniz(2,3)")
    p.add_argument("-o", "--output", help="write the file here instead of stdout")
    _add_common(p)
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("reproduce", help="recompute a worked example end to end")
    p.add_argument("target", choices=("example-4-6",))
    _add_common(p)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(main())


if __name__ == "__main__":
    run()

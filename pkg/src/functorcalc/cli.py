"""Command-line interface for composing, differentiating and verifying.

Commands

* ``compose``    product of two sequence files, both routes compared
* ``chainrule``  derivative characters of a composite vs the product
* ``derivative`` one partition summand, both routes compared
* ``tower``      tower-stage values of a composite at a space
* ``tn-oracle``  iterated excisive approximation of a cell functor
* ``verify``     the full check battery

Exit codes: 0 success, 1 a check or comparison failed (including a
non-reduced inner sequence), 2 malformed input or arguments, 3 an
evaluation exceeded the stated budget.

Reports are exact: every number printed or serialized is an integer or
a rational string, and report files are byte-identical for identical
run configurations (timings only ever go to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactpoly import TPoly, dims_poly
from .functor import (
    dn_product_value,
    pn_limit_value,
    tower_stage_square_value,
)
from .holim import BudgetError, cells_from_json, cells_sequence, t_n_oracle
from .partitions import partition
from .symseq import (
    SymSeq,
    TruncationError,
    compose,
    compose_plethysm,
    composition_summand,
    evaluate,
    seq_from_json,
    seq_to_json,
    shift_base,
    space_from_json,
    space_to_json,
)
from .trace import composite_derivatives
from .verify import CHECK_NAMES, RunConfig, run_battery


class InputError(Exception):
    """User-supplied file or argument that cannot be used (exit code 2)."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_seq(path: str) -> SymSeq:
    try:
        return seq_from_json(_load_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_cells(path: str):
    data = _load_json(path)
    if isinstance(data, dict) and "cells" in data:
        data = data["cells"]
    try:
        return cells_from_json(data)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise InputError(f"degree list {text!r} must be comma-separated integers") from exc


def _space_from_args(args) -> TPoly:
    if getattr(args, "space_file", None):
        try:
            return space_from_json(_load_json(args.space_file))
        except ValueError as exc:
            raise InputError(f"{args.space_file}: {exc}") from exc
    degs = _parse_degrees(args.space)
    return dims_poly({d: degs.count(d) for d in set(degs)})


def _emit(doc: dict, json_out: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if json_out is None:
        return
    if json_out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {json_out}: {exc}") from exc


def _dims_lines(X: TPoly) -> str:
    if not X:
        return "0"
    return " + ".join(
        f"{X.coeff(d)}·t^{d}" if d else f"{X.coeff(d)}" for d in X.support()
    )


def _require_reduced(B: SymSeq, label: str):
    if not B.is_reduced():
        print(f"{label} has a constant term; the inner sequence of a composite "
              f"must be reduced", file=sys.stderr)
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# commands


def cmd_compose(args) -> int:
    A = _load_seq(args.outer)
    B = _load_seq(args.inner)
    _require_reduced(B, args.inner)
    try:
        lhs = compose(A, B, signed=args.signed, bound=args.bound)
        rhs = compose_plethysm(A, B, signed=args.signed, bound=args.bound)
    except TruncationError as exc:
        raise InputError(str(exc)) from exc
    window = lhs.bound if lhs.bound is not None else lhs.degree()
    agree = lhs.agrees_with(rhs, window)
    for n in sorted(lhs.entries):
        print(f"entry {n}: dim {_dims_lines(lhs.entry(n).dim_poly())}")
    print(f"window 0..{window}; per-partition and plethysm routes "
          f"{'agree' if agree else 'DISAGREE'}")
    _emit({"result": seq_to_json(lhs), "paths_agree": agree}, args.json_out)
    return 0 if agree else 1


def cmd_chainrule(args) -> int:
    F = _load_seq(args.outer)
    G = _load_seq(args.inner)
    _require_reduced(G, args.inner)
    base = None
    if args.base is not None or getattr(args, "base_file", None):
        if getattr(args, "base_file", None):
            try:
                base = space_from_json(_load_json(args.base_file))
            except ValueError as exc:
                raise InputError(f"{args.base_file}: {exc}") from exc
        else:
            degs = _parse_degrees(args.base)
            base = dims_poly({d: degs.count(d) for d in set(degs)})
    if base is not None and not (F.complete and G.complete):
        print("a base point mixes every arity into every lower one, so entry 0 "
              "of the shifted composite cannot be verified from truncated "
              "inputs; supply complete sequences or drop --base",
              file=sys.stderr)
        return 2
    windows = [b for b in (F.bound, G.bound) if b is not None]
    if windows and args.bound > min(windows):
        avail = min(windows)
        print(f"inputs are truncated at {avail}: entry {avail + 1} of the "
              f"composite cannot be verified; lower --bound to {avail}",
              file=sys.stderr)
        return 2
    # entry n of a composite with reduced inner sequence only involves
    # entries <= n of either factor, so a truncated input is exact here
    if not F.complete:
        F = F.truncate(args.bound)
    if not G.complete:
        G = G.truncate(args.bound)
    entries = []
    agree = True
    for n in range(args.bound + 1):
        try:
            lhs = composite_derivatives(F, G, n, args.signed, base=base).entry(n)
            if base is None:
                rhs = compose(F, G, signed=args.signed, bound=n).entry(n)
            else:
                inner_value = evaluate(G, base, args.signed)
                rhs = compose(shift_base(F, inner_value, args.signed),
                              shift_base(G, base, args.signed).reduced_part(),
                              signed=args.signed, bound=n).entry(n)
        except TruncationError:
            print(f"inputs are truncated too low: entry {n} of the composite "
                  f"cannot be verified; supply complete sequences or lower "
                  f"--bound below {n}", file=sys.stderr)
            return 2
        ok = lhs == rhs
        agree = agree and ok
        print(f"entry {n}: derivative and product characters "
              f"{'agree' if ok else 'DISAGREE'}")
        entries.append({"n": n, "agree": ok})
    _emit({
        "bound": args.bound,
        "base": space_to_json(base) if base is not None else None,
        "entries": entries,
        "agree": agree,
    }, args.json_out)
    return 0 if agree else 1


def cmd_derivative(args) -> int:
    F = _load_seq(args.outer)
    G = _load_seq(args.inner)
    _require_reduced(G, args.inner)
    parts = _parse_degrees(args.partition)
    if not parts or any(p < 1 for p in parts):
        raise InputError(f"{args.partition!r} is not a partition (positive parts)")
    lam = partition(parts)
    n = sum(lam)
    try:
        summand = composition_summand(F, G, lam, args.signed)
        from .functor import fgl_derivatives

        routed = fgl_derivatives(F, G, lam, n, args.signed).entry(n)
    except TruncationError as exc:
        raise InputError(str(exc)) from exc
    agree = summand == routed
    print(f"summand of the partition {list(lam)} at arity {n}: "
          f"dim {_dims_lines(summand.dim_poly())}")
    print(f"induction and trace routes {'agree' if agree else 'DISAGREE'}")
    _emit({
        "partition": list(lam),
        "character": seq_to_json(SymSeq({n: summand}, bound=n)),
        "routes_agree": agree,
    }, args.json_out)
    return 0 if agree else 1


def cmd_tower(args) -> int:
    F = _load_seq(args.outer)
    G = _load_seq(args.inner)
    _require_reduced(G, args.inner)
    X = _space_from_args(args)
    n = args.stage
    if n < 1:
        raise InputError("stage must be at least 1")
    try:
        composite = compose(F, G, signed=args.signed, bound=n)
    except TruncationError as exc:
        raise InputError(str(exc)) from exc
    stage_value = evaluate(composite.truncate(n), X, args.signed)
    layer_value = evaluate(composite.layer_part(n).truncate(n), X, args.signed)
    print(f"stage {n} value: {_dims_lines(stage_value)}")
    print(f"layer {n} value: {_dims_lines(layer_value)}")
    routes: dict[str, bool] = {}
    if len(F.entries) == 1:
        routes["split-limit"] = pn_limit_value(F, G, n, X, args.signed) == stage_value
        routes["layer-product"] = dn_product_value(F, G, n, X, args.signed) == layer_value
    if n <= 3:
        routes["stage-diagram"] = tower_stage_square_value(F, G, n, X, args.signed) == stage_value
    for label, ok in routes.items():
        print(f"route {label}: {'agrees' if ok else 'DISAGREES'}")
    agree = all(routes.values())
    _emit({
        "stage": n,
        "stage_value": space_to_json(stage_value),
        "layer_value": space_to_json(layer_value),
        "routes": routes,
        "agree": agree,
    }, args.json_out)
    return 0 if agree else 1


def cmd_tn_oracle(args) -> int:
    cells = _load_cells(args.cells)
    degs = _parse_degrees(args.space)
    n = args.excision_degree
    if n < 1:
        raise InputError("excision degree must be at least 1")
    seq = cells_sequence(cells)
    point = dims_poly({d: degs.count(d) for d in set(degs)})
    expected_poly = evaluate(seq.truncate(n), point, signed=True)
    window = args.window
    if window is None:
        window = max(list(expected_poly.support()) + list(degs) + [0]) + 2
    try:
        out = t_n_oracle(cells, n, degs, window=window,
                         max_iter=args.max_iter, budget=args.budget)
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    expected = {d: int(expected_poly.coeff(d)) for d in expected_poly.support() if d <= window}
    for i, dims in enumerate(out["history"]):
        shown = ", ".join(f"t^{d}:{v}" for d, v in sorted(dims.items())) or "0"
        print(f"iterate {i}: {shown}")
    matches = out["stable"] == expected
    if out["stable"] is None:
        print(f"no stabilization within {args.max_iter} iterates on degrees <= {window}")
    else:
        print(f"stable on degrees <= {window} after {out['iterations']} iterates; "
              f"{'matches' if matches else 'DIFFERS from'} the truncated functor")
    _emit({
        "excision_degree": n,
        "window": window,
        "history": [{str(d): v for d, v in sorted(h.items())} for h in out["history"]],
        "stable": None if out["stable"] is None else {str(d): v for d, v in sorted(out["stable"].items())},
        "expected": {str(d): v for d, v in sorted(expected.items())},
        "iterations": out["iterations"],
        "matches_truncation": matches,
    }, args.json_out)
    return 0 if matches else 1


def cmd_verify(args) -> int:
    sign_mode = args.sign_mode
    if args.signed:
        sign_mode = "signed"
    try:
        config = RunConfig(seed=args.seed, bound=args.bound, sign_mode=sign_mode,
                           pairs=args.pairs, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report, _times = run_battery(
        config,
        check_names=args.check or None,
        mutate=args.mutate,
        log=lambda line: print(line, file=sys.stderr),
    )
    for record in report["checks"]:
        print(f"{record['status'].upper():4s} {record['check']} "
              f"({record['instances']} instances)")
    print(f"overall: {report['status']}")
    _emit(report, args.json_out)
    return 0 if report["status"] == "pass" else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="functorcalc",
        description="exact composition calculus for derivative sequences of "
                    "polynomial functors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, bound_default=None, bound_help="comparison window"):
        p.add_argument("--signed", action="store_true",
                       help="let permutations act with Koszul signs")
        p.add_argument("--json-out", metavar="PATH", default=None,
                       help="write the JSON report to PATH ('-' for stdout)")
        if bound_default is not None:
            p.add_argument("--bound", type=int, default=bound_default, help=bound_help)

    p = sub.add_parser("compose", help="composition product of two sequence files")
    p.add_argument("outer")
    p.add_argument("inner")
    add_common(p)
    p.add_argument("--bound", type=int, default=None,
                   help="window to compute (default: the full finite support)")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("chainrule", help="derivatives of a composite, two routes")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--base", default=None, metavar="DEGS",
                   help="base point as comma-separated degrees, e.g. 0,0,1")
    p.add_argument("--base-file", default=None, metavar="PATH",
                   help="base point as a graded-space JSON file")
    add_common(p, bound_default=4)
    p.set_defaults(fn=cmd_chainrule)

    p = sub.add_parser("derivative", help="one partition summand of a composite")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--partition", required=True, metavar="PARTS",
                   help="partition as comma-separated parts, e.g. 1,2")
    add_common(p)
    p.set_defaults(fn=cmd_derivative)

    p = sub.add_parser("tower", help="tower stage of a composite at a space")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--stage", type=int, required=True)
    p.add_argument("--space", default="0", metavar="DEGS",
                   help="argument space as comma-separated degrees")
    p.add_argument("--space-file", default=None, metavar="PATH",
                   help="argument space as a graded-space JSON file")
    add_common(p)
    p.set_defaults(fn=cmd_tower)

    p = sub.add_parser("tn-oracle", help="iterate the excisive approximation "
                                         "of a cell functor")
    p.add_argument("cells", help="JSON file with a cell presentation")
    p.add_argument("--excision-degree", type=int, required=True, metavar="N")
    p.add_argument("--space", default="0", metavar="DEGS",
                   help="argument degrees, e.g. 0,0,1")
    p.add_argument("--window", type=int, default=None,
                   help="stabilization window (default: derived from the input)")
    p.add_argument("--max-iter", type=int, default=12)
    p.add_argument("--budget", type=int, default=200000,
                   help="cap on materialized basis sizes")
    p.add_argument("--json-out", metavar="PATH", default=None)
    p.set_defaults(fn=cmd_tn_oracle)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--pairs", type=int, default=100,
                   help="instance count of the main chain-rule check")
    p.add_argument("--budget", type=int, default=200000)
    p.add_argument("--sign-mode", choices=("unsigned", "signed", "both"),
                   default="both")
    p.add_argument("--signed", action="store_true",
                   help="shorthand for --sign-mode signed")
    p.add_argument("--check", action="append", choices=CHECK_NAMES,
                   metavar="NAME", default=None,
                   help="run only the named check (repeatable); one of: "
                        + ", ".join(CHECK_NAMES))
    p.add_argument("--mutate", action="store_true",
                   help="harness self-test: corrupt the composition product "
                        "and expect the independent-route checks to fail")
    p.add_argument("--json-out", metavar="PATH", default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TruncationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

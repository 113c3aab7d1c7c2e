"""Command-line front end.

Three subcommands operate on JSON files and emit line-delimited report
records on stdout:

    skewaffine subspace {dim,classify,intersect,flag,connect} -i FILE [-o FILE]
    skewaffine map {classify,decompose,verify} -i FILE [--trials N] [--seed S]
    skewaffine suite {lemmas,theorem,all} [--seed S] [--trials N]
                     [--height H] [--dim N] [--algebra FILE] [-o FILE]

Exit codes: 0 pass, 1 property or verification failure (a witness record
is emitted), 2 malformed input. When a report file is written, summary
figures are rendered next to it (or into --figures DIR).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import report as report_mod
from . import serialization as ser
from .algebra import Algebra
from .errors import (DecompositionError, InputError, SideUnrepresentable,
                     SkewAffineError)
from .linalg import row_echelon, pivot_complement, Matrix
from .maps import (check_line_preservation, decompose, detect_mode, eval_map,
                   verify_theorem_instance)
from .subspaces import (AffineSubspace, classify_sidedness, connect_planes,
                        extend_to_flag, intersect_affine)
from .suites import CheckResult, SuiteConfig, run_suite


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as err:
        raise InputError(f"{path}: file not found") from err
    except json.JSONDecodeError as err:
        raise InputError(
            f"{path}: invalid JSON at line {err.lineno}, column {err.colno}: "
            f"{err.msg}") from err


def _algebra_of(data: dict, path: str) -> Algebra:
    if "algebra" not in data:
        raise InputError(f"{path}: missing top-level 'algebra' field")
    return ser.algebra_from_json(data["algebra"])


def _emit(records, out_path: Optional[str], figures_dir: Optional[str],
          payload: Optional[dict] = None) -> None:
    text = report_mod.report_text(records)
    sys.stdout.write(text)
    if payload is not None and out_path:
        with open(out_path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    elif out_path:
        report_mod.write_report(records, out_path)
    if out_path or figures_dir:
        outdir = figures_dir or os.path.dirname(os.path.abspath(out_path))
        prefix = (os.path.splitext(os.path.basename(out_path))[0]
                  if out_path else "report")
        report_mod.render_report_figures(records, outdir, prefix)


def _records_of(results) -> list[dict]:
    return report_mod.results_to_records(results)


# -- subspace ----------------------------------------------------------------


def cmd_subspace(args) -> int:
    data = _load_json(args.input)
    algebra = _algebra_of(data, args.input)
    action = args.action

    def load_single():
        if "subspace" not in data:
            raise InputError(f"{args.input}: missing 'subspace' field")
        return ser.subspace_from_json(algebra, data["subspace"])

    def load_pair():
        for key in ("first", "second"):
            if key not in data:
                raise InputError(f"{args.input}: missing '{key}' field")
        return (ser.as_affine(ser.subspace_from_json(algebra, data["first"])),
                ser.as_affine(ser.subspace_from_json(algebra, data["second"])))

    if action == "dim":
        space = load_single()
        direction = space.direction if isinstance(space, AffineSubspace) \
            else space
        if direction.dim:
            ech = row_echelon(Matrix(direction.rows), direction.side)
            comp = pivot_complement(Matrix(direction.rows), direction.side)
            complement = list(comp.indices)
        else:
            ech = direction.echelon
            complement = list(range(direction.ambient))
        payload = {"dim": direction.dim,
                   "pivots": list(ech.pivots),
                   "complement": complement,
                   "side": direction.side}
        results = [CheckResult("subspace_dim", "pass", 1,
                               note=f"dim={direction.dim}")]
    elif action == "classify":
        space = load_single()
        sidedness = classify_sidedness(space)
        payload = {"sidedness": sidedness.value}
        results = [CheckResult("subspace_classify", "pass", 1,
                               note=sidedness.value)]
    elif action == "intersect":
        first, second = load_pair()
        try:
            got = intersect_affine(first, second)
            if got is None:
                payload = {"empty": True}
                note = "empty"
            else:
                payload = {"empty": False,
                           "subspace": ser.subspace_to_json(got),
                           "dim": got.dim}
                note = f"dim={got.dim}"
        except SideUnrepresentable as err:
            payload = {"empty": False, "side_unrepresentable": True,
                       "direction_qdim": err.direction_qdim}
            note = "side_unrepresentable"
        results = [CheckResult("subspace_intersect", "pass", 1, note=note)]
    elif action == "flag":
        space = ser.as_affine(load_single())
        flag = extend_to_flag(space, args.side or space.side)
        payload = {"members": [ser.subspace_to_json(m)
                               for m in flag.members],
                   "designated": flag.designated}
        results = [CheckResult("subspace_flag", "pass", 1,
                               note=f"dims 0..{len(flag.members) - 1}")]
    elif action == "connect":
        first, second = load_pair()
        chain = connect_planes(first, second)
        payload = {"planes": [ser.subspace_to_json(p) for p in chain.planes],
                   "steps": len(chain.planes) - 1}
        results = [CheckResult("subspace_connect", "pass", 1,
                               note=f"steps={len(chain.planes) - 1}")]
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown subspace action {action!r}")

    _emit(_records_of(results), args.output, args.figures, payload)
    return 0


# -- map ----------------------------------------------------------------------


def _load_map_input(args):
    data = _load_json(args.input)
    algebra = _algebra_of(data, args.input)
    n = data.get("dim")
    form = None
    expr = None
    if "form" in data:
        form = ser.form_from_json(algebra, data["form"])
        n = form.ambient
    elif "map" in data:
        expr = ser.mapexpr_from_json(algebra, data["map"])
        from .maps import infer_dimension
        n = n or infer_dimension(expr)
        if n is None:
            raise InputError(
                f"{args.input}: add a 'dim' field (not inferable from the map)")
    else:
        raise InputError(f"{args.input}: need a 'map' or 'form' field")
    probe = None
    if data.get("probe_line") is not None:
        probe = ser.as_affine(
            ser.subspace_from_json(algebra, data["probe_line"]))
    return data, algebra, int(n), form, expr, probe


def cmd_map(args) -> int:
    data, algebra, n, form, expr, probe = _load_map_input(args)
    action = args.action
    target = form.build() if form is not None else expr

    if action == "classify":
        probes = [probe] if probe is not None else []
        rep = check_line_preservation(target, trials=args.trials,
                                      seed=args.seed, n=n, algebra=algebra,
                                      probe_lines=probes)
        payload = {"counts": dict(rep.counts), "ok": rep.ok}
        if rep.ok:
            results = [CheckResult("map_classify", "pass", len(rep.trials),
                                   note=str(dict(rep.counts)))]
        else:
            w = rep.witness
            witness = {"algebra": ser.algebra_to_json(algebra), "dim": n,
                       "map": (ser.mapexpr_to_json(target)
                               if target is not None else None),
                       "probe_line": ser.subspace_to_json(w.line),
                       "samples": [[ser.vector_to_json(p),
                                    ser.vector_to_json(q)]
                                   for p, q in w.samples]}
            payload["witness"] = witness
            results = [CheckResult("map_classify", "fail", len(rep.trials),
                                   witness=witness)]
        _emit(_records_of(results), args.output, args.figures, payload)
        return 0 if rep.ok else 1

    if action == "decompose":
        mode = args.mode or data.get("mode")
        try:
            got = decompose(target, mode=mode, n=n, algebra=algebra,
                            seed=args.seed)
        except SkewAffineError as err:
            stage = getattr(err, "stage", type(err).__name__)
            results = [CheckResult("map_decompose", "fail", 1,
                                   witness={"stage": str(stage),
                                            "error": str(err)})]
            _emit(_records_of(results), args.output, args.figures)
            return 1
        note = "side_swap" if got.is_side_swap else "same_side"
        if n == 2 and not got.is_side_swap and not algebra.commutative:
            note += " (n=2: verified pointwise, not guaranteed)"
        payload = {"form": ser.form_to_json(got),
                   "algebra": ser.algebra_to_json(algebra)}
        results = [CheckResult("map_decompose", "pass", 1, note=note)]
        _emit(_records_of(results), args.output, args.figures, payload)
        return 0

    if action == "verify":
        try:
            if form is None:
                mode = args.mode or data.get("mode") or \
                    detect_mode(target, n=n, algebra=algebra, seed=args.seed)
                form_got = decompose(target, mode=mode, n=n, algebra=algebra,
                                     seed=args.seed)
            else:
                form_got = form.normalize()
            rep = verify_theorem_instance(form_got, trials=args.trials,
                                          seed=args.seed)
        except SkewAffineError as err:
            stage = getattr(err, "stage", type(err).__name__)
            results = [CheckResult("map_verify", "fail", 1,
                                   witness={"stage": str(stage),
                                            "error": str(err)})]
            _emit(_records_of(results), args.output, args.figures)
            return 1
        mode_note = "side_swap" if form_got.is_side_swap else "same_side"
        results = [
            CheckResult(f"verify_{c.name}", "pass" if c.ok else "fail",
                        args.trials,
                        witness=None if c.ok else {"detail": c.detail},
                        note=mode_note if c.name == "decomposition_round_trip"
                        else "")
            for c in rep.checks
        ]
        payload = {"ok": rep.ok, "mode": mode_note,
                   "form": ser.form_to_json(form_got)}
        _emit(_records_of(results), args.output, args.figures, payload)
        return 0 if rep.ok else 1

    raise InputError(f"unknown map action {action!r}")  # pragma: no cover


# -- suite ----------------------------------------------------------------------


def cmd_suite(args) -> int:
    algebra = Algebra.quaternions()
    if args.algebra:
        algebra = ser.algebra_from_json(_load_json(args.algebra))
    config = SuiteConfig(seed=args.seed, trials=args.trials,
                         height=args.height, dim=args.dim, algebra=algebra)
    mutations = frozenset([args.mutate]) if args.mutate else frozenset()
    results = run_suite(args.name, config, mutations)
    _emit(_records_of(results), args.output, args.figures)
    return 0 if all(r.ok for r in results) else 1


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewaffine",
        description="Exact affine geometry over definite rational "
                    "quaternion algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sub = sub.add_parser("subspace", help="subspace computations")
    p_sub.add_argument("action", choices=["dim", "classify", "intersect",
                                          "flag", "connect"])
    p_sub.add_argument("-i", "--input", required=True)
    p_sub.add_argument("-o", "--output")
    p_sub.add_argument("--figures")
    p_sub.add_argument("--side", choices=["left", "right"])
    p_sub.set_defaults(func=cmd_subspace)

    p_map = sub.add_parser("map", help="map analysis")
    p_map.add_argument("action", choices=["classify", "decompose", "verify"])
    p_map.add_argument("-i", "--input", required=True)
    p_map.add_argument("-o", "--output")
    p_map.add_argument("--figures")
    p_map.add_argument("--trials", type=int, default=50)
    p_map.add_argument("--seed", type=int, default=0)
    p_map.add_argument("--mode", choices=["same_side", "side_swap"])
    p_map.set_defaults(func=cmd_map)

    p_suite = sub.add_parser("suite", help="seeded property suites")
    p_suite.add_argument("name", choices=["lemmas", "theorem", "all"])
    p_suite.add_argument("--seed", type=int, default=1)
    p_suite.add_argument("--trials", type=int, default=50)
    p_suite.add_argument("--height", type=int, default=8)
    p_suite.add_argument("--dim", type=int, default=3)
    p_suite.add_argument("--algebra", help="JSON file with algebra params")
    p_suite.add_argument("-o", "--output")
    p_suite.add_argument("--figures")
    p_suite.add_argument("--mutate", choices=["corrupt_echelon"],
                         help="testing aid: corrupt one computation")
    p_suite.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except SkewAffineError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

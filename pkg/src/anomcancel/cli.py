"""Command-line front end: verify, expand, decompose, suite.

Exit codes: 0 for PASS (variants included), 1 for FAIL or a flagged GAP,
2 for usage or parameter errors.  All machine output is JSON with a schema
tag; the text renderer works from the same JSON object so the two formats
cannot diverge.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import anomaly, suite
from .algebra import AlgebraError
from .modforms import DELTA_EPS_KINDS, GROUP_LOWER, GROUP_UPPER, basis_element, delta_eps
from .theta import theta_factor, theta_null

EXPAND_OBJECTS = (
    "delta1", "eps1", "delta2", "eps2",
    "theta1-null", "theta2-null", "theta3-null", "theta-prime-null",
    "factor-a", "factor-t1", "factor-t2", "factor-t3", "factor-d",
    "basis", "P1", "P2", "P3",
)


def _write(payload: str, output: str | None):
    if output:
        Path(output).write_text(payload + "\n")
    else:
        print(payload)


def _render_report_text(obj: dict) -> str:
    lines = [f"{obj.get('theorem', obj.get('case', '?'))}: {obj['status']}"]
    if "setting" in obj:
        s = obj["setting"]
        lines.append(f"  setting: {s['kind']} k={s['k']} l={s['l']} n_q={s['n_q']} (dim {s['dim']})")
    for name, c in obj.get("checks", {}).items():
        mark = "zero" if c["zero"] else "NONZERO"
        gate = "" if c.get("gating", True) else " (informational)"
        lines.append(f"  {name}: {mark}{gate}")
        if not c["zero"] and "value" in c:
            lines.append(f"    value: {c['value']}")
        if c.get("note"):
            lines.append(f"    note: {c['note']}")
    for i, h in enumerate(obj.get("h_standard", obj.get("h_normalized", []))):
        lines.append(f"  h[{i}] = {h}")
    if obj.get("variant_notes"):
        for note in obj["variant_notes"]:
            lines.append(f"  variant: {note}")
    if "solve_integral" in obj:
        lines.append(f"  integral solve coefficients: {obj['solve_integral']}")
    return "\n".join(lines)


def _render_audit_text(obj: dict) -> str:
    implied = "empty sum" if obj["empty_sum"] else str(obj["implied_power_of_two"])
    return (f"corollary {obj['corollary']} (m={obj['m']}, k={obj['k']}, l={obj['l']}, "
            f"v2(h)>={obj['assumed_v2_h']}): implied {implied} vs claimed "
            f"{obj['claimed_power_of_two']} -> {obj['outcome']}")


def _cmd_verify(args) -> int:
    if args.theorem in anomaly.DIVISIBILITY_IDS:
        audit = anomaly.divisibility_check(args.theorem, args.m, args.l_opt, args.v2h)
        obj = audit.to_json_obj()
        payload = json.dumps(obj, indent=2) if args.format == "json" else _render_audit_text(obj)
        _write(payload, args.output)
        return 0 if audit.outcome == "PASS" else 1
    report = anomaly.verify_theorem(args.theorem, k=args.k, l=args.l, n_q=args.qorder)
    obj = report.to_json_obj(basis=args.basis, include_timings=args.timings)
    payload = json.dumps(obj, indent=2) if args.format == "json" else _render_report_text(obj)
    _write(payload, args.output)
    return 0 if report.status in ("PASS", "PASS_WITH_VARIANT") else 1


def _cmd_expand(args) -> int:
    order = args.order
    obj: dict = {"schema": 1, "object": args.object, "order": order}
    name = args.object
    if name in DELTA_EPS_KINDS:
        series = delta_eps(name, order)
        obj["series"] = series.to_json_obj()
        obj["text"] = series.to_text()
    elif name.endswith("-null"):
        kind = {"theta1-null": "theta1", "theta2-null": "theta2",
                "theta3-null": "theta3", "theta-prime-null": "theta_prime"}[name]
        series = theta_null(kind, order)
        obj["series"] = series.to_json_obj()
        obj["text"] = series.to_text()
    elif name.startswith("factor-"):
        factor = theta_factor(name.removeprefix("factor-"), order, args.weight)
        obj["z_weight_bound"] = args.weight
        obj["factor"] = factor.to_json_obj()
        obj["text"] = factor.to_text()
    elif name == "basis":
        group = GROUP_UPPER if args.group == "upper" else GROUP_LOWER
        el = basis_element(group, args.k, args.r, order)
        obj.update({"group": group, "k": args.k, "r": args.r})
        obj["series"] = el.series.to_json_obj()
        obj["text"] = el.series.to_text()
    elif name in ("P1", "P2", "P3"):
        setting = anomaly.make_setting(args.setting, args.k, args.l, args.qorder)
        series = anomaly.build_P(setting, name)
        if args.basis == "standard":
            series = series.map_coefficients(lambda p: p.to_standard_basis(),
                                             new_zero=series.zero.to_standard_basis())
        obj["setting"] = setting.to_json_obj()
        obj["series"] = series.to_json_obj()
        obj["text"] = series.to_text()
    else:
        raise AlgebraError(f"unknown object {name!r}")
    payload = json.dumps(obj, indent=2) if args.format == "json" else \
        f"{name} (order {order}):\n{obj['text']}"
    _write(payload, args.output)
    return 0


def _cmd_decompose(args) -> int:
    setting = anomaly.make_setting(args.setting, args.k, args.l, args.qorder)
    dec = anomaly.decompose_setting(setting) if args.which == "P2" else None
    if dec is None:
        from .modforms import decompose
        dec = decompose(anomaly.build_P(setting, args.which), setting.k)
    obj = {"schema": 1, "setting": setting.to_json_obj(), "which": args.which}
    obj.update(dec.to_json_obj())
    payload = json.dumps(obj, indent=2) if args.format == "json" else \
        "\n".join([f"h[{r}] = {p.to_text()}" for r, p in enumerate(dec.h)]
                  + [f"residual zero: {dec.residual_zero}",
                     f"integral solve: {dec.integral_solve}"])
    _write(payload, args.output)
    return 0


def _cmd_suite(args) -> int:
    result = suite.run_suite(n_q=args.qorder, parallel=args.parallel)
    payload = suite.suite_json(result) if args.format == "json" else suite.render_suite_text(result)
    _write(payload, args.output)
    return 0 if result["all_ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anomcancel",
        description="Exact verifier for modular-form cancellation identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify one identity or divisibility audit")
    p.add_argument("--theorem", required=True,
                   choices=list(anomaly.THEOREM_IDS) + list(anomaly.DIVISIBILITY_IDS))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--qorder", type=int, default=None)
    p.add_argument("--m", type=int, default=0, help="divisibility audits: dimension index")
    p.add_argument("--l-opt", type=int, default=None, dest="l_opt",
                   help="divisibility audits: auxiliary rank parameter (default 4m+2)")
    p.add_argument("--v2h", type=int, default=1,
                   help="divisibility audits: assumed 2-adic valuation of the h_r")
    p.add_argument("--basis", choices=("standard", "normalized"), default="standard")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--timings", action="store_true",
                   help="include elapsed seconds (breaks byte-stability)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("expand", help="print a series, factor or basis element")
    p.add_argument("--object", required=True, choices=EXPAND_OBJECTS)
    p.add_argument("--order", type=int, default=10, help="q-order of the expansion")
    p.add_argument("--weight", type=int, default=6, help="z-degree bound for factors")
    p.add_argument("--group", choices=("upper", "lower"), default="upper")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--setting", choices=anomaly.SETTING_KINDS, default="spin4k")
    p.add_argument("--qorder", type=int, default=None, help="P-series q-order override")
    p.add_argument("--basis", choices=("standard", "normalized"), default="normalized")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("decompose", help="basis decomposition of a P-series")
    p.add_argument("--setting", choices=anomaly.SETTING_KINDS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--which", choices=("P1", "P2", "P3"), default="P2")
    p.add_argument("--qorder", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("suite", help="run the full verification grid")
    p.add_argument("--qorder", type=int, default=None,
                   help="series order override for every case")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: inspect (sharp elements, classes, annihilators), topology /
export (dot or json snapshots), check (one property verdict with witness),
verify (theorem sweeps driven by flags or a json config file).

Exit codes: 0 all pass, 1 failures, 2 usage error, 3 only documented
discrepancies (flagged outcomes).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, harness, topology, trivext
from .modules import (
    BoundExceeded,
    ModuleDescriptor,
    annihilator,
    class_table,
    is_bezout,
    is_finitely_cogenerated,
    is_multiplication,
    is_pseudo_simple,
    is_uniserial,
    satisfies_star,
    sharp_elements,
)

USAGE_ERROR = 2


class SpecError(ValueError):
    pass


# --- MODULE-SPEC parsing ------------------------------------------------------


def parse_module_spec(text: str):
    """Parse "Zn:12", "ab:2^2x3", "vs:p=3,d=2", "sym:Z,N=100", "sym:Q,B=10",
    "sym:E,p=2,D=8", or "triv:n=4,m=2"."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecError(f"missing ':' in module spec {text!r}")
    try:
        if head == "Zn":
            return ModuleDescriptor.cyclic(_int_token(rest))
        if head == "ab":
            factors = []
            for token in rest.split("x"):
                base, _, exp = token.partition("^")
                factors.append((_int_token(base), _int_token(exp) if exp else 1))
            return ModuleDescriptor.abelian(factors)
        if head == "vs":
            kv = _keyvals(rest, {"p", "d"})
            return ModuleDescriptor.vector_space(kv["p"], kv["d"])
        if head == "sym":
            kind, _, params = rest.partition(",")
            if kind == "Z":
                return families.IntegersOverZ(_keyvals(params, {"N"})["N"])
            if kind == "Q":
                return families.RationalsOverZ(_keyvals(params, {"B"})["B"])
            if kind == "E":
                kv = _keyvals(params, {"p", "D"})
                return families.Prufer(kv["p"], kv["D"])
            raise SpecError(f"unknown symbolic family {kind!r}")
        if head == "triv":
            kv = _keyvals(rest, {"n", "m"})
            return trivext.trivial_extension_ring(kv["n"], kv["m"])
    except SpecError:
        raise
    except (ValueError, trivext.InvalidPair) as exc:
        raise SpecError(f"bad module spec {text!r}: {exc}") from exc
    raise SpecError(f"unknown module spec kind {head!r}")


def render_module_spec(obj) -> str:
    return obj.describe()


def _int_token(token: str) -> int:
    token = token.strip()
    if not token or not token.lstrip("-").isdigit():
        raise SpecError(f"bad integer token {token!r}")
    return int(token)


def _keyvals(text: str, keys) -> dict:
    out = {}
    for part in text.split(","):
        k, sep, v = part.partition("=")
        if not sep or k not in keys:
            raise SpecError(f"bad parameter token {part!r}")
        out[k] = _int_token(v)
    missing = keys - out.keys()
    if missing:
        raise SpecError(f"missing parameters {sorted(missing)}")
    return out


# --- snapshots and verdicts ---------------------------------------------------


def _snapshot(obj):
    if isinstance(obj, ModuleDescriptor):
        return topology.build_topology(obj)
    if isinstance(obj, (families.IntegersOverZ, families.RationalsOverZ, families.Prufer)):
        return families.window_snapshot(obj)
    raise SpecError("trivial-extension rings have ring predicates only")


def _check_property(obj, prop: str, class_bound: int):
    prop_norm = prop.lower().replace("_", "-")
    if isinstance(obj, trivext.TrivialExtensionRing):
        if prop_norm in ("pseudo-simple", "pseudo-simple-ring"):
            return topology.PropertyVerdict(
                "pseudo-simple-ring",
                trivext.is_pseudo_simple_ring(obj),
                witness=trivext.pseudo_simple_ring_violation(obj),
            )
        if prop_norm == "local-criterion":
            return topology.PropertyVerdict(
                "local-criterion", trivext.local_criterion(obj)
            )
        raise SpecError(f"property {prop!r} undefined for trivial extensions")

    module_props = {
        "pseudo-simple": is_pseudo_simple,
        "uniserial": is_uniserial,
        "star": satisfies_star,
        "multiplication": is_multiplication,
        "bezout": is_bezout,
        "finitely-cogenerated": is_finitely_cogenerated,
    }
    if prop_norm in module_props:
        if not isinstance(obj, ModuleDescriptor):
            raise SpecError(f"property {prop!r} needs a finite module")
        return topology.PropertyVerdict(prop_norm, module_props[prop_norm](obj))

    if prop_norm == "noetherian":
        return families.noetherian_report(obj)
    if prop_norm == "baire":
        return families.baire_and_density_report(obj)
    if prop_norm == "compact" and not isinstance(obj, ModuleDescriptor):
        return families.compactness_verdict_symbolic(obj)

    T = _snapshot(obj)
    if prop_norm in ("t0", "t1", "t2", "t3", "t4", "t5", "discrete"):
        axiom = prop_norm.upper() if prop_norm != "discrete" else "discrete"
        return topology.check_separation(T, axiom, class_bound=class_bound)
    if prop_norm == "nested":
        return topology.check_nested(T)
    if prop_norm in ("connected", "path-connected", "ultraconnected"):
        return topology.check_connectivity(T)[prop_norm.replace("-", "_")]
    if prop_norm == "alexandrov":
        return topology.verify_alexandrov_and_minimal_nbhd(T)
    if prop_norm == "compact":
        return topology.compactness_verdict(T)
    raise SpecError(f"unknown property {prop!r}")


# --- subcommands ---------------------------------------------------------------


def _cmd_inspect(args) -> int:
    obj = parse_module_spec(args.module)
    if isinstance(obj, trivext.TrivialExtensionRing):
        print(f"ring {obj.describe()}: {obj.size} elements")
        nonunits = [
            u for u in obj.elements() if u != obj.zero and not obj.is_unit(u)
        ]
        print(f"nonzero nonunits ({len(nonunits)}):", nonunits)
        for u in nonunits:
            ideal = trivext.annihilator_element(obj, u)
            maximal = trivext.is_maximal_ideal_trivial(obj, ideal)
            print(f"  ann{u}: size {len(ideal.elements)}, maximal: {maximal}")
        return 0
    if isinstance(obj, ModuleDescriptor):
        sharp = sharp_elements(obj)
        print(f"module {obj.describe()}: order {obj.order}")
        print(f"sharp elements ({len(sharp)}):",
              " ".join(obj.element_label(m) for m in sharp))
        for rep, _, members in class_table(obj):
            ann = annihilator(obj, rep)
            print(
                f"  class [{obj.element_label(rep)}] = "
                f"{{{', '.join(obj.element_label(m) for m in members)}}}  ann: {ann}"
            )
        return 0
    T = _snapshot(obj)
    print(f"family {obj.describe()}: window of {T.n_classes} classes (truncated)")
    for cls in T.classes:
        print(f"  [{cls.label}]  U = {{{', '.join(T.labels(T.cols[cls.index]))}}}")
    return 0


def _cmd_topology(args) -> int:
    obj = parse_module_spec(args.module)
    T = _snapshot(obj)
    verdicts = topology.standard_verdicts(T, class_bound=args.class_bound)
    payload = topology.export_topology(T, args.format, verdicts=verdicts)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(payload.decode())
    return 0


def _cmd_check(args) -> int:
    obj = parse_module_spec(args.module)
    try:
        verdict = _check_property(obj, args.property, args.class_bound)
    except BoundExceeded as exc:
        print(f"{args.property}: skipped ({exc})")
        return 0
    line = f"{verdict.property}: {str(verdict.holds).lower()}"
    if verdict.witness is not None:
        line += f"; witness {verdict.witness}"
    if verdict.note:
        line += f"  [{verdict.note}]"
    print(line)
    return 0


def _cmd_verify(args) -> int:
    config = {}
    if args.config:
        with open(args.config) as fh:
            config = json.load(fh)
    theorems = args.theorems or config.get("theorems") or list(harness.THEOREM_IDS)
    max_order = args.max_order or config.get("max_order")
    env_order = os.environ.get("DIVTOP_MAX_ORDER")
    if env_order:
        max_order = int(env_order)
    limits = dict(harness.DEFAULT_LIMITS)
    if max_order:
        for tid in limits:
            if tid not in ("pseudoZn", "ttri", "tcom-symbolic"):
                limits[tid] = max_order
    if args.max_n or config.get("max_n"):
        limits["pseudoZn"] = args.max_n or config["max_n"]
    if args.trivial_bound or config.get("trivial_bound"):
        limits["ttri"] = args.trivial_bound or config["trivial_bound"]
    bounds = harness.Bounds(
        class_bound=args.class_bound or config.get("class_bound", 16)
    )

    unknown = [tid for tid in theorems if tid not in harness.THEOREM_IDS]
    if unknown:
        print(f"unknown theorem id {unknown[0]!r}", file=sys.stderr)
        return USAGE_ERROR

    reports = []
    print("registry:")
    for tid in theorems:
        print(f"  {tid}: {harness.registry()[tid]}")
    for tid in theorems:
        report = harness.verify(tid, limits.get(tid), bounds)
        reports.append(report)
        status = "PASS" if report.ok else "FAIL"
        if report.ok and report.flagged:
            status = "FLAG"
        print(
            f"{status} {tid}: {report.pass_count}/{report.instance_count} pass, "
            f"{len(report.failures)} fail, {len(report.flagged)} flagged, "
            f"{len(report.skipped)} skipped ({report.wall_time_s:.2f}s)"
        )
        for case in report.failures[:3]:
            print(f"     counterexample: {case.to_json()}")

    out_dir = args.out or config.get("out_dir")
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, "sweep_report.json")
        with open(path, "w") as fh:
            json.dump(
                {
                    "schema_version": 1,
                    "registry": harness.registry(),
                    "sweeps": [r.to_json() for r in reports],
                },
                fh,
                indent=2,
                sort_keys=True,
            )
        print(f"wrote {path}")

    if any(r.failures for r in reports):
        return 1
    if any(r.flagged for r in reports):
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divtop",
        description="Divisor topology of finite modules: inspect, export, check, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inspect = sub.add_parser("inspect", help="sharp elements, classes, annihilators")
    p_inspect.add_argument("module")

    for name in ("topology", "export"):
        p = sub.add_parser(name, help="write the class space as dot or json")
        p.add_argument("module")
        p.add_argument("--format", choices=("dot", "json"), default="dot")
        p.add_argument("--out", default=None)
        p.add_argument("--class-bound", type=int, default=16)

    p_check = sub.add_parser("check", help="print one property verdict")
    p_check.add_argument("module")
    p_check.add_argument("--property", required=True)
    p_check.add_argument("--class-bound", type=int, default=16)

    p_verify = sub.add_parser("verify", help="run theorem sweeps")
    p_verify.add_argument("--config", default=None)
    p_verify.add_argument("--theorems", default=None,
                          type=lambda s: [t for t in s.split(",") if t])
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--trivial-bound", type=int, default=None)
    p_verify.add_argument("--class-bound", type=int, default=None)
    p_verify.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    handlers = {
        "inspect": _cmd_inspect,
        "topology": _cmd_topology,
        "export": _cmd_topology,
        "check": _cmd_check,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

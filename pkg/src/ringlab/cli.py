"""Command-line interface.

Exit codes: 0 success (property holds / no violation / hit found), 1 for a
negative but well-formed outcome (property fails, delta routes disagree, no
counterexample found, a registry claim is violated), 2 for usage or input
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ringlab.catalog import default_catalog, load_catalog_manifest
from ringlab.core import (
    DorrohData,
    FiniteRing,
    RinglabError,
    build_dorroh,
    load_ring,
    renamed,
    save_ring,
)
from ringlab.claims import has_violation, search_counterexample, theorem_suite
from ringlab.properties import _coerce, element_property, ring_property
from ringlab.radicals import DeltaDisagreement, delta
from ringlab.report import build_report, render_text


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _ring_from_spec_obj(obj: dict) -> FiniteRing:
    if not isinstance(obj, dict):
        raise ValueError("ring spec must be a JSON object")
    if obj.get("kind") == "dorroh":
        for key in ("base", "bimodule", "left_action", "right_action"):
            if key not in obj:
                raise ValueError(f"dorroh spec is missing {key!r}")
        base = _ring_from_spec_obj(obj["base"])
        bimodule = _ring_from_spec_obj(obj["bimodule"])
        data = DorrohData(
            base=base,
            bimodule=bimodule,
            left_action=tuple(tuple(row) for row in obj["left_action"]),
            right_action=tuple(tuple(row) for row in obj["right_action"]),
        )
        ring = build_dorroh(data)
    elif "preset" in obj:
        from ringlab.catalog import build_preset

        ring = build_preset(obj["preset"])
    else:
        raise ValueError("ring spec needs a 'preset' or a 'kind' entry")
    if "name" in obj:
        ring = renamed(ring, obj["name"])
    return ring


def _cmd_build(args) -> int:
    source = args.source
    path = Path(source)
    if path.exists():
        obj = json.loads(path.read_text())
        ring = _ring_from_spec_obj(obj)
    else:
        from ringlab.catalog import build_preset

        ring = build_preset(source)
    save_ring(ring, args.output)
    print(f"wrote {ring.name} of order {ring.order} to {args.output}")
    return 0


def _cmd_report(args) -> int:
    ring = load_ring(args.ring)
    report = build_report(ring)
    if args.format == "text":
        print(render_text(report), end="")
    else:
        _emit(report)
    return 0


def _cmd_check(args) -> int:
    ring = load_ring(args.ring)
    prop = _coerce(args.property)
    if args.element is None:
        holds, witness = ring_property(ring, prop)
        _emit({"holds": holds, "witness": witness})
        return 0 if holds else 1
    certificate = element_property(ring, args.element, prop)
    if certificate is None:
        _emit({"holds": False, "element": args.element, "property": prop.value})
        return 1
    payload = {
        "holds": True,
        "element": args.element,
        "property": prop.value,
        "witnesses": dict(certificate.witnesses),
        "checks": [[name, ok] for name, ok in certificate.checks],
    }
    if certificate.witness_count is not None:
        payload["witness_count"] = certificate.witness_count
    _emit(payload)
    return 0


def _cmd_delta(args) -> int:
    ring = load_ring(args.ring)
    try:
        computation = delta(ring)
    except DeltaDisagreement as err:
        payload = {
            "agree": False,
            "error": str(err),
            "r1": err.computation.r1.to_json(),
            "r2": err.computation.r2.to_json(),
            "r3": err.computation.r3.to_json(),
            "r4": err.computation.r4.to_json(),
            "r5": err.computation.r5.to_json(),
        }
        _emit(payload)
        return 1
    _emit(
        {
            "r1": computation.r1.to_json(),
            "r2": computation.r2.to_json(),
            "r3": computation.r3.to_json(),
            "r4": computation.r4.to_json(),
            "r5": computation.r5.to_json(),
            "agree": computation.agree,
            "consensus": computation.consensus.to_json(),
        }
    )
    return 0


def _load_entries(catalog_path: str | None):
    if catalog_path is None:
        return default_catalog()
    return load_catalog_manifest(catalog_path)


def _cmd_verify_paper(args) -> int:
    entries = _load_entries(args.catalog)
    results = theorem_suite(entries)
    if args.format == "json":
        _emit(
            [
                {
                    "claim_id": r.claim_id,
                    "summary": r.summary,
                    "status": r.status,
                    "witnesses": list(r.witnesses),
                    "note": r.note,
                }
                for r in results
            ]
        )
    else:
        width = max(len(r.claim_id) for r in results)
        for r in results:
            line = f"{r.claim_id:<{width}}  {r.status}"
            if r.witnesses:
                shown = ", ".join(
                    w["ring"] if w.get("element") is None else f"{w['ring']}#{w['element']}"
                    for w in r.witnesses
                )
                line += f"  [{shown}]"
            print(line)
    return 1 if has_violation(results) else 0


def _cmd_search(args) -> int:
    entries = _load_entries(args.catalog)
    hit = search_counterexample(args.hyp, args.concl, entries)
    if hit is None:
        _emit({"found": False})
        return 1
    _emit({"found": True, **hit})
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="Finite-ring construction, delta computations, and claim checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a ring from a preset or a spec file")
    p_build.add_argument("source", help="preset text such as zmod:4, or a JSON spec file")
    p_build.add_argument("-o", "--output", required=True, help="where to write the ring")
    p_build.set_defaults(func=_cmd_build)

    p_report = sub.add_parser("report", help="full survey of one ring")
    p_report.add_argument("ring", help="ring JSON file")
    p_report.add_argument("--format", choices=("json", "text"), default="json")
    p_report.set_defaults(func=_cmd_report)

    p_check = sub.add_parser("check", help="decide one property, with certificate")
    p_check.add_argument("ring", help="ring JSON file")
    p_check.add_argument("property", help="property name, e.g. delta-quasipolar")
    p_check.add_argument("--element", type=int, default=None)
    p_check.set_defaults(func=_cmd_check)

    p_delta = sub.add_parser("delta", help="run all five delta characterizations")
    p_delta.add_argument("ring", help="ring JSON file")
    p_delta.set_defaults(func=_cmd_delta)

    p_verify = sub.add_parser(
        "verify-paper", help="re-verify the claim registry over a catalog"
    )
    p_verify.add_argument("--catalog", default=None, help="catalog manifest JSON file")
    p_verify.add_argument("--format", choices=("json", "text"), default="text")
    p_verify.set_defaults(func=_cmd_verify_paper)

    p_search = sub.add_parser(
        "search", help="search the catalog for an implication counterexample"
    )
    p_search.add_argument(
        "--hyp", action="append", required=True, help="hypothesis property (repeatable)"
    )
    p_search.add_argument("--concl", required=True, help="conclusion property")
    p_search.add_argument("--catalog", default=None, help="catalog manifest JSON file")
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (RinglabError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

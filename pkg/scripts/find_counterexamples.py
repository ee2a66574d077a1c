#!/usr/bin/env python3
"""Sweep a list of implication hypotheses over the catalog.

Each line of output reports either the first counterexample found for an
implication, or that the implication survived the whole catalog.  The
default sweep covers the implications whose failures drive the disputed
entries in the claim registry, plus a few true ones as controls.
"""
from __future__ import annotations

import argparse
import sys

from ringlab.catalog import build_entry, default_catalog, load_catalog_manifest
from ringlab.claims import search_counterexample

DEFAULT_SWEEP = [
    (["delta-quasipolar"], "j-quasipolar"),
    (["j-quasipolar"], "delta-quasipolar"),
    (["delta-quasipolar"], "quasipolar"),
    (["abelian", "delta-quasipolar"], "strongly-regular"),
    (["abelian", "delta-quasipolar"], "strongly-clean"),
    (["delta-quasipolar"], "exchange"),
    (["strongly-regular"], "von-neumann-regular"),
    (["local", "quasipolar"], "delta-quasipolar"),
    (["strongly-j-clean"], "weakly-delta-quasipolar"),
    (["boolean"], "delta-quasipolar"),
]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--catalog", default=None, help="catalog manifest JSON file (default: built-in)"
    )
    parser.add_argument(
        "--hyp",
        action="append",
        default=None,
        help="hypothesis property; repeatable; overrides the default sweep",
    )
    parser.add_argument("--concl", default=None, help="conclusion property")
    args = parser.parse_args(argv)

    entries = (
        default_catalog()
        if args.catalog is None
        else load_catalog_manifest(args.catalog)
    )
    if args.hyp or args.concl:
        if not (args.hyp and args.concl):
            parser.error("--hyp and --concl must be given together")
        sweep = [(args.hyp, args.concl)]
    else:
        sweep = DEFAULT_SWEEP

    rings = {entry.name: build_entry(entry) for entry in entries}
    found_any = False
    for hypotheses, conclusion in sweep:
        label = " and ".join(hypotheses) + " => " + conclusion
        hit = search_counterexample(hypotheses, conclusion, entries, rings=rings)
        if hit is None:
            print(f"{label}: no counterexample on this catalog")
        else:
            found_any = True
            print(f"{label}: fails at element {hit['element']} of {hit['ring']}")
    return 0 if not found_any else 1


if __name__ == "__main__":
    sys.exit(main())

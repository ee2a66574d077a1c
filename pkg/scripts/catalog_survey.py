#!/usr/bin/env python3
"""Print a one-line structural survey of every catalog ring.

Columns: name, order, size of delta, size of the radical, and a handful of
ring-level flags.  Useful as a quick sanity sweep after touching the delta
or property code.
"""
from __future__ import annotations

import argparse
import sys

from ringlab.catalog import build_entry, default_catalog, load_catalog_manifest
from ringlab.properties import PropertyName, ring_property
from ringlab.radicals import delta_mask, jacobson

FLAGS = (
    ("dqp", PropertyName.DELTA_QUASIPOLAR),
    ("wdqp", PropertyName.WEAKLY_DELTA_QUASIPOLAR),
    ("local", PropertyName.LOCAL),
    ("ss", PropertyName.SEMISIMPLE),
    ("abel", PropertyName.ABELIAN),
    ("clean", PropertyName.CLEAN),
)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--catalog", default=None, help="catalog manifest JSON file (default: built-in)"
    )
    args = parser.parse_args(argv)

    entries = (
        default_catalog()
        if args.catalog is None
        else load_catalog_manifest(args.catalog)
    )
    header = f"{'ring':<14} {'order':>5} {'|delta|':>7} {'|J|':>4}  " + " ".join(
        f"{label:>5}" for label, _ in FLAGS
    )
    print(header)
    print("-" * len(header))
    for entry in entries:
        ring = build_entry(entry)
        flags = " ".join(
            f"{'yes' if ring_property(ring, prop)[0] else '.':>5}"
            for _, prop in FLAGS
        )
        print(
            f"{entry.name:<14} {ring.order:>5} {len(delta_mask(ring)):>7} "
            f"{len(jacobson(ring)):>4}  {flags}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

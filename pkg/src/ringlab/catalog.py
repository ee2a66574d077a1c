"""The fixed ring catalog, the preset grammar, and manifest loading.

A preset is a compact recipe string such as ``tri:2:zmod:3`` or
``quot:delta:tri:2:zmod:2``; :func:`build_preset` turns one into a ring.
Catalog entries pair a name and recipe (or a ring file) with independently
fixed expected facts that :func:`verify_expected` recomputes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ringlab.core import (
    DorrohData,
    FiniteRing,
    RinglabError,
    build_constant_diagonal_triangular,
    build_dorroh,
    build_matrix_ring,
    build_product,
    build_quotient,
    build_upper_triangular,
    build_zmod,
    load_ring,
    renamed,
)
from ringlab.ideals import two_sided_closure
from ringlab.radicals import delta_mask, jacobson


class PresetError(RinglabError):
    """A preset string does not parse or describes an invalid construction."""


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog member: a name, a way to build it, and expected facts.

    ``basis`` is a one-line note on how the expected facts were fixed.
    ``expected`` may record ``order``, ``delta`` (index list or ``"full"``),
    ``jacobson`` (index list), and ``properties`` (name-to-bool map).
    """

    name: str
    recipe: str | None = None
    file: str | None = None
    basis: str = ""
    expected: dict | None = field(default=None, hash=False)


# --------------------------------------------------------------------------
# preset grammar


def _parse_positive_int(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise PresetError(f"{what} must be an integer, got {token!r}") from None
    if value < 1:
        raise PresetError(f"{what} must be positive, got {value}")
    return value


def build_preset(text: str) -> FiniteRing:
    """Build a ring from a recipe string.

    Grammar::

        zmod:N
        product:P1,P2[,...]          (factors may not be products)
        mat:K:P | tri:K:P | cdtri:K:P
        dorroh:P                     (extension of P by itself)
        quot:delta:P | quot:jac:P | quot:gen:I1[+I2...]:P
    """
    head, _, rest = text.partition(":")
    if head == "zmod":
        if not rest or ":" in rest:
            raise PresetError(f"expected zmod:N, got {text!r}")
        return build_zmod(_parse_positive_int(rest, "modulus"))
    if head == "product":
        tokens = rest.split(",") if rest else []
        if not tokens or any(not t for t in tokens):
            raise PresetError(f"expected product:P1,P2[,...], got {text!r}")
        if any(t.partition(":")[0] == "product" for t in tokens):
            raise PresetError("products may not be nested inside a product preset")
        return build_product([build_preset(t) for t in tokens])
    if head in ("mat", "tri", "cdtri"):
        size_token, _, base_text = rest.partition(":")
        if not size_token or not base_text:
            raise PresetError(f"expected {head}:K:P, got {text!r}")
        k = _parse_positive_int(size_token, "matrix size")
        base = build_preset(base_text)
        if head == "mat":
            return build_matrix_ring(base, k)
        if head == "tri":
            return build_upper_triangular(base, k)
        return build_constant_diagonal_triangular(base, k)
    if head == "dorroh":
        if not rest:
            raise PresetError(f"expected dorroh:P, got {text!r}")
        base = build_preset(rest)
        return build_dorroh(dorroh_of_ring(base))
    if head == "quot":
        mode, _, base_text = rest.partition(":")
        if mode in ("delta", "jac"):
            if not base_text:
                raise PresetError(f"expected quot:{mode}:P, got {text!r}")
            ring = build_preset(base_text)
            ideal = delta_mask(ring) if mode == "delta" else jacobson(ring)
            return build_quotient(ring, ideal)[0]
        if mode == "gen":
            gen_token, _, inner = base_text.partition(":")
            if not gen_token or not inner:
                raise PresetError(f"expected quot:gen:I1[+I2...]:P, got {text!r}")
            ring = build_preset(inner)
            generators = []
            for piece in gen_token.split("+"):
                try:
                    value = int(piece)
                except ValueError:
                    raise PresetError(f"bad generator {piece!r} in {text!r}") from None
                if not 0 <= value < ring.order:
                    raise PresetError(
                        f"generator {value} out of range for order {ring.order}"
                    )
                generators.append(value)
            ideal = two_sided_closure(ring, generators)
            return build_quotient(ring, ideal)[0]
        raise PresetError(f"unknown quotient mode in {text!r}")
    raise PresetError(f"unknown preset kind: {text!r}")


def dorroh_of_ring(base: FiniteRing) -> DorrohData:
    """Extension data for a ring acting on itself by multiplication."""
    return DorrohData(
        base=base,
        bimodule=base,
        left_action=base.mul,
        right_action=base.mul,
    )


# --------------------------------------------------------------------------
# catalog


def default_catalog() -> list[CatalogEntry]:
    """The fixed catalog every registry claim is evaluated against."""
    full = "full"
    return [
        CatalogEntry(
            name="Z2",
            recipe="zmod:2",
            basis="two-element field",
            expected={
                "order": 2,
                "delta": full,
                "jacobson": [0],
                "properties": {"boolean": True, "semisimple": True,
                               "delta-quasipolar": True, "j-quasipolar": True},
            },
        ),
        CatalogEntry(
            name="Z3",
            recipe="zmod:3",
            basis="three-element field",
            expected={
                "order": 3,
                "delta": full,
                "jacobson": [0],
                "properties": {"semisimple": True, "boolean": False,
                               "delta-quasipolar": True, "j-quasipolar": False,
                               "strongly-regular": True},
            },
        ),
        CatalogEntry(
            name="Z4",
            recipe="zmod:4",
            basis="divisor arithmetic",
            expected={
                "order": 4,
                "delta": [0, 2],
                "jacobson": [0, 2],
                "properties": {"delta-quasipolar": True, "uniquely-clean": True,
                               "local": True, "right-pp": False},
            },
        ),
        CatalogEntry(
            name="Z6",
            recipe="zmod:6",
            basis="divisor arithmetic",
            expected={
                "order": 6,
                "delta": full,
                "jacobson": [0],
                "properties": {"semisimple": True, "von-neumann-regular": True,
                               "local": False, "j-quasipolar": False},
            },
        ),
        CatalogEntry(
            name="Z8",
            recipe="zmod:8",
            basis="divisor arithmetic",
            expected={
                "order": 8,
                "delta": [0, 2, 4, 6],
                "jacobson": [0, 2, 4, 6],
                "properties": {"delta-quasipolar": True, "uniquely-clean": True,
                               "local": True},
            },
        ),
        CatalogEntry(
            name="Z9",
            recipe="zmod:9",
            basis="divisor arithmetic",
            expected={
                "order": 9,
                "delta": [0, 3, 6],
                "jacobson": [0, 3, 6],
                "properties": {"delta-quasipolar": False, "quasipolar": True,
                               "local": True, "uniquely-clean": False},
            },
        ),
        CatalogEntry(
            name="Z2xZ2",
            recipe="product:zmod:2,zmod:2",
            basis="componentwise arithmetic",
            expected={
                "order": 4,
                "delta": full,
                "jacobson": [0],
                "properties": {"boolean": True, "j-quasipolar": True},
            },
        ),
        CatalogEntry(
            name="Z2xZ3",
            recipe="product:zmod:2,zmod:3",
            basis="componentwise arithmetic",
            expected={
                "order": 6,
                "delta": full,
                "jacobson": [0],
                "properties": {"semisimple": True},
            },
        ),
        CatalogEntry(
            name="M2(Z2)",
            recipe="mat:2:zmod:2",
            basis="hand enumeration of 2x2 matrices",
            expected={
                "order": 16,
                "delta": full,
                "jacobson": [0],
                "properties": {"semisimple": True, "delta-quasipolar": True,
                               "j-quasipolar": False, "right-pp": True},
            },
        ),
        CatalogEntry(
            name="M2(Z3)",
            recipe="mat:2:zmod:3",
            basis="simple artinian structure",
            expected={
                "order": 81,
                "delta": full,
                "jacobson": [0],
                "properties": {"semisimple": True, "delta-quasipolar": True},
            },
        ),
        CatalogEntry(
            name="T2(Z2)",
            recipe="tri:2:zmod:2",
            basis="hand enumeration of triangular matrices",
            expected={
                "order": 8,
                "delta": [0, 1, 2, 3],
                "jacobson": [0, 2],
                "properties": {"delta-quasipolar": True, "j-quasipolar": True,
                               "abelian": False, "right-pp": False},
            },
        ),
        CatalogEntry(
            name="T2(Z3)",
            recipe="tri:2:zmod:3",
            basis="hand enumeration of triangular matrices",
            expected={
                "order": 27,
                "delta": [0, 1, 2, 3, 4, 5, 6, 7, 8],
                "jacobson": [0, 3, 6],
                "properties": {"delta-quasipolar": False,
                               "weakly-delta-quasipolar": False},
            },
        ),
        CatalogEntry(
            name="CT2(Z2)",
            recipe="cdtri:2:zmod:2",
            basis="constant-diagonal structure",
            expected={
                "order": 4,
                "delta": [0, 1],
                "jacobson": [0, 1],
                "properties": {"delta-quasipolar": True, "local": True,
                               "uniquely-clean": True, "strongly-j-clean": True},
            },
        ),
        CatalogEntry(
            name="CT2(Z3)",
            recipe="cdtri:2:zmod:3",
            basis="constant-diagonal structure",
            expected={
                "order": 9,
                "delta": [0, 1, 2],
                "jacobson": [0, 1, 2],
                "properties": {"delta-quasipolar": False, "quasipolar": True,
                               "local": True},
            },
        ),
        CatalogEntry(
            name="CT3(Z2)",
            recipe="cdtri:3:zmod:2",
            basis="constant-diagonal structure",
            expected={
                "order": 16,
                "delta": [0, 1, 2, 3, 4, 5, 6, 7],
                "jacobson": [0, 1, 2, 3, 4, 5, 6, 7],
                "properties": {"delta-quasipolar": True, "abelian": True,
                               "local": True, "strongly-regular": False},
            },
        ),
        CatalogEntry(
            name="D(Z2,Z2)",
            recipe="dorroh:zmod:2",
            basis="extension isomorphic to a boolean product",
            expected={
                "order": 4,
                "delta": full,
                "jacobson": [0],
                "properties": {"boolean": True, "delta-quasipolar": True},
            },
        ),
        CatalogEntry(
            name="T2(Z2)/delta",
            recipe="quot:delta:tri:2:zmod:2",
            basis="quotient by the agreed delta ideal",
            expected={"order": 2, "properties": {"boolean": True}},
        ),
        CatalogEntry(
            name="Z4/(2)",
            recipe="quot:gen:2:zmod:4",
            basis="quotient by the ideal generated by 2",
            expected={"order": 2, "properties": {"boolean": True}},
        ),
    ]


def build_entry(entry: CatalogEntry) -> FiniteRing:
    """Build or load the ring for an entry, renamed to the entry's name."""
    if entry.file is not None:
        return renamed(load_ring(entry.file), entry.name)
    if entry.recipe is not None:
        return renamed(build_preset(entry.recipe), entry.name)
    raise ValueError(f"catalog entry {entry.name!r} has neither recipe nor file")


def verify_expected(entry: CatalogEntry, ring: FiniteRing) -> list[str]:
    """Recompute an entry's expected facts; return the list of mismatches."""
    from ringlab.properties import ring_property

    expected = entry.expected or {}
    mismatches: list[str] = []
    if "order" in expected and ring.order != expected["order"]:
        mismatches.append(
            f"order: expected {expected['order']}, computed {ring.order}"
        )
    if "delta" in expected:
        want = expected["delta"]
        if want == "full":
            want = list(range(ring.order))
        got = delta_mask(ring).to_json()
        if got != list(want):
            mismatches.append(f"delta: expected {want}, computed {got}")
    if "jacobson" in expected:
        got = jacobson(ring).to_json()
        if got != list(expected["jacobson"]):
            mismatches.append(
                f"jacobson: expected {expected['jacobson']}, computed {got}"
            )
    for name, want in expected.get("properties", {}).items():
        got = ring_property(ring, name)[0]
        if got != want:
            mismatches.append(f"property {name}: expected {want}, computed {got}")
    return mismatches


# --------------------------------------------------------------------------
# manifests


def load_catalog_manifest(path: str | Path) -> list[CatalogEntry]:
    """Read a catalog description: ``{"entries": [{"name", "preset"|"file"}]}``.

    File paths are resolved relative to the manifest location.
    """
    path = Path(path)
    obj = json.loads(path.read_text())
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise ValueError("catalog manifest must be an object with an 'entries' list")
    entries: list[CatalogEntry] = []
    for raw in obj["entries"]:
        if not isinstance(raw, dict) or "name" not in raw:
            raise ValueError(f"malformed catalog entry: {raw!r}")
        name = str(raw["name"])
        has_preset = "preset" in raw
        has_file = "file" in raw
        if has_preset == has_file:
            raise ValueError(
                f"catalog entry {name!r} needs exactly one of 'preset' or 'file'"
            )
        entries.append(
            CatalogEntry(
                name=name,
                recipe=str(raw["preset"]) if has_preset else None,
                file=str(path.parent / raw["file"]) if has_file else None,
                basis=str(raw.get("basis", "")),
                expected=raw.get("expected"),
            )
        )
    return entries

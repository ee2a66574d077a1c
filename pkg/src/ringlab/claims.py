"""The claim registry and its mechanical re-verification over the catalog.

Each registered claim carries a checker that scans the catalog rings for
counterexamples.  A claim with witnesses is ``violated`` unless it is listed
as disputed, in which case the witnesses are the documented counterexamples
and the status token is ``disputed-paper-claim``.  Statements about infinite
rings carry no checker and are reported ``out-of-scope``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ringlab.catalog import CatalogEntry, build_entry, build_preset, dorroh_of_ring
from ringlab.core import (
    FiniteRing,
    build_corner,
    build_product,
    build_quotient,
    element_sets,
    is_zmod2,
    units_map,
)
from ringlab.ideals import socle, two_sided_ideals
from ringlab.radicals import DeltaDisagreement, delta, delta_mask, jacobson, qnil_set
from ringlab.properties import (
    PropertyName,
    center,
    element_property,
    idempotents_lift,
    property_mask,
    ring_property,
    spectral_candidates,
)

STATUS_HOLDS = "holds-on-catalog"
STATUS_VIOLATED = "violated"
STATUS_DISPUTED = "disputed-paper-claim"
STATUS_OUT_OF_SCOPE = "out-of-scope"

# products of catalog pairs are checked up to this combined order
PRODUCT_PAIR_CAP = 128


@dataclass(frozen=True)
class SuiteContext:
    entries: tuple[CatalogEntry, ...]
    rings: dict

    def items(self):
        for entry in self.entries:
            yield entry.name, self.rings[entry.name]


Checker = Callable[[SuiteContext], list[dict]]


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    check: Checker | None
    disputed: tuple[str, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class TheoremResult:
    claim_id: str
    summary: str
    status: str
    witnesses: tuple[dict, ...]
    note: str


# --------------------------------------------------------------------------
# helpers


def _holds(ring: FiniteRing, prop: PropertyName) -> bool:
    return ring_property(ring, prop)[0]


def _witness(ring_name: str, element: int | None = None, detail: str = "") -> dict:
    out: dict = {"ring": ring_name, "element": element}
    if detail:
        out["detail"] = detail
    return out


# --------------------------------------------------------------------------
# checkers


def _check_five_characterizations(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        try:
            computation = delta(ring)
        except DeltaDisagreement as err:
            out.append(_witness(name, detail=str(err)))
            continue
        if not computation.agree:
            out.append(_witness(name))
    return out


def _check_semisimple_or_boolean(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.SEMISIMPLE) or _holds(ring, PropertyName.BOOLEAN):
            holds, witness = ring_property(ring, PropertyName.DELTA_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_j_implies_delta(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        for a in range(ring.order):
            if element_property(ring, a, PropertyName.J_QUASIPOLAR) is not None:
                if element_property(ring, a, PropertyName.DELTA_QUASIPOLAR) is None:
                    out.append(_witness(name, a))
                    break
    return out


def _check_socle_in_radical_converse(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if socle(ring).is_subset(jacobson(ring)) and _holds(
            ring, PropertyName.DELTA_QUASIPOLAR
        ):
            holds, witness = ring_property(ring, PropertyName.J_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_conjugation_invariance(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        mask = property_mask(ring, PropertyName.DELTA_QUASIPOLAR)
        for u, u_inv in units_map(ring).items():
            for a in range(ring.order):
                conjugate = ring.mul[ring.mul[u_inv][a]][u]
                if (a in mask) != (conjugate in mask):
                    out.append(_witness(name, a, detail=f"conjugating unit {u}"))
                    break
            else:
                continue
            break
    return out


def _check_shift_invariance(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        mask = property_mask(ring, PropertyName.DELTA_QUASIPOLAR)
        for a in range(ring.order):
            mirrored = ring.neg(ring.add[ring.one][a])
            if (a in mask) != (mirrored in mask):
                out.append(_witness(name, a))
                break
    return out


def _check_unit_spectral_identity(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if delta_mask(ring).bits != jacobson(ring).bits:
            continue
        if not _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            continue
        for u in units_map(ring):
            if spectral_candidates(ring, u, "delta") != (ring.one,):
                out.append(_witness(name, u))
                break
    return out


def _check_two_in_delta(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            two = ring.add[ring.one][ring.one]
            if two not in delta_mask(ring):
                out.append(_witness(name, two))
    return out


def _check_local_quasipolar(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.LOCAL) and _holds(ring, PropertyName.QUASIPOLAR):
            holds, witness = ring_property(ring, PropertyName.DELTA_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_right_pp(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            holds, witness = ring_property(ring, PropertyName.RIGHT_PP)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_abelian_strongly_regular(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.ABELIAN) and _holds(
            ring, PropertyName.DELTA_QUASIPOLAR
        ):
            holds, witness = ring_property(ring, PropertyName.STRONGLY_REGULAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _abelian_delta_implies(conclusion: PropertyName) -> Checker:
    def check(ctx: SuiteContext) -> list[dict]:
        out = []
        for name, ring in ctx.items():
            if _holds(ring, PropertyName.ABELIAN) and _holds(
                ring, PropertyName.DELTA_QUASIPOLAR
            ):
                holds, witness = ring_property(ring, conclusion)
                if not holds:
                    out.append(_witness(name, witness))
        return out

    return check


def _check_quotient_boolean_lifting(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if not _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            continue
        ideal = delta_mask(ring)
        quotient, _ = build_quotient(ring, ideal)
        if not ring_property(quotient, PropertyName.BOOLEAN)[0]:
            out.append(_witness(name, detail="quotient by delta is not boolean"))
            continue
        lifts, bad = idempotents_lift(ring, ideal)
        if not lifts:
            out.append(
                _witness(name, bad, detail="idempotent does not lift along delta")
            )
    return out


def _check_delta_r_clean_equivalence(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            holds, witness = ring_property(ring, PropertyName.DELTA_R_CLEAN)
            if not holds:
                out.append(_witness(name, witness, detail="not delta-r-clean"))
                continue
        if _holds(ring, PropertyName.ABELIAN) and _holds(
            ring, PropertyName.DELTA_R_CLEAN
        ):
            holds, witness = ring_property(ring, PropertyName.DELTA_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness, detail="converse fails"))
    return out


def _check_exchange(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            holds, witness = ring_property(ring, PropertyName.EXCHANGE)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_boolean_regular_chain(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        zero_only = delta_mask(ring).bits == 1 << ring.zero
        if zero_only and _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            holds, witness = ring_property(ring, PropertyName.BOOLEAN)
            if not holds:
                out.append(_witness(name, witness, detail="trivial delta, not boolean"))
                continue
        if _holds(ring, PropertyName.BOOLEAN):
            for conclusion in (
                PropertyName.VON_NEUMANN_REGULAR,
                PropertyName.DELTA_QUASIPOLAR,
            ):
                holds, witness = ring_property(ring, conclusion)
                if not holds:
                    out.append(_witness(name, witness, detail=conclusion.value))
                    break
    return out


def _check_abelian_j_clean(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.ABELIAN) and _holds(ring, PropertyName.J_CLEAN):
            holds, witness = ring_property(ring, PropertyName.DELTA_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_trivial_idempotents_dichotomy(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        idempotents = element_sets(ring)[1]
        trivial_only = all(e in (ring.zero, ring.one) for e in idempotents.indices())
        if not trivial_only:
            continue
        left = _holds(ring, PropertyName.DELTA_QUASIPOLAR)
        quotient, _ = build_quotient(ring, delta_mask(ring))
        right = is_zmod2(ring) or is_zmod2(quotient)
        if left != right:
            out.append(
                _witness(
                    name,
                    detail=f"delta-quasipolar is {left} but the two-element test gives {right}",
                )
            )
    return out


def _check_radical_chain(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if not _holds(ring, PropertyName.DELTA_QUASIPOLAR):
            continue
        dm, jm = delta_mask(ring), jacobson(ring)
        if dm.bits != jm.bits:
            continue
        nil = element_sets(ring)[2]
        qnil = qnil_set(ring)
        if not (jm.bits == qnil.bits == nil.bits == dm.bits):
            out.append(
                _witness(
                    name,
                    detail=(
                        f"J={list(jm.indices())}, qnil={list(qnil.indices())}, "
                        f"nil={list(nil.indices())}, delta={list(dm.indices())}"
                    ),
                )
            )
    return out


def _check_dorroh_transfer(ctx: SuiteContext) -> list[dict]:
    out = []
    for entry in ctx.entries:
        if not entry.recipe or not entry.recipe.startswith("dorroh:"):
            continue
        extension = ctx.rings[entry.name]
        base = build_preset(entry.recipe[len("dorroh:"):])
        data = dorroh_of_ring(base)
        ext_delta_qp = _holds(extension, PropertyName.DELTA_QUASIPOLAR)
        base_delta_qp = _holds(base, PropertyName.DELTA_QUASIPOLAR)
        if ext_delta_qp and not base_delta_qp:
            out.append(_witness(entry.name, detail="base ring fails to inherit"))
            continue
        idempotents_commute = all(
            data.left_action[e][v] == data.right_action[v][e]
            for e in element_sets(base)[1].indices()
            for v in range(data.bimodule.order)
        )
        bim_full_delta = (
            delta_mask(data.bimodule).bits == (1 << data.bimodule.order) - 1
        )
        if base_delta_qp and idempotents_commute and bim_full_delta:
            if not ext_delta_qp:
                out.append(
                    _witness(entry.name, detail="extension fails despite hypotheses")
                )
    return out


def _check_delta_implies_weakly(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        strict = property_mask(ring, PropertyName.DELTA_QUASIPOLAR)
        weak = property_mask(ring, PropertyName.WEAKLY_DELTA_QUASIPOLAR)
        if strict.bits & ~weak.bits:
            bad = next(a for a in strict.indices() if a not in weak)
            out.append(_witness(name, bad))
    return out


def _check_strongly_j_clean_weakly(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if _holds(ring, PropertyName.STRONGLY_J_CLEAN):
            holds, witness = ring_property(ring, PropertyName.WEAKLY_DELTA_QUASIPOLAR)
            if not holds:
                out.append(_witness(name, witness))
    return out


def _check_weakly_surjective_images(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if not _holds(ring, PropertyName.WEAKLY_DELTA_QUASIPOLAR):
            continue
        for ideal in two_sided_ideals(ring):
            quotient, _ = build_quotient(ring, ideal)
            holds, witness = ring_property(
                quotient, PropertyName.WEAKLY_DELTA_QUASIPOLAR
            )
            if not holds:
                out.append(
                    _witness(
                        name,
                        witness,
                        detail=f"image modulo {list(ideal.indices())} fails",
                    )
                )
                break
    return out


def _check_weakly_corners(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if not _holds(ring, PropertyName.WEAKLY_DELTA_QUASIPOLAR):
            continue
        central_idempotents = element_sets(ring)[1] & center(ring)
        for e in central_idempotents.indices():
            corner = build_corner(ring, e)
            holds, witness = ring_property(corner, PropertyName.WEAKLY_DELTA_QUASIPOLAR)
            if not holds:
                out.append(
                    _witness(name, witness, detail=f"corner at idempotent {e} fails")
                )
                break
    return out


def _check_weakly_finite_products(ctx: SuiteContext) -> list[dict]:
    out = []
    pairs = list(ctx.items())
    for i, (name_a, ring_a) in enumerate(pairs):
        for name_b, ring_b in pairs[i:]:
            if ring_a.order * ring_b.order > PRODUCT_PAIR_CAP:
                continue
            product = build_product([ring_a, ring_b])
            factors_weak = _holds(ring_a, PropertyName.WEAKLY_DELTA_QUASIPOLAR) and _holds(
                ring_b, PropertyName.WEAKLY_DELTA_QUASIPOLAR
            )
            product_weak = ring_property(
                product, PropertyName.WEAKLY_DELTA_QUASIPOLAR
            )[0]
            if factors_weak != product_weak:
                out.append(
                    _witness(
                        f"{name_a}x{name_b}",
                        detail=f"product weakly {product_weak}, factors weakly {factors_weak}",
                    )
                )
    return out


def _check_weakly_equals_strongly_delta_r(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        for a in range(ring.order):
            weak = element_property(ring, a, PropertyName.WEAKLY_DELTA_QUASIPOLAR)
            strong = element_property(
                ring, ring.neg(a), PropertyName.STRONGLY_DELTA_R_CLEAN
            )
            if (weak is None) != (strong is None):
                out.append(_witness(name, a))
                break
    return out


def _check_local_five_equivalences(ctx: SuiteContext) -> list[dict]:
    out = []
    for name, ring in ctx.items():
        if not _holds(ring, PropertyName.LOCAL):
            continue
        if jacobson(ring).bits == 1 << ring.zero:
            continue
        quotient_j, _ = build_quotient(ring, jacobson(ring))
        quotient_d, _ = build_quotient(ring, delta_mask(ring))
        values = [
            _holds(ring, PropertyName.WEAKLY_DELTA_QUASIPOLAR),
            _holds(ring, PropertyName.STRONGLY_J_CLEAN),
            _holds(ring, PropertyName.UNIQUELY_CLEAN),
            is_zmod2(quotient_j),
            is_zmod2(quotient_d),
        ]
        if len(set(values)) > 1:
            out.append(_witness(name, detail=f"equivalence chain breaks: {values}"))
    return out


# --------------------------------------------------------------------------
# registry


def _out_of_scope(claim_id: str, summary: str, note: str) -> Claim:
    return Claim(id=claim_id, summary=summary, check=None, note=note)


def registry() -> list[Claim]:
    return [
        Claim(
            id="delta-five-characterizations",
            summary="The five characterizations of the delta ideal coincide.",
            check=_check_five_characterizations,
        ),
        Claim(
            id="semisimple-or-boolean-is-delta-quasipolar",
            summary="Semisimple rings and boolean rings are delta-quasipolar.",
            check=_check_semisimple_or_boolean,
        ),
        Claim(
            id="j-quasipolar-implies-delta-quasipolar",
            summary="Every j-quasipolar element is delta-quasipolar.",
            check=_check_j_implies_delta,
        ),
        Claim(
            id="delta-quasipolar-with-socle-in-radical-is-j-quasipolar",
            summary=(
                "When the socle lies in the radical, delta-quasipolar rings "
                "are j-quasipolar."
            ),
            check=_check_socle_in_radical_converse,
        ),
        Claim(
            id="conjugation-preserves-delta-quasipolar",
            summary="Unit conjugation preserves delta-quasipolarity of elements.",
            check=_check_conjugation_invariance,
        ),
        Claim(
            id="minus-one-shift-preserves-delta-quasipolar",
            summary="An element a is delta-quasipolar iff -1-a is.",
            check=_check_shift_invariance,
        ),
        Claim(
            id="unit-spectral-idempotent-is-identity",
            summary=(
                "In a delta-quasipolar ring with delta equal to the radical, "
                "the only spectral companion of a unit is 1."
            ),
            check=_check_unit_spectral_identity,
        ),
        Claim(
            id="delta-quasipolar-ring-has-two-in-delta",
            summary="In a delta-quasipolar ring the element 1+1 lies in delta.",
            check=_check_two_in_delta,
        ),
        Claim(
            id="local-quasipolar-implies-delta-quasipolar",
            summary="Local quasipolar rings are delta-quasipolar.",
            check=_check_local_quasipolar,
            disputed=("Z9", "CT2(Z3)"),
            note=(
                "The argument needs every unit u to have u+1 inside delta, "
                "which a local ring does not guarantee: in Z9 the unit 1 has "
                "neither 1+0 nor 1+1 in delta = {0,3,6}, and the same failure "
                "occurs in CT2(Z3).  Local rings whose residue ring modulo the "
                "radical has two elements do satisfy the conclusion."
            ),
        ),
        Claim(
            id="delta-quasipolar-implies-right-pp",
            summary=(
                "Every principal right ideal of a delta-quasipolar ring is "
                "generated by an idempotent."
            ),
            check=_check_right_pp,
            disputed=("Z4", "Z8", "T2(Z2)", "CT2(Z2)", "CT3(Z2)"),
            note=(
                "The argument treats delta-quasipolarity of -1-a as "
                "membership of -1-a in delta, which fails in general.  In Z4 "
                "the ideal 2R = {0,2} is not generated by any idempotent even "
                "though Z4 is delta-quasipolar."
            ),
        ),
        Claim(
            id="abelian-delta-quasipolar-implies-strongly-regular",
            summary="Abelian delta-quasipolar rings are strongly regular.",
            check=_check_abelian_strongly_regular,
            disputed=("Z4", "Z8", "CT2(Z2)", "CT3(Z2)"),
            note=(
                "Depends on the principal-ideal claim above.  Z4 is abelian "
                "and delta-quasipolar, yet 2 is not a regular element: no b "
                "satisfies 4b = 2."
            ),
        ),
        Claim(
            id="abelian-delta-quasipolar-implies-quasipolar",
            summary="Abelian delta-quasipolar rings are quasipolar.",
            check=_abelian_delta_implies(PropertyName.QUASIPOLAR),
        ),
        Claim(
            id="abelian-delta-quasipolar-implies-strongly-clean",
            summary="Abelian delta-quasipolar rings are strongly clean.",
            check=_abelian_delta_implies(PropertyName.STRONGLY_CLEAN),
        ),
        Claim(
            id="delta-quasipolar-quotient-is-boolean-with-lifting",
            summary=(
                "For a delta-quasipolar ring, the quotient by delta is boolean "
                "and idempotents lift modulo delta."
            ),
            check=_check_quotient_boolean_lifting,
        ),
        Claim(
            id="delta-quasipolar-iff-delta-r-clean-for-abelian",
            summary=(
                "Delta-quasipolar rings are delta-r-clean; for abelian rings "
                "the two notions agree."
            ),
            check=_check_delta_r_clean_equivalence,
        ),
        Claim(
            id="delta-quasipolar-implies-exchange",
            summary="Delta-quasipolar rings are exchange rings.",
            check=_check_exchange,
        ),
        Claim(
            id="boolean-regular-chain",
            summary=(
                "Delta-quasipolar rings with zero delta are boolean, and "
                "boolean rings are regular and delta-quasipolar."
            ),
            check=_check_boolean_regular_chain,
        ),
        Claim(
            id="abelian-j-clean-implies-delta-quasipolar",
            summary="Abelian j-clean rings are delta-quasipolar.",
            check=_check_abelian_j_clean,
        ),
        Claim(
            id="trivial-idempotents-dichotomy",
            summary=(
                "A ring with only trivial idempotents is delta-quasipolar iff "
                "it is the two-element ring or its quotient by delta is."
            ),
            check=_check_trivial_idempotents_dichotomy,
            disputed=("Z3",),
            note=(
                "The dichotomy misses rings whose delta is everything: any "
                "field with more than two elements, such as Z3, has only "
                "trivial idempotents and is delta-quasipolar, but it is not "
                "the two-element ring and its quotient by delta is trivial "
                "rather than two-element."
            ),
        ),
        Claim(
            id="radical-chain-when-delta-equals-radical",
            summary=(
                "In a delta-quasipolar ring with delta equal to the radical, "
                "the radical, the quasinilpotents, the nilpotents, and delta "
                "are the same set."
            ),
            check=_check_radical_chain,
            note=(
                "Finite rings are automatically strongly pi-regular, so that "
                "hypothesis of the original statement needs no separate check "
                "here."
            ),
        ),
        Claim(
            id="dorroh-delta-quasipolar-transfer",
            summary=(
                "A Dorroh-style extension is delta-quasipolar only if its base "
                "is; the converse holds when idempotents commute with the "
                "module part and the module ring equals its own delta."
            ),
            check=_check_dorroh_transfer,
        ),
        Claim(
            id="delta-quasipolar-implies-weakly",
            summary="Delta-quasipolar elements are weakly delta-quasipolar.",
            check=_check_delta_implies_weakly,
        ),
        Claim(
            id="strongly-j-clean-implies-weakly-delta-quasipolar",
            summary="Strongly j-clean rings are weakly delta-quasipolar.",
            check=_check_strongly_j_clean_weakly,
        ),
        Claim(
            id="weakly-delta-quasipolar-surjective-images",
            summary=(
                "Every quotient of a weakly delta-quasipolar ring by a "
                "two-sided ideal is weakly delta-quasipolar."
            ),
            check=_check_weakly_surjective_images,
        ),
        Claim(
            id="weakly-delta-quasipolar-corner-rings",
            summary=(
                "Every corner of a weakly delta-quasipolar ring at a central "
                "idempotent is weakly delta-quasipolar."
            ),
            check=_check_weakly_corners,
        ),
        Claim(
            id="weakly-delta-quasipolar-finite-products",
            summary=(
                "A finite product is weakly delta-quasipolar iff every factor "
                "is; checked on catalog pairs up to combined order "
                f"{PRODUCT_PAIR_CAP}."
            ),
            check=_check_weakly_finite_products,
        ),
        Claim(
            id="weakly-equals-strongly-delta-r-clean",
            summary=(
                "An element a is weakly delta-quasipolar iff -a is strongly "
                "delta-r-clean."
            ),
            check=_check_weakly_equals_strongly_delta_r,
        ),
        Claim(
            id="local-ring-five-equivalences",
            summary=(
                "For a local ring with nonzero radical: weakly "
                "delta-quasipolar, strongly j-clean, uniquely clean, "
                "two-element residue modulo the radical, and two-element "
                "residue modulo delta are all equivalent."
            ),
            check=_check_local_five_equivalences,
        ),
        _out_of_scope(
            "rationals-delta-quasipolar-integers-not",
            "The rational field is delta-quasipolar while the integers are not.",
            "Involves the infinite rings Q and Z; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "prime-localization-quasipolar-not-delta",
            (
                "Localizing the integers at an odd prime gives a quasipolar "
                "ring that is not delta-quasipolar."
            ),
            "Involves an infinite localization; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "eventually-constant-product-strongly-clean-not-quasipolar",
            (
                "The eventually constant sequences inside an infinite product "
                "of two-element fields form a strongly clean ring that is not "
                "quasipolar."
            ),
            "Involves an infinite product construction; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "dorroh-of-integers-by-rationals-not-delta-quasipolar",
            (
                "The Dorroh-style extension of the integers by the rationals "
                "is not delta-quasipolar."
            ),
            "Involves infinite base and module rings; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "integer-matrix-ring-not-delta-quasipolar",
            "Full matrix rings over the integers are not delta-quasipolar.",
            "Involves an infinite matrix ring; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "integer-triangular-matrix-ring-not-delta-quasipolar",
            "Triangular matrix rings over the integers are not delta-quasipolar.",
            "Involves an infinite matrix ring; not evaluated on the finite catalog.",
        ),
        _out_of_scope(
            "infinite-direct-sum-surjects-onto-weakly-delta-quasipolar",
            (
                "A ring that is not weakly delta-quasipolar can surject onto a "
                "weakly delta-quasipolar ring, via an infinite direct sum."
            ),
            "Involves an infinite direct sum; not evaluated on the finite catalog.",
        ),
    ]


# --------------------------------------------------------------------------
# evaluation


def theorem_suite(
    entries: Sequence[CatalogEntry], rings: dict | None = None
) -> list[TheoremResult]:
    """Evaluate every registered claim against the given catalog."""
    built = dict(rings) if rings else {}
    for entry in entries:
        if entry.name not in built:
            built[entry.name] = build_entry(entry)
    ctx = SuiteContext(entries=tuple(entries), rings=built)
    results = []
    for claim in registry():
        if claim.check is None:
            results.append(
                TheoremResult(
                    claim_id=claim.id,
                    summary=claim.summary,
                    status=STATUS_OUT_OF_SCOPE,
                    witnesses=(),
                    note=claim.note,
                )
            )
            continue
        witnesses = tuple(claim.check(ctx))
        if witnesses:
            status = STATUS_DISPUTED if claim.disputed else STATUS_VIOLATED
        else:
            status = STATUS_HOLDS
        results.append(
            TheoremResult(
                claim_id=claim.id,
                summary=claim.summary,
                status=status,
                witnesses=witnesses,
                note=claim.note,
            )
        )
    return results


def has_violation(results: Iterable[TheoremResult]) -> bool:
    return any(r.status == STATUS_VIOLATED for r in results)


# --------------------------------------------------------------------------
# counterexample search


def search_counterexample(
    hypotheses: Sequence, conclusion, entries: Sequence[CatalogEntry],
    rings: dict | None = None,
) -> dict | None:
    """First catalog element satisfying all hypotheses but not the conclusion.

    Ring-only properties are evaluated once per ring; element-level
    properties are evaluated per element.  Returns ``{"ring", "element"}`` or
    ``None`` when the implication survives the whole catalog.
    """
    from ringlab.properties import _coerce

    hyp_props = [_coerce(p) for p in hypotheses]
    concl_prop = _coerce(conclusion)
    ring_only = PropertyName.ring_only()
    built = dict(rings) if rings else {}

    def satisfied(ring: FiniteRing, prop: PropertyName, a: int) -> bool:
        if prop in ring_only:
            return ring_property(ring, prop)[0]
        return element_property(ring, a, prop) is not None

    for entry in entries:
        if entry.name not in built:
            built[entry.name] = build_entry(entry)
        ring = built[entry.name]
        for a in range(ring.order):
            if all(satisfied(ring, p, a) for p in hyp_props) and not satisfied(
                ring, concl_prop, a
            ):
                return {"ring": entry.name, "element": a}
    return None

"""Element and ring properties with re-checkable certificates.

Every element-level decision returns either ``None`` (the element fails the
property) or a :class:`Certificate` whose witnesses can be re-verified from
scratch by :func:`recheck_certificate`.  Ring-level decisions return a
``(holds, witness)`` pair where the witness, when present, is the least
element (or idempotent) exhibiting the failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ringlab.core import (
    ComputationFault,
    ElementSet,
    FiniteRing,
    IdealError,
    bit_members,
    build_quotient,
    cached_on,
    element_sets,
    is_zmod2,
    units_map,
)
from ringlab.ideals import (
    is_direct_summand,
    is_two_sided_ideal,
    maximal_right_ideals,
    principal_right_ideal,
    socle,
)
from ringlab.radicals import (
    commutant_bits,
    delta_mask,
    jacobson,
    qnil_set,
)


class PropertyName(str, Enum):
    """All decidable properties; enumeration order is the reporting order."""

    QUASIPOLAR = "quasipolar"
    NIL_QUASIPOLAR = "nil-quasipolar"
    J_QUASIPOLAR = "j-quasipolar"
    DELTA_QUASIPOLAR = "delta-quasipolar"
    WEAKLY_DELTA_QUASIPOLAR = "weakly-delta-quasipolar"
    CLEAN = "clean"
    STRONGLY_CLEAN = "strongly-clean"
    J_CLEAN = "j-clean"
    STRONGLY_J_CLEAN = "strongly-j-clean"
    UNIQUELY_CLEAN = "uniquely-clean"
    DELTA_R_CLEAN = "delta-r-clean"
    STRONGLY_DELTA_R_CLEAN = "strongly-delta-r-clean"
    UNIQUELY_DELTA_R_CLEAN = "uniquely-delta-r-clean"
    BOOLEAN = "boolean"
    ABELIAN = "abelian"
    LOCAL = "local"
    SEMISIMPLE = "semisimple"
    VON_NEUMANN_REGULAR = "von-neumann-regular"
    STRONGLY_REGULAR = "strongly-regular"
    STRONGLY_PI_REGULAR = "strongly-pi-regular"
    EXCHANGE = "exchange"
    RIGHT_PP = "right-pp"

    @classmethod
    def ring_only(cls) -> frozenset["PropertyName"]:
        return frozenset(
            {cls.BOOLEAN, cls.ABELIAN, cls.LOCAL, cls.SEMISIMPLE, cls.RIGHT_PP}
        )


def _coerce(prop) -> PropertyName:
    if isinstance(prop, PropertyName):
        return prop
    try:
        return PropertyName(prop)
    except ValueError:
        raise ValueError(f"unknown property name: {prop!r}") from None


@dataclass(frozen=True)
class Certificate:
    """A positive decision together with the data that justifies it."""

    property: PropertyName
    element: int
    witnesses: tuple[tuple[str, int], ...]
    checks: tuple[tuple[str, bool], ...]
    witness_count: int | None = None


# --------------------------------------------------------------------------
# commutants


def commutant(ring: FiniteRing, a: int) -> ElementSet:
    if not 0 <= a < ring.order:
        raise ValueError(f"element {a} out of range")
    return ElementSet(commutant_bits(ring, a), ring.order)


def double_commutant(ring: FiniteRing, a: int) -> ElementSet:
    if not 0 <= a < ring.order:
        raise ValueError(f"element {a} out of range")
    memo = cached_on(ring, "double_commutant_bits", dict)
    if a not in memo:
        comm = bit_members(commutant_bits(ring, a))
        mul = ring.mul
        bits = 0
        for x in range(ring.order):
            row = mul[x]
            if all(row[y] == mul[y][x] for y in comm):
                bits |= 1 << x
        memo[a] = bits
    return ElementSet(memo[a], ring.order)


def center(ring: FiniteRing) -> ElementSet:
    def compute():
        mul = ring.mul
        bits = 0
        for x in range(ring.order):
            row = mul[x]
            if all(row[y] == mul[y][x] for y in range(ring.order)):
                bits |= 1 << x
        return ElementSet(bits, ring.order)

    return cached_on(ring, "center", compute)


# --------------------------------------------------------------------------
# shared target sets


def _target_bits(ring: FiniteRing, kind: str) -> int:
    if kind == "delta":
        return delta_mask(ring).bits
    if kind == "j":
        return jacobson(ring).bits
    if kind == "nil":
        return element_sets(ring)[2].bits
    raise ValueError(f"unknown target kind: {kind!r}")


# --------------------------------------------------------------------------
# witness finders (return a dict of named witnesses, or None)


def _find_quasipolar(ring: FiniteRing, a: int) -> dict | None:
    units = element_sets(ring)[0].bits
    qnil = qnil_set(ring).bits
    for p in element_sets(ring)[1].indices():
        if p not in double_commutant(ring, a):
            continue
        if (units >> ring.add[a][p]) & 1 and (qnil >> ring.mul[a][p]) & 1:
            return {"p": p}
    return None


def _find_quasipolar_into(ring: FiniteRing, a: int, kind: str) -> dict | None:
    target = _target_bits(ring, kind)
    for p in element_sets(ring)[1].indices():
        if p not in double_commutant(ring, a):
            continue
        if (target >> ring.add[a][p]) & 1:
            return {"p": p}
    return None


def _find_weakly_delta_quasipolar(ring: FiniteRing, a: int) -> dict | None:
    target = delta_mask(ring).bits
    comm = commutant_bits(ring, a)
    for p in element_sets(ring)[1].indices():
        if (comm >> p) & 1 and (target >> ring.add[a][p]) & 1:
            return {"p": p}
    return None


def _find_clean(ring: FiniteRing, a: int, strong: bool) -> dict | None:
    units = element_sets(ring)[0].bits
    for e in element_sets(ring)[1].indices():
        u = ring.sub(a, e)
        if not (units >> u) & 1:
            continue
        if strong and ring.mul[e][u] != ring.mul[u][e]:
            continue
        return {"e": e, "u": u}
    return None


def _find_additive_clean(ring: FiniteRing, a: int, kind: str, strong: bool) -> dict | None:
    target = _target_bits(ring, kind)
    for e in element_sets(ring)[1].indices():
        w = ring.sub(a, e)
        if not (target >> w) & 1:
            continue
        if strong and ring.mul[e][w] != ring.mul[w][e]:
            continue
        return {"e": e, "w": w}
    return None


def _count_clean_decompositions(ring: FiniteRing, a: int) -> int:
    units = element_sets(ring)[0].bits
    return sum(
        1 for e in element_sets(ring)[1].indices() if (units >> ring.sub(a, e)) & 1
    )


def _count_delta_decompositions(ring: FiniteRing, a: int) -> int:
    target = delta_mask(ring).bits
    return sum(
        1 for e in element_sets(ring)[1].indices() if (target >> ring.sub(a, e)) & 1
    )


def _find_von_neumann_regular(ring: FiniteRing, a: int) -> dict | None:
    mul = ring.mul
    for b in range(ring.order):
        if mul[mul[a][b]][a] == a:
            return {"b": b}
    return None


def _find_strongly_regular(ring: FiniteRing, a: int) -> dict | None:
    mul = ring.mul
    aa = mul[a][a]
    for b in range(ring.order):
        if mul[aa][b] == a:
            return {"b": b}
    return None


def _find_strongly_pi_regular(ring: FiniteRing, a: int) -> dict | None:
    mul = ring.mul
    power = a
    for n in range(1, ring.order + 1):
        next_power = mul[power][a]
        for x in range(ring.order):
            if mul[next_power][x] == power:
                return {"n": n, "x": x}
        power = next_power
    return None


def _find_exchange(ring: FiniteRing, a: int) -> dict | None:
    mul = ring.mul
    complement = ring.sub(ring.one, a)
    for e in element_sets(ring)[1].indices():
        e_conj = ring.sub(ring.one, e)
        r_found = next((r for r in range(ring.order) if mul[a][r] == e), None)
        if r_found is None:
            continue
        s_found = next(
            (s for s in range(ring.order) if mul[complement][s] == e_conj), None
        )
        if s_found is None:
            continue
        return {"e": e, "r": r_found, "s": s_found}
    return None


_FINDERS = {
    PropertyName.QUASIPOLAR: _find_quasipolar,
    PropertyName.NIL_QUASIPOLAR: lambda R, a: _find_quasipolar_into(R, a, "nil"),
    PropertyName.J_QUASIPOLAR: lambda R, a: _find_quasipolar_into(R, a, "j"),
    PropertyName.DELTA_QUASIPOLAR: lambda R, a: _find_quasipolar_into(R, a, "delta"),
    PropertyName.WEAKLY_DELTA_QUASIPOLAR: _find_weakly_delta_quasipolar,
    PropertyName.CLEAN: lambda R, a: _find_clean(R, a, strong=False),
    PropertyName.STRONGLY_CLEAN: lambda R, a: _find_clean(R, a, strong=True),
    PropertyName.J_CLEAN: lambda R, a: _find_additive_clean(R, a, "j", strong=False),
    PropertyName.STRONGLY_J_CLEAN: lambda R, a: _find_additive_clean(R, a, "j", strong=True),
    PropertyName.DELTA_R_CLEAN: lambda R, a: _find_additive_clean(R, a, "delta", strong=False),
    PropertyName.STRONGLY_DELTA_R_CLEAN: lambda R, a: _find_additive_clean(
        R, a, "delta", strong=True
    ),
    PropertyName.VON_NEUMANN_REGULAR: _find_von_neumann_regular,
    PropertyName.STRONGLY_REGULAR: _find_strongly_regular,
    PropertyName.STRONGLY_PI_REGULAR: _find_strongly_pi_regular,
    PropertyName.EXCHANGE: _find_exchange,
}


# --------------------------------------------------------------------------
# certificate checks


def _certificate_checks(
    ring: FiniteRing, prop: PropertyName, a: int, witnesses: dict
) -> tuple[tuple[str, bool], ...]:
    units, idempotents, nilpotents = element_sets(ring)
    checks: list[tuple[str, bool]] = []

    def idempotent_check(name: str, value: int):
        checks.append((f"{name} is idempotent", value in idempotents))

    if prop in (
        PropertyName.QUASIPOLAR,
        PropertyName.NIL_QUASIPOLAR,
        PropertyName.J_QUASIPOLAR,
        PropertyName.DELTA_QUASIPOLAR,
        PropertyName.WEAKLY_DELTA_QUASIPOLAR,
    ):
        p = witnesses["p"]
        idempotent_check("p", p)
        if prop is PropertyName.WEAKLY_DELTA_QUASIPOLAR:
            checks.append(("p commutes with the element", p in commutant(ring, a)))
        else:
            checks.append(
                ("p double-commutes with the element", p in double_commutant(ring, a))
            )
        shifted = ring.add[a][p]
        if prop is PropertyName.QUASIPOLAR:
            checks.append(("element plus p is a unit", shifted in units))
            checks.append(
                ("element times p is quasinilpotent", ring.mul[a][p] in qnil_set(ring))
            )
        elif prop is PropertyName.NIL_QUASIPOLAR:
            checks.append(("element plus p is nilpotent", shifted in nilpotents))
        elif prop is PropertyName.J_QUASIPOLAR:
            checks.append(
                ("element plus p lies in the Jacobson radical", shifted in jacobson(ring))
            )
        else:
            checks.append(("element plus p lies in delta", shifted in delta_mask(ring)))
    elif prop in (
        PropertyName.CLEAN,
        PropertyName.STRONGLY_CLEAN,
        PropertyName.UNIQUELY_CLEAN,
    ):
        e, u = witnesses["e"], witnesses["u"]
        idempotent_check("e", e)
        checks.append(("u is a unit", u in units))
        checks.append(("e + u equals the element", ring.add[e][u] == a))
        if prop is PropertyName.STRONGLY_CLEAN:
            checks.append(("e and u commute", ring.mul[e][u] == ring.mul[u][e]))
        if prop is PropertyName.UNIQUELY_CLEAN:
            checks.append(
                ("the decomposition is unique", _count_clean_decompositions(ring, a) == 1)
            )
    elif prop in (
        PropertyName.J_CLEAN,
        PropertyName.STRONGLY_J_CLEAN,
        PropertyName.DELTA_R_CLEAN,
        PropertyName.STRONGLY_DELTA_R_CLEAN,
        PropertyName.UNIQUELY_DELTA_R_CLEAN,
    ):
        e, w = witnesses["e"], witnesses["w"]
        idempotent_check("e", e)
        if prop in (PropertyName.J_CLEAN, PropertyName.STRONGLY_J_CLEAN):
            checks.append(("w lies in the Jacobson radical", w in jacobson(ring)))
        else:
            checks.append(("w lies in delta", w in delta_mask(ring)))
        checks.append(("e + w equals the element", ring.add[e][w] == a))
        if prop in (PropertyName.STRONGLY_J_CLEAN, PropertyName.STRONGLY_DELTA_R_CLEAN):
            checks.append(("e and w commute", ring.mul[e][w] == ring.mul[w][e]))
        if prop is PropertyName.UNIQUELY_DELTA_R_CLEAN:
            checks.append(
                ("the decomposition is unique", _count_delta_decompositions(ring, a) == 1)
            )
    elif prop is PropertyName.VON_NEUMANN_REGULAR:
        b = witnesses["b"]
        checks.append(("a b a equals a", ring.mul[ring.mul[a][b]][a] == a))
    elif prop is PropertyName.STRONGLY_REGULAR:
        b = witnesses["b"]
        checks.append(("a a b equals a", ring.mul[ring.mul[a][a]][b] == a))
    elif prop is PropertyName.STRONGLY_PI_REGULAR:
        n, x = witnesses["n"], witnesses["x"]
        mul = ring.mul
        checks.append(("the exponent is at least 1", n >= 1))
        if n >= 1:
            power = a
            for _ in range(n - 1):
                power = mul[power][a]
            checks.append(
                ("a^n equals a^(n+1) x", mul[mul[power][a]][x] == power)
            )
    elif prop is PropertyName.EXCHANGE:
        e, r, s = witnesses["e"], witnesses["r"], witnesses["s"]
        idempotent_check("e", e)
        checks.append(("a r equals e", ring.mul[a][r] == e))
        checks.append(
            (
                "(1 - a) s equals 1 - e",
                ring.mul[ring.sub(ring.one, a)][s] == ring.sub(ring.one, e),
            )
        )
    else:
        raise ValueError(f"property {prop.value} has no element certificates")
    return tuple(checks)


# --------------------------------------------------------------------------
# element-level decisions


def element_property(ring: FiniteRing, a: int, prop) -> Certificate | None:
    prop = _coerce(prop)
    if prop in PropertyName.ring_only():
        raise ValueError(f"property {prop.value} is decided for rings, not elements")
    if not 0 <= a < ring.order:
        raise ValueError(f"element {a} out of range for order {ring.order}")
    memo = cached_on(ring, "element_property", dict)
    key = (prop, a)
    if key in memo:
        return memo[key]

    witness_count = None
    if prop is PropertyName.UNIQUELY_CLEAN:
        count = _count_clean_decompositions(ring, a)
        witnesses = _find_clean(ring, a, strong=False) if count == 1 else None
        witness_count = count if witnesses else None
    elif prop is PropertyName.UNIQUELY_DELTA_R_CLEAN:
        count = _count_delta_decompositions(ring, a)
        witnesses = (
            _find_additive_clean(ring, a, "delta", strong=False) if count == 1 else None
        )
        witness_count = count if witnesses else None
    else:
        witnesses = _FINDERS[prop](ring, a)

    if witnesses is None:
        memo[key] = None
        return None
    certificate = Certificate(
        property=prop,
        element=a,
        witnesses=tuple(sorted(witnesses.items())),
        checks=_certificate_checks(ring, prop, a, witnesses),
        witness_count=witness_count,
    )
    memo[key] = certificate
    return certificate


def recheck_certificate(ring: FiniteRing, certificate: Certificate) -> bool:
    """Re-verify a certificate from its raw witnesses; forged data fails."""
    prop = certificate.property
    if prop in PropertyName.ring_only():
        return False
    a = certificate.element
    if not 0 <= a < ring.order:
        return False
    witnesses = dict(certificate.witnesses)
    try:
        checks = _certificate_checks(ring, prop, a, witnesses)
    except (KeyError, IndexError, TypeError, ValueError):
        return False
    if not all(ok for _, ok in checks):
        return False
    if certificate.witness_count is not None:
        if prop is PropertyName.UNIQUELY_CLEAN:
            return certificate.witness_count == _count_clean_decompositions(ring, a)
        if prop is PropertyName.UNIQUELY_DELTA_R_CLEAN:
            return certificate.witness_count == _count_delta_decompositions(ring, a)
    return True


def property_mask(ring: FiniteRing, prop) -> ElementSet:
    prop = _coerce(prop)
    if prop in PropertyName.ring_only():
        raise ValueError(f"property {prop.value} has no element mask")
    memo = cached_on(ring, "property_mask", dict)
    if prop not in memo:
        bits = 0
        for a in range(ring.order):
            if element_property(ring, a, prop) is not None:
                bits |= 1 << a
        memo[prop] = ElementSet(bits, ring.order)
    return memo[prop]


# --------------------------------------------------------------------------
# ring-level decisions


def _ring_boolean(ring: FiniteRing) -> tuple[bool, int | None]:
    for a in range(ring.order):
        if ring.mul[a][a] != a:
            return False, a
    return True, None


def _ring_abelian(ring: FiniteRing) -> tuple[bool, int | None]:
    mul = ring.mul
    for e in element_sets(ring)[1].indices():
        row = mul[e]
        if any(row[r] != mul[r][e] for r in range(ring.order)):
            return False, e
    return True, None


def _ring_local(ring: FiniteRing) -> tuple[bool, int | None]:
    route_a = len(maximal_right_ideals(ring)) == 1
    units = element_sets(ring)[0]
    route_b = units.complement().bits == jacobson(ring).bits
    if route_a != route_b:
        raise ComputationFault(f"local cross-check mismatch on {ring.name}")
    return route_a, None


def _ring_semisimple(ring: FiniteRing) -> tuple[bool, int | None]:
    radical_trivial = jacobson(ring).bits == 1 << ring.zero
    socle_full = socle(ring).bits == (1 << ring.order) - 1
    if radical_trivial != socle_full:
        raise ComputationFault(f"semisimple cross-check mismatch on {ring.name}")
    return radical_trivial, None


def _ring_right_pp(ring: FiniteRing) -> tuple[bool, int | None]:
    for a in range(ring.order):
        if is_direct_summand(ring, principal_right_ideal(ring, a)) is None:
            return False, a
    return True, None


_RING_ONLY = {
    PropertyName.BOOLEAN: _ring_boolean,
    PropertyName.ABELIAN: _ring_abelian,
    PropertyName.LOCAL: _ring_local,
    PropertyName.SEMISIMPLE: _ring_semisimple,
    PropertyName.RIGHT_PP: _ring_right_pp,
}


def ring_property(ring: FiniteRing, prop) -> tuple[bool, int | None]:
    """Decide a property for the whole ring.

    Element-level properties hold for the ring when they hold for every
    element; the witness of a failure is the least failing element.
    """
    prop = _coerce(prop)
    memo = cached_on(ring, "ring_property", dict)
    if prop in memo:
        return memo[prop]
    if prop in PropertyName.ring_only():
        result = _RING_ONLY[prop](ring)
    else:
        result = (True, None)
        for a in range(ring.order):
            if element_property(ring, a, prop) is None:
                result = (False, a)
                break
    memo[prop] = result
    return result


# --------------------------------------------------------------------------
# spectral candidates and idempotent lifting


_SPECTRAL_FLAVORS = ("delta", "j", "nil", "quasipolar", "weakly-delta")


def spectral_candidates(ring: FiniteRing, a: int, flavor: str) -> tuple[int, ...]:
    """All idempotents usable as the companion of ``a`` for the given flavor."""
    if flavor not in _SPECTRAL_FLAVORS:
        raise ValueError(f"unknown spectral flavor: {flavor!r}")
    if not 0 <= a < ring.order:
        raise ValueError(f"element {a} out of range")
    units, idempotents, _ = element_sets(ring)
    out = []
    for p in idempotents.indices():
        if flavor == "weakly-delta":
            if p not in commutant(ring, a):
                continue
            if ring.add[a][p] in delta_mask(ring):
                out.append(p)
            continue
        if p not in double_commutant(ring, a):
            continue
        shifted = ring.add[a][p]
        if flavor == "quasipolar":
            if shifted in units and ring.mul[a][p] in qnil_set(ring):
                out.append(p)
        elif (_target_bits(ring, flavor) >> shifted) & 1:
            out.append(p)
    return tuple(out)


def idempotents_lift(ring: FiniteRing, ideal: ElementSet) -> tuple[bool, int | None]:
    """Whether every idempotent of the quotient by ``ideal`` lifts to one of
    the ring; the witness is a non-lifting idempotent of the quotient."""
    if not is_two_sided_ideal(ring, ideal):
        raise IdealError(
            f"subset {list(ideal.indices())} is not a two-sided ideal of {ring.name}"
        )
    quotient, proj = build_quotient(ring, ideal)
    ring_idempotents = element_sets(ring)[1].indices()
    lifted = {proj[e] for e in ring_idempotents}
    for q in element_sets(quotient)[1].indices():
        if q not in lifted:
            return False, q
    return True, None

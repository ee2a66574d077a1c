"""Radical-style invariants: Jacobson radical, quasinilpotents, and the
delta ideal computed by five independent characterizations that must agree."""
from __future__ import annotations

from dataclasses import dataclass

from ringlab.core import (
    ComputationFault,
    ElementSet,
    FiniteRing,
    bit_members,
    cached_on,
    element_sets,
)
from ringlab.ideals import (
    _essential_maximals,
    _principal_bits,
    _span_bits,
    _sum_is_full,
    all_right_ideals,
    ideal_core,
    is_delta_small,
    is_direct_summand,
    is_two_sided_ideal,
    socle,
)


@dataclass(frozen=True)
class DeltaComputation:
    """The five independently computed candidate sets and their consensus."""

    r1: ElementSet
    r2: ElementSet
    r3: ElementSet
    r4: ElementSet
    r5: ElementSet
    agree: bool
    consensus: ElementSet | None


class DeltaDisagreement(ComputationFault):
    """Raised when the five delta characterizations do not coincide."""

    def __init__(self, ring: FiniteRing, computation: DeltaComputation):
        parts = ", ".join(
            f"r{i}={list(getattr(computation, f'r{i}').indices())}" for i in range(1, 6)
        )
        super().__init__(
            f"delta characterizations disagree on {ring.name}: {parts}"
        )
        self.computation = computation


# --------------------------------------------------------------------------
# Jacobson radical and quasinilpotents


def jacobson(ring: FiniteRing) -> ElementSet:
    """Jacobson radical, computed two ways that must coincide:
    the intersection of the maximal right ideals, and the set of ``x`` such
    that ``1 - x y`` is a unit for every ``y``."""

    def compute():
        from ringlab.ideals import maximal_right_ideals

        full = (1 << ring.order) - 1
        route_a = full
        for m in maximal_right_ideals(ring):
            route_a &= m.bits
        units, _, _ = element_sets(ring)
        one = ring.one
        route_b = 0
        for x in range(ring.order):
            row = ring.mul[x]
            if all(ring.sub(one, row[y]) in units for y in range(ring.order)):
                route_b |= 1 << x
        if route_a != route_b:
            raise ComputationFault(f"Jacobson radical mismatch on {ring.name}")
        return ElementSet(route_a, ring.order)

    return cached_on(ring, "jacobson", compute)


def commutant_bits(ring: FiniteRing, a: int) -> int:
    def compute():
        return {}

    memo = cached_on(ring, "commutant_bits", compute)
    if a not in memo:
        mul = ring.mul
        row = mul[a]
        bits = 0
        for x in range(ring.order):
            if row[x] == mul[x][a]:
                bits |= 1 << x
        memo[a] = bits
    return memo[a]


def qnil_set(ring: FiniteRing) -> ElementSet:
    """Quasinilpotents: ``a`` with ``1 + a x`` a unit for every ``x``
    commuting with ``a``."""

    def compute():
        units, _, _ = element_sets(ring)
        one = ring.one
        bits = 0
        for a in range(ring.order):
            row = ring.mul[a]
            if all(
                ring.add[one][row[x]] in units
                for x in bit_members(commutant_bits(ring, a))
            ):
                bits |= 1 << a
        return ElementSet(bits, ring.order)

    return cached_on(ring, "qnil", compute)


# --------------------------------------------------------------------------
# the five delta characterizations


def delta_r1(ring: FiniteRing) -> ElementSet:
    """Intersection of the essential maximal right ideals (all of the ring
    when there are none)."""
    full = (1 << ring.order) - 1
    bits = full
    for m in _essential_maximals(ring):
        bits &= m.bits
    return ElementSet(bits, ring.order)


def delta_r2(ring: FiniteRing) -> ElementSet:
    """Sum of all small-relative-to-essential right ideals; the sum itself
    must remain small, otherwise the computation is faulted."""
    total = ElementSet(1 << ring.zero, ring.order)
    for ideal in all_right_ideals(ring):
        if is_delta_small(ring, ideal):
            total = ElementSet(_span_bits(ring, total.bits, ideal.bits), ring.order)
    if not is_delta_small(ring, total):
        raise ComputationFault(
            f"sum of small right ideals of {ring.name} is not itself small"
        )
    return total


def delta_r3(ring: FiniteRing) -> ElementSet:
    """Elements ``x`` such that whenever ``x R + K`` is everything, ``K`` is
    already a direct summand."""
    pb = _principal_bits(ring)
    lattice = all_right_ideals(ring)
    bits = 0
    for x in range(ring.order):
        ok = True
        for ideal in lattice:
            if _sum_is_full(ring, pb[x], ideal.bits):
                if is_direct_summand(ring, ideal) is None:
                    ok = False
                    break
        if ok:
            bits |= 1 << x
    return ElementSet(bits, ring.order)


def delta_r4(ring: FiniteRing) -> ElementSet:
    """Intersection of the two-sided cores of the essential maximal right
    ideals (all of the ring when there are none)."""
    full = (1 << ring.order) - 1
    bits = full
    for m in _essential_maximals(ring):
        bits &= ideal_core(ring, m).bits
    return ElementSet(bits, ring.order)


def delta_r5(ring: FiniteRing) -> ElementSet:
    """Elements ``x`` such that for every ``y`` the principal right ideal of
    ``1 + x y`` is complemented by a right ideal inside the socle."""
    pb = _principal_bits(ring)
    soc = socle(ring).bits
    semisimple_parts = [
        ideal for ideal in all_right_ideals(ring) if ideal.bits & ~soc == 0
    ]
    part_sizes = [(ideal.bits, len(ideal)) for ideal in semisimple_parts]
    zero_bit = 1 << ring.zero
    one = ring.one
    order = ring.order
    decided: dict[int, bool] = {}

    def complemented(z: int) -> bool:
        if z not in decided:
            zbits = pb[z]
            zsize = zbits.bit_count()
            decided[z] = any(
                zbits & ybits == zero_bit and zsize * ysize == order
                for ybits, ysize in part_sizes
            )
        return decided[z]

    bits = 0
    for x in range(order):
        row = ring.mul[x]
        if all(complemented(ring.add[one][row[y]]) for y in range(order)):
            bits |= 1 << x
    return ElementSet(bits, ring.order)


def delta(ring: FiniteRing) -> DeltaComputation:
    """Run all five characterizations and require consensus.

    On disagreement a :class:`DeltaDisagreement` is raised carrying the
    partial computation; nothing is cached in that case.
    """
    cached = ring._cache.get("delta")
    if cached is not None:
        return cached
    r1 = delta_r1(ring)
    r2 = delta_r2(ring)
    r3 = delta_r3(ring)
    r4 = delta_r4(ring)
    r5 = delta_r5(ring)
    agree = r1.bits == r2.bits == r3.bits == r4.bits == r5.bits
    if not agree:
        raise DeltaDisagreement(
            ring, DeltaComputation(r1, r2, r3, r4, r5, False, None)
        )
    consensus = r1
    if not is_two_sided_ideal(ring, consensus):
        raise ComputationFault(
            f"delta consensus on {ring.name} is not a two-sided ideal"
        )
    if jacobson(ring).bits & ~consensus.bits:
        raise ComputationFault(
            f"delta consensus on {ring.name} does not contain the Jacobson radical"
        )
    computation = DeltaComputation(r1, r2, r3, r4, r5, True, consensus)
    ring._cache["delta"] = computation
    return computation


def delta_mask(ring: FiniteRing) -> ElementSet:
    """The agreed delta ideal (shortcut for ``delta(ring).consensus``)."""
    return delta(ring).consensus

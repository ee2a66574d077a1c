"""Right ideal lattices of finite rings and the predicates built on them.

Ideals are handled as bitmasks throughout; the public functions accept and
return :class:`~ringlab.core.ElementSet` values.  Enumeration of the full
right ideal lattice is capped (see :data:`DEFAULT_LATTICE_LIMIT`) so that a
pathological input fails fast instead of filling memory.
"""
from __future__ import annotations

from ringlab.core import (
    ElementSet,
    FiniteRing,
    IdealError,
    LatticeLimitError,
    bit_members,
    cached_on,
    element_sets,
)

DEFAULT_LATTICE_LIMIT = 100000


# --------------------------------------------------------------------------
# bitmask plumbing


def _principal_bits(ring: FiniteRing) -> tuple[int, ...]:
    """``aR`` as a bitmask for every ``a``; cached."""

    def compute():
        out = []
        for a in range(ring.order):
            bits = 0
            for ab in ring.mul[a]:
                bits |= 1 << ab
            out.append(bits)
        return tuple(out)

    return cached_on(ring, "principal_bits", compute)


def _span_bits(ring: FiniteRing, b1: int, b2: int) -> int:
    """Additive span of the union of two additive subgroups.

    For subgroups the pairwise sums already form a subgroup, so no closure
    iteration is needed.
    """
    if b2 & ~b1 == 0:
        return b1
    if b1 & ~b2 == 0:
        return b2
    add = ring.add
    out = 0
    second = bit_members(b2)
    for a in bit_members(b1):
        row = add[a]
        for b in second:
            out |= 1 << row[b]
    return out


def _additive_closure_bits(ring: FiniteRing, bits: int) -> int:
    """Additive span of an arbitrary subset (worklist closure)."""
    add = ring.add
    bits |= 1 << ring.zero
    members = bit_members(bits)
    queue = list(members)
    while queue:
        a = queue.pop()
        row = add[a]
        for b in list(members):
            c = row[b]
            if not (bits >> c) & 1:
                bits |= 1 << c
                members.append(c)
                queue.append(c)
    return bits


def _is_right_ideal_bits(ring: FiniteRing, bits: int) -> bool:
    if not (bits >> ring.zero) & 1:
        return False
    members = bit_members(bits)
    for a in members:
        row_add = ring.add[a]
        for b in members:
            if not (bits >> row_add[b]) & 1:
                return False
        if _principal_bits(ring)[a] & ~bits:
            return False
    return True


def _require_right_ideal(ring: FiniteRing, subset: ElementSet) -> int:
    if subset.size != ring.order:
        raise IdealError(
            f"subset of size universe {subset.size} does not match ring order {ring.order}"
        )
    if not _is_right_ideal_bits(ring, subset.bits):
        raise IdealError(
            f"subset {list(subset.indices())} is not a right ideal of {ring.name}"
        )
    return subset.bits


# --------------------------------------------------------------------------
# membership predicates


def is_right_ideal(ring: FiniteRing, subset: ElementSet) -> bool:
    return subset.size == ring.order and _is_right_ideal_bits(ring, subset.bits)


def is_two_sided_ideal(ring: FiniteRing, subset: ElementSet) -> bool:
    if not is_right_ideal(ring, subset):
        return False
    bits = subset.bits
    for a in bit_members(bits):
        for r in range(ring.order):
            if not (bits >> ring.mul[r][a]) & 1:
                return False
    return True


# --------------------------------------------------------------------------
# generation


def principal_right_ideal(ring: FiniteRing, a: int) -> ElementSet:
    if not 0 <= a < ring.order:
        raise ValueError(f"element {a} out of range")
    return ElementSet(_principal_bits(ring)[a], ring.order)


def right_ideal_closure(ring: FiniteRing, generators) -> ElementSet:
    bits = 1 << ring.zero
    pb = _principal_bits(ring)
    for g in generators:
        if not 0 <= g < ring.order:
            raise ValueError(f"generator {g} out of range")
        bits = _span_bits(ring, bits, pb[g])
    return ElementSet(bits, ring.order)


def two_sided_closure(ring: FiniteRing, generators) -> ElementSet:
    bits = 1 << ring.zero
    for g in generators:
        if not 0 <= g < ring.order:
            raise ValueError(f"generator {g} out of range")
        for r in range(ring.order):
            rg = ring.mul[r][g]
            for s in ring.mul[rg]:
                bits |= 1 << s
    return ElementSet(_additive_closure_bits(ring, bits), ring.order)


def ideal_sum(ring: FiniteRing, left: ElementSet, right: ElementSet) -> ElementSet:
    b1 = _require_right_ideal(ring, left)
    b2 = _require_right_ideal(ring, right)
    return ElementSet(_span_bits(ring, b1, b2), ring.order)


# --------------------------------------------------------------------------
# lattice enumeration


def _enumerate_right_ideals(ring: FiniteRing, limit: int) -> tuple[ElementSet, ...]:
    pb = _principal_bits(ring)
    seeds = sorted(set(pb))
    found = set(seeds)
    if len(found) > limit:
        raise LatticeLimitError(
            f"{ring.name} has more than {limit} right ideals"
        )
    queue = list(seeds)
    while queue:
        current = queue.pop()
        for seed in seeds:
            if seed & ~current == 0:
                continue
            span = _span_bits(ring, current, seed)
            if span not in found:
                found.add(span)
                if len(found) > limit:
                    raise LatticeLimitError(
                        f"{ring.name} has more than {limit} right ideals"
                    )
                queue.append(span)
    ideals = [ElementSet(bits, ring.order) for bits in found]
    return tuple(sorted(ideals, key=ElementSet.sort_key))


def all_right_ideals(ring: FiniteRing, limit: int | None = None) -> tuple[ElementSet, ...]:
    """Every right ideal, sorted by size then membership.

    With ``limit=None`` the default cap applies and the result is cached on
    the ring; an explicit limit always recomputes.
    """
    if limit is None:
        return cached_on(
            ring,
            "right_ideal_lattice",
            lambda: _enumerate_right_ideals(ring, DEFAULT_LATTICE_LIMIT),
        )
    return _enumerate_right_ideals(ring, limit)


def two_sided_ideals(ring: FiniteRing) -> tuple[ElementSet, ...]:
    def compute():
        return tuple(
            ideal
            for ideal in all_right_ideals(ring)
            if is_two_sided_ideal(ring, ideal)
        )

    return cached_on(ring, "two_sided_ideals", compute)


def maximal_right_ideals(ring: FiniteRing) -> tuple[ElementSet, ...]:
    def compute():
        full = (1 << ring.order) - 1
        proper = [i for i in all_right_ideals(ring) if i.bits != full]
        out = [
            i
            for i in proper
            if not any(
                other.bits != i.bits and i.bits & ~other.bits == 0 for other in proper
            )
        ]
        return tuple(sorted(out, key=ElementSet.sort_key))

    return cached_on(ring, "maximal_right_ideals", compute)


def minimal_right_ideals(ring: FiniteRing) -> tuple[ElementSet, ...]:
    def compute():
        zero_bit = 1 << ring.zero
        nonzero = [i for i in all_right_ideals(ring) if i.bits != zero_bit]
        out = [
            i
            for i in nonzero
            if not any(
                other.bits != i.bits and other.bits & ~i.bits == 0 for other in nonzero
            )
        ]
        return tuple(sorted(out, key=ElementSet.sort_key))

    return cached_on(ring, "minimal_right_ideals", compute)


def socle(ring: FiniteRing) -> ElementSet:
    """Sum of the minimal right ideals (zero when there are none)."""

    def compute():
        bits = 1 << ring.zero
        for ideal in minimal_right_ideals(ring):
            bits = _span_bits(ring, bits, ideal.bits)
        return ElementSet(bits, ring.order)

    return cached_on(ring, "socle", compute)


# --------------------------------------------------------------------------
# structural predicates


def is_essential(ring: FiniteRing, subset: ElementSet) -> bool:
    """True iff the right ideal meets every nonzero right ideal nontrivially."""
    bits = _require_right_ideal(ring, subset)
    zero_bit = 1 << ring.zero
    pb = _principal_bits(ring)
    for a in range(ring.order):
        if a == ring.zero:
            continue
        if pb[a] & bits == zero_bit:
            return False
    return True


def _essential_maximals(ring: FiniteRing) -> tuple[ElementSet, ...]:
    def compute():
        return tuple(
            m for m in maximal_right_ideals(ring) if is_essential(ring, m)
        )

    return cached_on(ring, "essential_maximals", compute)


def _sum_is_full(ring: FiniteRing, ideal_bits: int, other_bits: int) -> bool:
    """Whether ``I + K = R``, via: 1 = u + k for some u in I, k in K."""
    one = ring.one
    sub_row = ring.add[one]
    neg = ring._neg_table()
    for u in bit_members(ideal_bits):
        if (other_bits >> sub_row[neg[u]]) & 1:
            return True
    return False


def is_delta_small(ring: FiniteRing, subset: ElementSet) -> bool:
    """Smallness relative to essential ideals: ``I`` is small iff ``I + K = R``
    forces ``K = R`` whenever ``K`` is an essential right ideal.

    It suffices to test the essential maximal right ideals: any proper
    essential ``K`` with ``I + K = R`` sits inside an essential maximal one
    with the same property.
    """
    bits = _require_right_ideal(ring, subset)
    for m in _essential_maximals(ring):
        if _sum_is_full(ring, bits, m.bits):
            return False
    return True


def is_direct_summand(ring: FiniteRing, subset: ElementSet) -> int | None:
    """Least idempotent ``e`` with ``e R`` equal to the ideal, else ``None``."""
    bits = _require_right_ideal(ring, subset)

    def compute():
        return {}

    memo = cached_on(ring, "summand_witness", compute)
    if bits in memo:
        return memo[bits]
    pb = _principal_bits(ring)
    _, idempotents, _ = element_sets(ring)
    result = None
    for e in idempotents.indices():
        if pb[e] == bits:
            result = e
            break
    memo[bits] = result
    return result


def ideal_core(ring: FiniteRing, subset: ElementSet) -> ElementSet:
    """The largest two-sided ideal contained in the given right ideal."""
    bits = _require_right_ideal(ring, subset)
    pb = _principal_bits(ring)
    out = 0
    for x in bit_members(bits):
        if all(pb[ring.mul[r][x]] & ~bits == 0 for r in range(ring.order)):
            out |= 1 << x
    return ElementSet(out, ring.order)

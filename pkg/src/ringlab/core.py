"""Finite unital rings as dense Cayley tables.

Everything downstream works with a :class:`FiniteRing`: two ``order x order``
tables (addition and multiplication), distinguished ``zero`` and ``one``
indices, and optional human-readable element labels.  Subsets of a ring are
packed into integers (:class:`ElementSet`) so that lattice and radical
computations reduce to bit arithmetic.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

DEFAULT_SIZE_CAP = 4096
SIZE_CAP_ENV = "RINGLAB_SIZE_CAP"


class RinglabError(Exception):
    """Base class for all library errors."""


class SizeCapError(RinglabError):
    """A construction or load would exceed the configured size cap."""


class AxiomError(RinglabError):
    """A table fails the ring axioms; carries the list of violations."""

    def __init__(self, violations: Sequence[str]):
        preview = "; ".join(violations[:3])
        if len(violations) > 3:
            preview += "; ..."
        super().__init__(f"ring axioms violated: {preview}")
        self.violations = list(violations)


class IdealError(RinglabError):
    """An argument that must be a (one- or two-sided) ideal is not one."""


class BimoduleError(RinglabError):
    """Bimodule data for a Dorroh extension fails its axioms."""


class LatticeLimitError(RinglabError):
    """Ideal enumeration exceeded the requested limit."""


class ComputationFault(RinglabError):
    """Two independent computations of the same object disagreed."""


def _size_cap() -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SizeCapError(
            f"size cap variable {SIZE_CAP_ENV} is not an integer: {raw!r}"
        ) from None
    if cap < 1:
        raise SizeCapError(f"size cap variable {SIZE_CAP_ENV} must be positive, got {cap}")
    return cap


def check_size(order: int) -> None:
    """Raise :class:`SizeCapError` if a ring of this order may not be built."""
    cap = _size_cap()
    if order > cap:
        raise SizeCapError(f"ring order {order} exceeds the size cap {cap}")


# --------------------------------------------------------------------------
# element sets


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``{0, ..., size - 1}`` packed into the bits of an int."""

    bits: int
    size: int

    @classmethod
    def empty(cls, size: int) -> "ElementSet":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "ElementSet":
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"index {i} out of range for size {size}")
            bits |= 1 << i
        return cls(bits, size)

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_members(self.bits))

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool((self.bits >> i) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits | other.bits, self.size)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & other.bits, self.size)

    def is_subset(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def complement(self) -> "ElementSet":
        return ElementSet(~self.bits & ((1 << self.size) - 1), self.size)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.indices())

    def to_json(self) -> list[int]:
        return list(self.indices())


def bit_members(bits: int) -> list[int]:
    """Indices of the set bits of ``bits`` in ascending order."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


# --------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class FiniteRing:
    """A finite unital ring given by full addition and multiplication tables."""

    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    name: str
    labels: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def _neg_table(self) -> tuple[int, ...]:
        def compute() -> tuple[int, ...]:
            zero = self.zero
            return tuple(row.index(zero) for row in self.add)

        return cached_on(self, "neg", compute)

    def neg(self, i: int) -> int:
        return self._neg_table()[i]

    def sub(self, i: int, j: int) -> int:
        return self.add[i][self._neg_table()[j]]


def cached_on(ring: FiniteRing, key, compute: Callable):
    """Memoize ``compute()`` on the ring's private cache under ``key``."""
    cache = ring._cache
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def renamed(ring: FiniteRing, name: str) -> FiniteRing:
    """A copy of ``ring`` carrying a different display name (fresh cache)."""
    if ring.name == name:
        return ring
    return FiniteRing(
        order=ring.order,
        add=ring.add,
        mul=ring.mul,
        zero=ring.zero,
        one=ring.one,
        name=name,
        labels=ring.labels,
    )


# --------------------------------------------------------------------------
# mixed radix helpers


def mixed_radix_encode(digits: Sequence[int], radices: Sequence[int]) -> int:
    """Pack digits into one index; the last digit is the fastest-moving one."""
    if len(digits) != len(radices):
        raise ValueError("digit and radix sequences differ in length")
    index = 0
    for digit, radix in zip(digits, radices):
        if not 0 <= digit < radix:
            raise ValueError(f"digit {digit} out of range for radix {radix}")
        index = index * radix + digit
    return index


def mixed_radix_decode(index: int, radices: Sequence[int]) -> tuple[int, ...]:
    digits = []
    for radix in reversed(radices):
        index, digit = divmod(index, radix)
        digits.append(digit)
    if index:
        raise ValueError("index out of range for the given radices")
    return tuple(reversed(digits))


# --------------------------------------------------------------------------
# axiom verification


def verify_axioms(
    ring: FiniteRing, require_identity: bool = True, max_violations: int = 25
) -> list[str]:
    """Exhaustively check the ring axioms; return a list of violations."""
    n = ring.order
    add, mul = ring.add, ring.mul
    out: list[str] = []

    def push(message: str) -> bool:
        out.append(message)
        return len(out) >= max_violations

    if n < 1:
        return ["order must be at least 1"]
    for table_name, table in (("addition", add), ("multiplication", mul)):
        if len(table) != n or any(len(row) != n for row in table):
            return [f"{table_name} table is not {n} x {n}"]
        for i, row in enumerate(table):
            for j, value in enumerate(row):
                if not 0 <= value < n:
                    if push(f"{table_name} entry at ({i},{j}) is out of range"):
                        return out
    if not 0 <= ring.zero < n:
        return ["zero index out of range"]
    if not 0 <= ring.one < n:
        return ["one index out of range"]

    zero, one = ring.zero, ring.one
    for a in range(n):
        if add[a][zero] != a and push(f"zero is not an additive identity at {a}"):
            return out
        if zero not in add[a] and push(f"no additive inverse for {a}"):
            return out
        for b in range(n):
            if add[a][b] != add[b][a] and push(f"addition is not commutative at ({a},{b})"):
                return out
    if require_identity:
        for a in range(n):
            if (mul[a][one] != a or mul[one][a] != a) and push(
                f"one is not a multiplicative identity at {a}"
            ):
                return out
    for a in range(n):
        add_a, mul_a = add[a], mul[a]
        for b in range(n):
            ab_sum, ab_prod = add_a[b], mul_a[b]
            add_ab_sum, mul_ab_sum = add[ab_sum], mul[ab_sum]
            mul_ab_prod = mul[ab_prod]
            mul_b = mul[b]
            for c in range(n):
                if add_ab_sum[c] != add_a[add[b][c]] and push(
                    f"addition is not associative at ({a},{b},{c})"
                ):
                    return out
                if mul_ab_prod[c] != mul_a[mul_b[c]] and push(
                    f"multiplication is not associative at ({a},{b},{c})"
                ):
                    return out
                if mul_a[add[b][c]] != add[ab_prod][mul_a[c]] and push(
                    f"left distributivity fails at ({a},{b},{c})"
                ):
                    return out
                if mul_ab_sum[c] != add[mul_a[c]][mul_b[c]] and push(
                    f"right distributivity fails at ({a},{b},{c})"
                ):
                    return out
    return out


# --------------------------------------------------------------------------
# constructors


def build_zmod(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    check_size(n)
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(
        order=n,
        add=add,
        mul=mul,
        zero=0,
        one=1 % n,
        name=f"Z{n}",
        labels=tuple(str(i) for i in range(n)),
    )


def build_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """The direct product; component tuples are packed last factor fastest."""
    if not factors:
        raise ValueError("a product needs at least one factor")
    radices = [f.order for f in factors]
    order = math.prod(radices)
    check_size(order)
    decode = [mixed_radix_decode(i, radices) for i in range(order)]
    add = tuple(
        tuple(
            mixed_radix_encode(
                [f.add[x][y] for f, x, y in zip(factors, da, db)], radices
            )
            for db in decode
        )
        for da in decode
    )
    mul = tuple(
        tuple(
            mixed_radix_encode(
                [f.mul[x][y] for f, x, y in zip(factors, da, db)], radices
            )
            for db in decode
        )
        for da in decode
    )
    labels = tuple(
        "(" + ",".join(f.label(x) for f, x in zip(factors, d)) + ")" for d in decode
    )
    return FiniteRing(
        order=order,
        add=add,
        mul=mul,
        zero=mixed_radix_encode([f.zero for f in factors], radices),
        one=mixed_radix_encode([f.one for f in factors], radices),
        name="x".join(f.name for f in factors),
        labels=labels,
    )


def _matrix_label(rows: Sequence[Sequence[int]], base: FiniteRing) -> str:
    return "[" + ",".join(
        "[" + ",".join(base.label(v) for v in row) + "]" for row in rows
    ) + "]"


def build_matrix_ring(base: FiniteRing, k: int) -> FiniteRing:
    """The full ``k x k`` matrix ring, entries packed row-major."""
    if k < 1:
        raise ValueError(f"matrix size must be positive, got {k}")
    n = base.order
    order = n ** (k * k)
    check_size(order)
    radices = [n] * (k * k)
    decode = [mixed_radix_decode(i, radices) for i in range(order)]

    def entry(d: Sequence[int], r: int, c: int) -> int:
        return d[r * k + c]

    badd, bmul = base.add, base.mul

    def mat_add(da, db):
        return mixed_radix_encode([badd[x][y] for x, y in zip(da, db)], radices)

    def mat_mul(da, db):
        out = []
        for r in range(k):
            for c in range(k):
                acc = base.zero
                for m in range(k):
                    acc = badd[acc][bmul[entry(da, r, m)][entry(db, m, c)]]
                out.append(acc)
        return mixed_radix_encode(out, radices)

    add = tuple(tuple(mat_add(da, db) for db in decode) for da in decode)
    mul = tuple(tuple(mat_mul(da, db) for db in decode) for da in decode)
    identity = [base.one if r == c else base.zero for r in range(k) for c in range(k)]
    labels = tuple(
        _matrix_label([d[r * k:(r + 1) * k] for r in range(k)], base) for d in decode
    )
    return FiniteRing(
        order=order,
        add=add,
        mul=mul,
        zero=mixed_radix_encode([base.zero] * (k * k), radices),
        one=mixed_radix_encode(identity, radices),
        name=f"M{k}({base.name})",
        labels=labels,
    )


def build_upper_triangular(base: FiniteRing, k: int) -> FiniteRing:
    """The upper triangular ``k x k`` matrix ring; stored entries are the
    positions ``(r, c)`` with ``r <= c`` in row-major order."""
    if k < 1:
        raise ValueError(f"matrix size must be positive, got {k}")
    positions = [(r, c) for r in range(k) for c in range(r, k)]
    slot = {pos: i for i, pos in enumerate(positions)}
    n = base.order
    order = n ** len(positions)
    check_size(order)
    radices = [n] * len(positions)
    decode = [mixed_radix_decode(i, radices) for i in range(order)]
    badd, bmul = base.add, base.mul

    def tri_add(da, db):
        return mixed_radix_encode([badd[x][y] for x, y in zip(da, db)], radices)

    def tri_mul(da, db):
        out = []
        for r, c in positions:
            acc = base.zero
            for m in range(r, c + 1):
                acc = badd[acc][bmul[da[slot[r, m]]][db[slot[m, c]]]]
            out.append(acc)
        return mixed_radix_encode(out, radices)

    add = tuple(tuple(tri_add(da, db) for db in decode) for da in decode)
    mul = tuple(tuple(tri_mul(da, db) for db in decode) for da in decode)
    identity = [base.one if r == c else base.zero for r, c in positions]

    def tri_rows(d):
        return [
            [d[slot[r, c]] if r <= c else base.zero for c in range(k)]
            for r in range(k)
        ]

    labels = tuple(_matrix_label(tri_rows(d), base) for d in decode)
    return FiniteRing(
        order=order,
        add=add,
        mul=mul,
        zero=mixed_radix_encode([base.zero] * len(positions), radices),
        one=mixed_radix_encode(identity, radices),
        name=f"T{k}({base.name})",
        labels=labels,
    )


def build_constant_diagonal_triangular(base: FiniteRing, k: int) -> FiniteRing:
    """Upper triangular ``k x k`` matrices with one shared diagonal entry.

    Stored digits are the diagonal value followed by the strictly upper
    entries ``(r, c)`` with ``r < c`` in row-major order.
    """
    if k < 1:
        raise ValueError(f"matrix size must be positive, got {k}")
    uppers = [(r, c) for r in range(k) for c in range(r + 1, k)]
    slot = {pos: i + 1 for i, pos in enumerate(uppers)}
    n = base.order
    order = n ** (1 + len(uppers))
    check_size(order)
    radices = [n] * (1 + len(uppers))
    decode = [mixed_radix_decode(i, radices) for i in range(order)]
    badd, bmul = base.add, base.mul

    def entry(d, r, c):
        if r == c:
            return d[0]
        return d[slot[r, c]]

    def cd_add(da, db):
        return mixed_radix_encode([badd[x][y] for x, y in zip(da, db)], radices)

    def cd_mul(da, db):
        out = [bmul[da[0]][db[0]]]
        for r, c in uppers:
            acc = base.zero
            for m in range(r, c + 1):
                acc = badd[acc][bmul[entry(da, r, m)][entry(db, m, c)]]
            out.append(acc)
        return mixed_radix_encode(out, radices)

    add = tuple(tuple(cd_add(da, db) for db in decode) for da in decode)
    mul = tuple(tuple(cd_mul(da, db) for db in decode) for da in decode)

    def cd_rows(d):
        return [[entry(d, r, c) if r <= c else base.zero for c in range(k)] for r in range(k)]

    labels = tuple(_matrix_label(cd_rows(d), base) for d in decode)
    one_digits = [base.one] + [base.zero] * len(uppers)
    return FiniteRing(
        order=order,
        add=add,
        mul=mul,
        zero=mixed_radix_encode([base.zero] * (1 + len(uppers)), radices),
        one=mixed_radix_encode(one_digits, radices),
        name=f"CT{k}({base.name})",
        labels=labels,
    )


@dataclass(frozen=True)
class DorrohData:
    """Input for a Dorroh-style extension of ``base`` by the ring ``bimodule``.

    ``left_action[r][v]`` is ``r . v`` and ``right_action[v][r]`` is ``v . r``;
    both live in the bimodule.
    """

    base: FiniteRing
    bimodule: FiniteRing
    left_action: tuple[tuple[int, ...], ...]
    right_action: tuple[tuple[int, ...], ...]


def _validate_dorroh(data: DorrohData) -> None:
    base, bim = data.base, data.bimodule
    la, ra = data.left_action, data.right_action
    nr, nv = base.order, bim.order
    if len(la) != nr or any(len(row) != nv for row in la):
        raise BimoduleError(f"left action table is not {nr} x {nv}")
    if len(ra) != nv or any(len(row) != nr for row in ra):
        raise BimoduleError(f"right action table is not {nv} x {nr}")
    for table, bound, which in ((la, nv, "left"), (ra, nv, "right")):
        for row in table:
            for value in row:
                if not 0 <= value < bound:
                    raise BimoduleError(f"{which} action entry {value} out of range")
    for v in range(nv):
        if la[base.one][v] != v:
            raise BimoduleError(f"left action is not unital at {v}")
        if ra[v][base.one] != v:
            raise BimoduleError(f"right action is not unital at {v}")
    for r in range(nr):
        for s in range(nr):
            for v in range(nv):
                if la[base.mul[r][s]][v] != la[r][la[s][v]]:
                    raise BimoduleError(
                        f"left action is not associative at ({r},{s},{v})"
                    )
                if ra[v][base.mul[r][s]] != ra[ra[v][r]][s]:
                    raise BimoduleError(
                        f"right action is not associative at ({r},{s},{v})"
                    )
                if la[base.add[r][s]][v] != bim.add[la[r][v]][la[s][v]]:
                    raise BimoduleError(f"left action is not additive at ({r},{s},{v})")
                if ra[v][base.add[r][s]] != bim.add[ra[v][r]][ra[v][s]]:
                    raise BimoduleError(f"right action is not additive at ({r},{s},{v})")
    for r in range(nr):
        for v in range(nv):
            for w in range(nv):
                if la[r][bim.add[v][w]] != bim.add[la[r][v]][la[r][w]]:
                    raise BimoduleError(
                        f"left action does not distribute at ({r},{v},{w})"
                    )
                if ra[bim.add[v][w]][r] != bim.add[ra[v][r]][ra[w][r]]:
                    raise BimoduleError(
                        f"right action does not distribute at ({r},{v},{w})"
                    )
                if ra[bim.mul[v][w]][r] != bim.mul[v][ra[w][r]]:
                    raise BimoduleError(
                        f"(v w) r = v (w r) fails at ({v},{w},{r})"
                    )
                if bim.mul[ra[v][r]][w] != bim.mul[v][la[r][w]]:
                    raise BimoduleError(
                        f"(v r) w = v (r w) fails at ({v},{r},{w})"
                    )
                if bim.mul[la[r][v]][w] != la[r][bim.mul[v][w]]:
                    raise BimoduleError(
                        f"(r v) w = r (v w) fails at ({r},{v},{w})"
                    )


def build_dorroh(data: DorrohData) -> FiniteRing:
    """The extension of ``data.base`` by ``data.bimodule`` with product
    ``(r, v)(s, w) = (r s, r w + v s + v w)``."""
    _validate_dorroh(data)
    base, bim = data.base, data.bimodule
    la, ra = data.left_action, data.right_action
    nr, nv = base.order, bim.order
    order = nr * nv
    check_size(order)

    def enc(r: int, v: int) -> int:
        return nv * r + v

    add_rows = []
    mul_rows = []
    for r in range(nr):
        for v in range(nv):
            add_row = []
            mul_row = []
            for s in range(nr):
                for w in range(nv):
                    add_row.append(enc(base.add[r][s], bim.add[v][w]))
                    vw = bim.add[bim.add[la[r][w]][ra[v][s]]][bim.mul[v][w]]
                    mul_row.append(enc(base.mul[r][s], vw))
            add_rows.append(tuple(add_row))
            mul_rows.append(tuple(mul_row))
    labels = tuple(
        f"({base.label(r)},{bim.label(v)})" for r in range(nr) for v in range(nv)
    )
    ring = FiniteRing(
        order=order,
        add=tuple(add_rows),
        mul=tuple(mul_rows),
        zero=enc(base.zero, bim.zero),
        one=enc(base.one, bim.zero),
        name=f"D({base.name},{bim.name})",
        labels=labels,
    )
    violations = verify_axioms(ring)
    if violations:
        raise BimoduleError(
            "assembled extension violates ring axioms: " + violations[0]
        )
    return ring


def _is_two_sided_subset(ring: FiniteRing, members: Sequence[int]) -> bool:
    inside = set(members)
    if ring.zero not in inside:
        return False
    for a in inside:
        for b in inside:
            if ring.add[a][b] not in inside:
                return False
        for r in range(ring.order):
            if ring.mul[a][r] not in inside or ring.mul[r][a] not in inside:
                return False
    return True


def build_quotient(
    ring: FiniteRing, ideal: ElementSet
) -> tuple[FiniteRing, tuple[int, ...]]:
    """Quotient by a two-sided ideal; returns the quotient and the projection."""
    members = ideal.indices()
    if not _is_two_sided_subset(ring, members):
        raise IdealError(
            f"subset {list(members)} is not a two-sided ideal of {ring.name}"
        )
    coset_of: list[int | None] = [None] * ring.order
    reps: list[int] = []
    for a in range(ring.order):
        if coset_of[a] is not None:
            continue
        members_of_a = sorted(ring.add[a][i] for i in members)
        rep_index = len(reps)
        reps.append(members_of_a[0])
        for m in members_of_a:
            coset_of[m] = rep_index
    # order cosets by least member; reps are discovered in ascending order
    proj = tuple(coset_of[a] for a in range(ring.order))  # type: ignore[misc]
    size = len(reps)
    add = tuple(
        tuple(proj[ring.add[reps[i]][reps[j]]] for j in range(size)) for i in range(size)
    )
    mul = tuple(
        tuple(proj[ring.mul[reps[i]][reps[j]]] for j in range(size)) for i in range(size)
    )
    labels = tuple(f"[{ring.label(r)}]" for r in reps)
    quotient = FiniteRing(
        order=size,
        add=add,
        mul=mul,
        zero=proj[ring.zero],
        one=proj[ring.one],
        name=f"{ring.name}/I{len(members)}",
        labels=labels,
    )
    return quotient, proj


def build_corner(ring: FiniteRing, e: int) -> FiniteRing:
    """The corner ring ``e R e`` for a central idempotent ``e``."""
    if not 0 <= e < ring.order:
        raise ValueError(f"element {e} out of range")
    if ring.mul[e][e] != e:
        raise ValueError(f"element {e} is not idempotent in {ring.name}")
    for r in range(ring.order):
        if ring.mul[e][r] != ring.mul[r][e]:
            raise ValueError(f"idempotent {e} is not central in {ring.name}")
    members = sorted({ring.mul[e][r] for r in range(ring.order)})
    position = {m: i for i, m in enumerate(members)}
    add = tuple(
        tuple(position[ring.add[a][b]] for b in members) for a in members
    )
    mul = tuple(
        tuple(position[ring.mul[a][b]] for b in members) for a in members
    )
    labels = tuple(ring.label(m) for m in members)
    return FiniteRing(
        order=len(members),
        add=add,
        mul=mul,
        zero=position[ring.zero],
        one=position[e],
        name=f"{ring.name}|e{e}",
        labels=labels,
    )


# --------------------------------------------------------------------------
# basic element sets


def element_sets(ring: FiniteRing) -> tuple[ElementSet, ElementSet, ElementSet]:
    """The (units, idempotents, nilpotents) of the ring, each cached."""

    def compute():
        n, mul = ring.order, ring.mul
        units = 0
        idem = 0
        nil = 0
        for a in range(n):
            if any(
                mul[a][b] == ring.one and mul[b][a] == ring.one for b in range(n)
            ):
                units |= 1 << a
            if mul[a][a] == a:
                idem |= 1 << a
            x = a
            for _ in range(n):
                if x == ring.zero:
                    nil |= 1 << a
                    break
                x = mul[x][a]
        return (
            ElementSet(units, n),
            ElementSet(idem, n),
            ElementSet(nil, n),
        )

    return cached_on(ring, "element_sets", compute)


def units_map(ring: FiniteRing) -> dict[int, int]:
    """Each unit mapped to its two-sided inverse."""

    def compute():
        n, mul, one = ring.order, ring.mul, ring.one
        out = {}
        for a in range(n):
            for b in range(n):
                if mul[a][b] == one and mul[b][a] == one:
                    out[a] = b
                    break
        return out

    return cached_on(ring, "units_map", compute)


def is_zmod2(ring: FiniteRing) -> bool:
    """True iff the ring is the two-element ring (any such ring is Z2)."""
    return ring.order == 2 and ring.one != ring.zero


# --------------------------------------------------------------------------
# JSON persistence


def ring_to_json(ring: FiniteRing) -> dict:
    obj = {
        "name": ring.name,
        "order": ring.order,
        "zero": ring.zero,
        "one": ring.one,
        "add": [list(row) for row in ring.add],
        "mul": [list(row) for row in ring.mul],
    }
    if ring.labels is not None:
        obj["labels"] = list(ring.labels)
    return obj


def ring_from_json(obj: dict) -> FiniteRing:
    if not isinstance(obj, dict):
        raise ValueError("ring data must be a JSON object")
    for key in ("order", "zero", "one", "add", "mul"):
        if key not in obj:
            raise ValueError(f"ring data missing required field {key!r}")
    order = obj["order"]
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    check_size(order)

    def table(key: str) -> tuple[tuple[int, ...], ...]:
        raw = obj[key]
        if not isinstance(raw, list) or len(raw) != order:
            raise ValueError(f"{key} table must be a list of {order} rows")
        rows = []
        for row in raw:
            if not isinstance(row, list) or len(row) != order:
                raise ValueError(f"{key} table rows must have length {order}")
            if not all(isinstance(v, int) for v in row):
                raise ValueError(f"{key} table entries must be integers")
            rows.append(tuple(row))
        return tuple(rows)

    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != order:
            raise ValueError(f"labels must be a list of {order} strings")
        labels = tuple(str(v) for v in labels)
    ring = FiniteRing(
        order=order,
        add=table("add"),
        mul=table("mul"),
        zero=obj["zero"],
        one=obj["one"],
        name=str(obj.get("name", "ring")),
        labels=labels,
    )
    violations = verify_axioms(ring)
    if violations:
        raise AxiomError(violations)
    return ring


def save_ring(ring: FiniteRing, path: str | Path) -> None:
    Path(path).write_text(json.dumps(ring_to_json(ring), indent=2) + "\n")


def load_ring(path: str | Path) -> FiniteRing:
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"{path} is not valid JSON: {err}") from None
    return ring_from_json(obj)

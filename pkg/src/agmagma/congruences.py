"""Congruences, quotients, and the extremal congruences of completely inverse
AG**-groupoids (least semilattice, maximum idempotent-separating, least
AG-group), together with the Lallement witness and the AG-group kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Magma, MagmaError, OrderTooLarge
from .ideals_green import Green, IdealKind, green, is_ideal, principal_ideal, right_translate
from .inverses import unique_inverse
from .laws import idempotents, is_ag_group, is_completely_inverse, is_semilattice
from .partition import Partition, UnionFind, restricted_growth_strings

ALL_CONGRUENCES_MAX_ORDER = 10


class NotACongruence(MagmaError):
    pass


class NotCompletelyInverse(MagmaError):
    pass


class BlockNotIdempotent(MagmaError):
    pass


class NoZeroIdempotent(MagmaError):
    pass


class NotAnIdeal(MagmaError):
    pass


class ClaimViolated(AssertionError):
    """A structural guarantee failed on a concrete input."""


@dataclass(frozen=True)
class Congruence:
    magma: Magma
    partition: Partition

    @property
    def reps(self) -> tuple:
        return self.partition.reps

    def related(self, a: int, b: int) -> bool:
        return self.partition.related(a, b)

    def blocks(self) -> list:
        return self.partition.blocks()

    def __str__(self) -> str:
        return str(self.partition)


@dataclass(frozen=True)
class Compatibility:
    holds: bool
    violation: Optional[tuple] = None  # (a, b, c, "right" | "left")

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class CongruenceFlags:
    semilattice: bool
    idempotent_separating: bool
    ag_group: bool


@dataclass(frozen=True)
class QuotientMap:
    magma: Magma
    projection: tuple

    def __call__(self, a: int) -> int:
        return self.projection[a]


@dataclass(frozen=True)
class Kernel:
    idempotent: int
    elements: frozenset
    phi: QuotientMap  # a -> e*a, onto the kernel relabelled in sorted order

    def image(self, a: int) -> int:
        return sorted(self.elements)[self.phi.projection[a]]


@dataclass(frozen=True)
class Extremal:
    least_semilattice: Congruence
    max_idempotent_separating: Congruence
    certified: bool


@dataclass(frozen=True)
class SubdirectResult:
    holds: bool
    sigma: Congruence
    rees: Congruence

    def __bool__(self) -> bool:
        return self.holds


def _as_partition(m: Magma, p) -> Partition:
    p = p.partition if isinstance(p, Congruence) else p
    if p.order != m.order:
        raise ValueError(f"universe size mismatch: partition on {p.order}, magma of order {m.order}")
    return p


def is_congruence(m: Magma, p) -> Compatibility:
    """First violation in order of ``(a, b, c)``; at each ``c`` the right
    translation ``a*c ~ b*c`` is tested before the left one ``c*a ~ c*b``.
    """
    p = _as_partition(m, p)
    t, r = m.table, p.reps
    for a, b in p.pairs():
        for c in m.elements:
            if r[t[a][c]] != r[t[b][c]]:
                return Compatibility(False, (a, b, c, "right"))
            if r[t[c][a]] != r[t[c][b]]:
                return Compatibility(False, (a, b, c, "left"))
    return Compatibility(True)


def _compatible(t, n: int, r) -> bool:
    # each element against its block representative suffices
    for a in range(n):
        ra = r[a]
        if ra == a:
            continue
        row_a, row_r = t[a], t[ra]
        for c in range(n):
            if r[row_a[c]] != r[row_r[c]] or r[t[c][a]] != r[t[c][ra]]:
                return False
    return True


def as_congruence(m: Magma, p) -> Congruence:
    p = _as_partition(m, p)
    if not _compatible(m.table, m.order, p.reps):
        raise NotACongruence(f"{p} is not compatible with the product")
    return Congruence(m, p)


def identity_congruence(m: Magma) -> Congruence:
    return Congruence(m, Partition.identity(m.order))


def universal_congruence(m: Magma) -> Congruence:
    return Congruence(m, Partition.universal(m.order))


def congruence_closure(m: Magma, pairs: Iterable[tuple] = ()) -> Congruence:
    """Least congruence containing ``pairs``."""
    t = m.table
    uf = UnionFind(m.order)
    queue = []
    for a, b in pairs:
        m.check_element(a)
        m.check_element(b)
        queue.append((a, b))
    while queue:
        a, b = queue.pop()
        if uf.union(a, b):
            for c in m.elements:
                queue.append((t[c][a], t[c][b]))
                queue.append((t[a][c], t[b][c]))
    return Congruence(m, Partition(uf.reps()))


def all_congruences(m: Magma) -> list:
    """Every congruence, most blocks first, then by representative sequence."""
    n = m.order
    if n > ALL_CONGRUENCES_MAX_ORDER:
        raise OrderTooLarge(
            f"exhaustive congruence search limited to order {ALL_CONGRUENCES_MAX_ORDER}, got {n}")
    t = m.table
    found = []
    for rgs in restricted_growth_strings(n):
        p = Partition.from_labels(rgs)
        if _compatible(t, n, p.reps):
            found.append(p)
    found.sort(key=lambda p: (-p.num_blocks, p.reps))
    return [Congruence(m, p) for p in found]


def quotient(m: Magma, rho) -> QuotientMap:
    p = _as_partition(m, rho)
    if not _compatible(m.table, m.order, p.reps):
        raise NotACongruence(f"{p} is not compatible with the product")
    reps = sorted(set(p.reps))
    index = {r: i for i, r in enumerate(reps)}
    t = m.table
    proj = tuple(index[r] for r in p.reps)
    table = [[proj[t[a][b]] for b in reps] for a in reps]
    return QuotientMap(Magma(table), proj)


def is_idempotent_separating(m: Magma, rho) -> bool:
    p = _as_partition(m, rho)
    es = idempotents(m)
    return len({p.reps[e] for e in es}) == len(es)


def classify_congruence(m: Magma, rho) -> CongruenceFlags:
    q = quotient(m, rho).magma
    return CongruenceFlags(
        semilattice=is_semilattice(q),
        idempotent_separating=is_idempotent_separating(m, rho),
        ag_group=is_ag_group(q),
    )


def _require_ci(m: Magma) -> None:
    if not is_completely_inverse(m):
        raise NotCompletelyInverse("input is not a completely inverse AG**-groupoid")


def lallement_witness(m: Magma, rho, a: int) -> int:
    """An idempotent ``e`` in the block of ``a`` with ``eA`` inside ``aA``.

    Built as ``e = a*(x*a)`` where ``x`` is the inverse of ``a*a``.
    """
    m.check_element(a)
    _require_ci(m)
    p = _as_partition(m, rho)
    t = m.table
    a2 = t[a][a]
    if not p.related(a, a2):
        raise BlockNotIdempotent(f"the block of {a} is not idempotent in the quotient")
    x = unique_inverse(m, a2)
    return t[a][t[x][a]]


def semilattice_zero(m: Magma) -> Optional[int]:
    _require_ci(m)
    t = m.table
    es = idempotents(m)
    for e in sorted(es):
        if all(t[e][f] == e for f in es):
            return e
    return None


def _zero_or_raise(m: Magma) -> int:
    e = semilattice_zero(m)
    if e is None:
        raise NoZeroIdempotent("the idempotent semilattice has no zero")
    return e


def kernel(m: Magma) -> Kernel:
    """``K = eA`` for the zero idempotent ``e``, with ``phi(a) = e*a``.

    Raises ClaimViolated if ``K`` is not the H-class of ``e``, not inside every
    principal ideal, not an AG-group, or ``phi`` is not a retraction onto it.
    """
    e = _zero_or_raise(m)
    t = m.table
    k = right_translate(m, e)
    if k != green(m, Green.H).block_of(e):
        raise ClaimViolated(f"eA = {sorted(k)} differs from the H-class of {e}")
    for a in m.elements:
        if not k <= principal_ideal(m, a, IdealKind.TWO_SIDED):
            raise ClaimViolated(f"kernel not contained in J({a})")
    sub = m.submagma(k)
    if not is_ag_group(sub):
        raise ClaimViolated("kernel is not an AG-group")
    elems = sorted(k)
    index = {x: i for i, x in enumerate(elems)}
    proj = tuple(index[t[e][a]] for a in m.elements)
    for x in k:
        if t[e][x] != x:
            raise ClaimViolated(f"phi does not fix {x}")
    for a in m.elements:
        for b in m.elements:
            if proj[t[a][b]] != sub.table[proj[a]][proj[b]]:
                raise ClaimViolated(f"phi is not a homomorphism at ({a}, {b})")
    return Kernel(e, k, QuotientMap(sub, proj))


def sigma(m: Magma) -> Congruence:
    """``a ~ b`` iff ``e*a = e*b`` for the zero idempotent ``e``."""
    e = _zero_or_raise(m)
    row = m.table[e]
    return as_congruence(m, Partition.from_key(m.order, row.__getitem__))


def rees_congruence(m: Magma, ideal) -> Congruence:
    ideal = frozenset(ideal)
    if not ideal or not is_ideal(m, ideal, IdealKind.TWO_SIDED):
        raise NotAnIdeal(f"{sorted(ideal)} is not a two-sided ideal")
    lo = min(ideal)
    return as_congruence(
        m, Partition(tuple(lo if a in ideal else a for a in m.elements)))


def subdirect_check(m: Magma) -> SubdirectResult:
    s = sigma(m)
    k = kernel(m)
    rees = rees_congruence(m, k.elements)
    return SubdirectResult(s.partition.meet(rees.partition).is_identity(), s, rees)


def extremal_congruences(m: Magma, certify: bool = True) -> Extremal:
    """H as both the least semilattice and the maximum idempotent-separating
    congruence.  Certified against the full congruence list when the order
    allows it; above that the result is returned with ``certified=False``.
    """
    _require_ci(m)
    h = as_congruence(m, green(m, Green.H))
    certified = False
    if certify and m.order <= ALL_CONGRUENCES_MAX_ORDER:
        hp = h.partition
        if not classify_congruence(m, h).semilattice:
            raise ClaimViolated("H is not a semilattice congruence")
        if not is_idempotent_separating(m, h):
            raise ClaimViolated("H is not idempotent-separating")
        for rho in all_congruences(m):
            flags = classify_congruence(m, rho)
            if flags.semilattice and not hp.refines(rho.partition):
                raise ClaimViolated(f"semilattice congruence {rho} does not contain H")
            if flags.idempotent_separating and not rho.partition.refines(hp):
                raise ClaimViolated(f"idempotent-separating congruence {rho} exceeds H")
        certified = True
    return Extremal(h, h, certified)

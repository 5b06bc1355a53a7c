"""Principal ideals, translation sets ``aA``/``Aa`` and Green's equivalences."""
from __future__ import annotations

import enum
from functools import lru_cache

from .core import Magma, MagmaError
from .partition import Partition


class EmptySet(MagmaError):
    pass


class IdealKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    A_RIGHT = "aA"
    A_LEFT = "Aa"


class Green(enum.Enum):
    L = "L"
    R = "R"
    J = "J"
    H = "H"
    D = "D"


def _closure(m: Magma, seed, left: bool, right: bool) -> frozenset:
    t = m.table
    members = set(seed)
    todo = list(members)
    while todo:
        s = todo.pop()
        for x in m.elements:
            for v in ((t[x][s],) if left else ()) + ((t[s][x],) if right else ()):
                if v not in members:
                    members.add(v)
                    todo.append(v)
    return frozenset(members)


@lru_cache(maxsize=65536)
def _principal(m: Magma, a: int, kind: IdealKind) -> frozenset:
    t = m.table
    if kind is IdealKind.A_RIGHT:
        return frozenset(t[a])
    if kind is IdealKind.A_LEFT:
        return frozenset(t[x][a] for x in m.elements)
    return _closure(m, (a,), kind is not IdealKind.RIGHT, kind is not IdealKind.LEFT)


def principal_ideal(m: Magma, a: int, kind: IdealKind) -> frozenset:
    m.check_element(a)
    return _principal(m, a, kind)


def right_translate(m: Magma, a: int) -> frozenset:
    """``aA``."""
    return principal_ideal(m, a, IdealKind.A_RIGHT)


def left_translate(m: Magma, a: int) -> frozenset:
    """``Aa``."""
    return principal_ideal(m, a, IdealKind.A_LEFT)


def is_ideal(m: Magma, s, kind: IdealKind = IdealKind.TWO_SIDED) -> bool:
    s = frozenset(s)
    if not s:
        raise EmptySet("ideals are nonempty by definition")
    if kind not in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED):
        raise ValueError(f"{kind} is not an ideal kind")
    t = m.table
    if kind is not IdealKind.RIGHT:
        if any(t[x][b] not in s for x in m.elements for b in s):
            return False
    if kind is not IdealKind.LEFT:
        if any(t[b][x] not in s for x in m.elements for b in s):
            return False
    return True


def set_product(m: Magma, s, u) -> frozenset:
    t = m.table
    return frozenset(t[a][b] for a in s for b in u)


@lru_cache(maxsize=4096)
def _green(m: Magma, rel: Green) -> Partition:
    n = m.order
    if rel is Green.H:
        return _green(m, Green.L).meet(_green(m, Green.R))
    if rel is Green.D:
        return _green(m, Green.L).join(_green(m, Green.R))
    kind = {Green.L: IdealKind.LEFT, Green.R: IdealKind.RIGHT,
            Green.J: IdealKind.TWO_SIDED}[rel]
    return Partition.from_key(n, lambda a: _principal(m, a, kind))


def green(m: Magma, rel: Green) -> Partition:
    return _green(m, Green(rel))


def hclass_leq(m: Magma, a: int, b: int) -> bool:
    """``H_a <= H_b`` iff ``aA`` is a subset of ``bA``."""
    return right_translate(m, a) <= right_translate(m, b)


def hclass_order(m: Magma) -> list:
    """Covering pairs ``(lower, upper)`` between H-class representatives."""
    reps = sorted(set(green(m, Green.H).reps))
    below = {(a, b) for a in reps for b in reps if a != b and hclass_leq(m, a, b)}
    return sorted((a, b) for a, b in below
                  if not any((a, c) in below and (c, b) in below for c in reps))
